"""Command line driver: ``heisenberg-ce <command> ...``.

Exit status is 0 on success, 1 on domain errors (not a cocycle, invalid
class, degree problems) and 2 on syntax errors in an argument.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .cohomology import include, is_cocycle, normal_form
from .errors import EngineError, ParseError
from .frontend import (
    class_to_json,
    parse_class,
    parse_pv,
    print_class,
    print_pv,
    pv_to_json,
)
from .schouten import HEISENBERG_PI, delta_ce, schouten_closed, schouten_oracle
from .transfer import TransferTable, formality_step


class _Stdin:
    """Hands out stdin to arguments spelled ``-``: one line each, or all of it for a single ``-``."""

    def __init__(self, argv: Sequence[str], stream):
        self.count = sum(1 for a in argv if a == "-")
        self.stream = stream
        self.lines = None

    def resolve(self, text: str) -> str:
        if text != "-":
            return text
        if self.count == 1:
            return self.stream.read().strip()
        if self.lines is None:
            self.lines = [ln for ln in self.stream.read().splitlines() if ln.strip()]
        if not self.lines:
            raise ParseError("stdin exhausted", "", 0)
        return self.lines.pop(0)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="heisenberg-ce", description="Schouten calculus and homotopy transfer for the Heisenberg algebra")
    p.add_argument("--a", default="0", help="Euler-field parameter a (rational, default 0)")
    p.add_argument("--json", action="store_true", help="structured output")
    p.add_argument("--oracle", action="store_true", help="compute brackets with the superfunction oracle")
    p.add_argument("--gauge", default="x", choices=("x", "y"), help="divergence-solver tie-break")
    sub = p.add_subparsers(dest="command", required=True)
    for name, args in (("bracket", ("A", "B")), ("delta", ("A",)), ("cocycle", ("A",)), ("cohom", ("A",)),
                       ("d2", ("C1", "C2")), ("phi2", ("C1", "C2"))):
        s = sub.add_parser(name)
        for a in args:
            s.add_argument(a)
    f = sub.add_parser("formality")
    f.add_argument("--order", type=int, required=True)
    f.add_argument("classes", nargs="+")
    s = sub.add_parser("selfcheck")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=50)
    return p


def _emit(out, args, text_lines: list[str], doc) -> None:
    if args.json:
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        for line in text_lines:
            out.write(line + "\n")


def _run(args, stdin: _Stdin, out) -> int:
    bracket = schouten_oracle if args.oracle else schouten_closed
    a = Fraction(args.a)
    cmd = args.command

    if cmd == "bracket":
        u, v = parse_pv(stdin.resolve(args.A)), parse_pv(stdin.resolve(args.B))
        r = bracket(u, v)
        _emit(out, args, [print_pv(r)], pv_to_json(r))
    elif cmd == "delta":
        r = delta_ce(parse_pv(stdin.resolve(args.A)), HEISENBERG_PI, bracket)
        _emit(out, args, [print_pv(r)], pv_to_json(r))
    elif cmd == "cocycle":
        flag = delta_ce(parse_pv(stdin.resolve(args.A)), HEISENBERG_PI, bracket).is_zero()
        _emit(out, args, ["true" if flag else "false"], {"cocycle": flag})
    elif cmd == "cohom":
        res = normal_form(parse_pv(stdin.resolve(args.A)), None, a, args.gauge)
        _emit(out, args, [f"class: {print_class(res.cls)}", f"primitive: {print_pv(res.primitive)}"],
              {"class": class_to_json(res.cls), "primitive": pv_to_json(res.primitive)})
    elif cmd in ("d2", "phi2"):
        c1, c2 = parse_class(stdin.resolve(args.C1)), parse_class(stdin.resolve(args.C2))
        table = TransferTable(a=a, gauge=args.gauge, bracket=bracket)
        if cmd == "d2":
            r = table.d([c1, c2])
            if r is None:
                _emit(out, args, ["none"], {"class": None})
            else:
                _emit(out, args, [print_class(r)], {"class": class_to_json(r)})
        else:
            r = table.phi([c1, c2])
            _emit(out, args, [print_pv(r)], pv_to_json(r))
    elif cmd == "formality":
        word = [parse_class(stdin.resolve(c)) for c in args.classes]
        table = TransferTable(a=a, gauge=args.gauge, bracket=bracket)
        rep = formality_step(args.order, word, table)
        lines = [f"residual: {print_pv(rep.residual)}", f"cocycle: {str(rep.is_cocycle).lower()}"]
        doc = {"residual": pv_to_json(rep.residual), "cocycle": rep.is_cocycle, "in_range": rep.in_range,
               "obstructed": rep.obstructed}
        if rep.normal is not None:
            lines += [f"class: {print_class(rep.normal.cls)}", f"phi: {print_pv(rep.phi_value)}"]
            doc["class"] = class_to_json(rep.normal.cls)
            doc["phi"] = pv_to_json(rep.phi_value)
        if not rep.in_range:
            lines.append("note: target degree out of range")
        lines.append(f"obstructed: {str(rep.obstructed).lower()}")
        if rep.obstructed:
            lines.append("note: a nonzero value survives that no coboundary cancels")
        _emit(out, args, lines, doc)
    elif cmd == "selfcheck":
        results = selfcheck(args.seed, args.trials)
        _emit(out, args, [f"{'ok  ' if ok else 'FAIL'} {name}" for name, ok in results],
              {name: ok for name, ok in results})
        return 0 if all(ok for _, ok in results) else 1
    return 0


def selfcheck(seed: int = 0, trials: int = 50) -> list[tuple[str, bool]]:
    """Quick randomized sanity checks of the engine."""
    from .sampling import SampleConfig, Sampler

    s = Sampler(seed, SampleConfig(max_degree=3))
    results = []
    ok = True
    for _ in range(trials):
        i, j = s.rng.randint(0, 3), s.rng.randint(0, 3)
        u, v = s.cochain(i), s.cochain(j)
        ok &= schouten_closed(u, v) == schouten_oracle(u, v)
    results.append(("closed bracket agrees with oracle", ok))
    ok = all(delta_ce(delta_ce(s.cochain(k % 4))).is_zero() for k in range(trials))
    results.append(("delta squares to zero", ok))
    ok = True
    for k in range(trials):
        c = s.cls(k % 4)
        u = include(c)
        if k % 4:
            u = u + delta_ce(s.cochain(k % 4 - 1))
        ok &= is_cocycle(u) and normal_form(u, k % 4).cls == c
    results.append(("normal form recovers classes", ok))
    return results


def main(argv: Sequence[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # expressions such as "-z*dy" must not look like options; all options use "--"
    argv = [" " + a if a.startswith("-") and not a.startswith("--") and a not in ("-", "-h") else a for a in argv]
    stdin = sys.stdin if stdin is None else stdin
    out = sys.stdout if stdout is None else stdout
    err = sys.stderr if stderr is None else stderr
    args = _parser().parse_args(argv)
    try:
        return _run(args, _Stdin(argv, stdin), out)
    except ParseError as e:
        err.write(f"error: {args.command}: {e}\n")
        return 2
    except (EngineError, ZeroDivisionError, ValueError) as e:
        err.write(f"error: {args.command}: {e}\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
