"""Perturb one sign of the transfer recursion at a time and count non-cocycle residuals.

With the adopted conventions every order-2 residual is a cocycle; flipping any
single sign breaks that on some degree combination.
"""

import argparse
import contextlib
import itertools
from dataclasses import dataclass
from unittest import mock

import heisenberg_ce.transfer as transfer
from heisenberg_ce.sampling import SampleConfig, Sampler
from heisenberg_ce.transfer import TransferTable, formality_step


@dataclass(frozen=True)
class AuditConfig:
    seed: int = 0
    words_per_combo: int = 3
    order: int = 2


def _flip_h0_h2(original):
    def phi(self, word):
        value = original(self, word)
        w = transfer._as_word(word)
        if len(w) == 2 and sorted(c.degree for c in w.entries) == [0, 2]:
            return -value
        return value
    return phi


_adopted_d2 = transfer.d2_operation

VARIANTS = {
    "adopted": [],
    "koszul sign ignored": [("koszul_sign", lambda word, subset: 1)],
    "no suspension sign in D2": [("d2_operation", lambda u, v, bracket=None: (bracket or transfer.schouten_closed)(u, v)
                                  if not (u.is_zero() or v.is_zero()) else transfer.PolyVector())],
    "D2 parity from CE degree - 1": [("d2_operation", lambda u, v, bracket=None: -_adopted_d2(u, v, bracket or transfer.schouten_closed))],
    "phi2(H0, H2) negated": [("TransferTable.phi", _flip_h0_h2(TransferTable.phi))],
}


def run(cfg: AuditConfig) -> dict[str, tuple[int, int]]:
    n = cfg.order + 1
    combos = [d for d in itertools.combinations_with_replacement(range(4), n) if 0 <= sum(d) - 2 * n + 3 <= 3]
    results = {}
    for name, patches in VARIANTS.items():
        smp = Sampler(cfg.seed, SampleConfig(max_degree=2, max_terms=3))
        with contextlib.ExitStack() as stack:
            _patched(stack, patches)
            bad = total = 0
            for degs in combos:
                for _ in range(cfg.words_per_combo):
                    rep = formality_step(cfg.order, [smp.cls(k, nonzero=True) for k in degs], TransferTable())
                    total += 1
                    bad += not rep.is_cocycle
        results[name] = (bad, total)
    return results


def _patched(stack: contextlib.ExitStack, patches) -> None:
    for target, value in patches:
        owner, _, attr = target.rpartition(".")
        obj = getattr(transfer, owner) if owner else transfer
        stack.enter_context(mock.patch.object(obj, attr, value))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--words", type=int, default=3)
    ap.add_argument("--order", type=int, default=2)
    args = ap.parse_args()
    for name, (bad, total) in run(AuditConfig(args.seed, args.words, args.order)).items():
        print(f"{name:28s} non-cocycle residuals: {bad}/{total}")


if __name__ == "__main__":
    main()
