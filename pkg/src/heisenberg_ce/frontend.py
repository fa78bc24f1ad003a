"""Expression language for polynomials, polyvectors and cohomology classes.

Grammar (whitespace is insignificant)::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/" | "^") factor)*
    factor := ("-" | "+") factor | power
    power  := atom ("**" INT)?
    atom   := INT | "x" | "y" | "z" | "dx" | "dy" | "dz" | "(" expr ")"
    class  := "H0{" expr "}" | "H1{" expr ";" expr "}" | "H2{" expr "}" | "H3{" expr "}"

``*`` and ``^`` are both the wedge product (for functions that is ordinary
multiplication); ``/`` only accepts a nonzero constant on its right.  There
is no implicit multiplication.

The printer emits the canonical form: blades in the order 1, dx, dy, dz,
dx^dy, dx^dz, dy^dz, dx^dy^dz; within a blade monomials in graded-lex order
(x > y > z); coefficients as integers or ``num/den``.

JSON schema (stable)::

    poly       = [{"exp": [i, j, k], "coeff": "num/den"}, ...]
    polyvector = {"type": "polyvector", "blades": {"1" | "dx" | ... | "dx^dy^dz": poly}}
    class      = {"type": "class", "kind": "H0" | "H1" | "H2" | "H3",
                  "psi": poly} | {"g0": poly, "psi": poly} | {"G": poly} | {"P": poly}
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import InvalidClass, ParseError
from .exactpoly import ONE, Poly
from .polyvector import BLADES, Blade, PolyVector, wedge

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>\*\*|[-+*/^(){};]))")

_VARIABLES = {
    "x": PolyVector.scalar(Poly.monomial(1, 0, 0)),
    "y": PolyVector.scalar(Poly.monomial(0, 1, 0)),
    "z": PolyVector.scalar(Poly.monomial(0, 0, 1)),
    "dx": PolyVector({(0,): ONE}),
    "dy": PolyVector({(1,): ONE}),
    "dz": PolyVector({(2,): ONE}),
}
_ATOM_START = ("INT", "(", "x", "y", "z", "dx", "dy", "dz", "-", "+")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m:
            rest = text[pos:]
            if rest.strip() == "":
                break
            bad = pos + len(rest) - len(rest.lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def _is(self, value):
        kind, val, _ = self.tok
        return kind in ("op", "name") and val == value

    def _fail(self, message, expected):
        kind, val, pos = self.tok
        got = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"{message}: got {got}", self.text, pos, expected)

    def expect(self, value):
        if not self._is(value):
            self._fail(f"expected {value!r}", [value])
        self.i += 1

    def expr(self) -> PolyVector:
        value = self.term()
        while self._is("+") or self._is("-"):
            op = self.tok[1]
            self.i += 1
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> PolyVector:
        value = self.factor()
        while self._is("*") or self._is("^") or self._is("/"):
            op, pos = self.tok[1], self.tok[2]
            self.i += 1
            rhs = self.factor()
            if op == "/":
                c = _as_constant(rhs)
                if c is None or c == 0:
                    raise ParseError("division only by a nonzero constant", self.text, pos)
                value = value * (1 / c)
            else:
                value = wedge(value, rhs)
        return value

    def factor(self) -> PolyVector:
        if self._is("-"):
            self.i += 1
            return -self.factor()
        if self._is("+"):
            self.i += 1
            return self.factor()
        return self.power()

    def power(self) -> PolyVector:
        base = self.atom()
        if self._is("**"):
            self.i += 1
            kind, val, _ = self.tok
            if kind != "num":
                self._fail("exponent must be a non-negative integer", ["INT"])
            self.i += 1
            result = PolyVector.scalar(ONE)
            for _ in range(int(val)):
                result = wedge(result, base)
            return result
        return base

    def atom(self) -> PolyVector:
        kind, val, _ = self.tok
        if kind == "num":
            self.i += 1
            return PolyVector.scalar(Poly.const(int(val)))
        if kind == "name" and val in _VARIABLES:
            self.i += 1
            return _VARIABLES[val]
        if self._is("("):
            self.i += 1
            value = self.expr()
            self.expect(")")
            return value
        self._fail("expected an operand", _ATOM_START)

    def finish(self):
        if self.tok[0] != "end":
            self._fail("unexpected trailing input", ["end of input", "+", "-", "*", "/", "^", "**"])


def _as_constant(u: PolyVector) -> Fraction | None:
    if u.is_zero():
        return Fraction(0)
    if u.blades() != [()]:
        return None
    p = u.component(())
    if any(e != (0, 0, 0) for e, _ in p.items()):
        return None
    return p.constant_term()


def parse_pv(text: str) -> PolyVector:
    p = _Parser(text)
    value = p.expr()
    p.finish()
    return value


def parse_poly(text: str) -> Poly:
    u = parse_pv(text)
    if any(b != () for b in u.blades()):
        raise InvalidClass(f"expected a polynomial without blades: {text!r}")
    return u.component(())


def parse_class(text: str):
    from .cohomology import CLASS_TYPES

    p = _Parser(text)
    kind, val, _ = p.tok
    if kind != "name" or val not in ("H0", "H1", "H2", "H3"):
        p._fail("expected a class literal", ["H0", "H1", "H2", "H3"])
    p.i += 1
    degree = int(val[1])
    p.expect("{")
    parts = [p.expr()]
    if degree == 1:
        p.expect(";")
        parts.append(p.expr())
    p.expect("}")
    p.finish()
    payload = []
    for u in parts:
        if any(b != () for b in u.blades()):
            raise InvalidClass(f"{val}: payload must be a polynomial without blades")
        payload.append(u.component(()))
    return CLASS_TYPES[degree](*payload)


# --- printing -------------------------------------------------------------------

_VAR_NAMES = ("x", "y", "z")
_BLADE_NAMES = {(): "", (0,): "dx", (1,): "dy", (2,): "dz"}
_BLADE_NAMES.update({b: "^".join("d" + _VAR_NAMES[i] for i in b) for b in BLADES if len(b) > 1})
_BLADE_BY_NAME = {(v or "1"): b for b, v in _BLADE_NAMES.items()}


def _monomial(exp) -> str:
    parts = []
    for name, e in zip(_VAR_NAMES, exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}**{e}")
    return "*".join(parts)


def _format_terms(terms) -> str:
    """terms: iterable of (coefficient, [factor strings])."""
    out = []
    for c, factors in terms:
        mag = abs(c)
        factors = [f for f in factors if f]
        if mag != 1 or not factors:
            factors = [str(mag)] + factors
        body = "*".join(factors)
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out) or "0"


def print_poly(p: Poly) -> str:
    return _format_terms((c, [_monomial(e)]) for e, c in p.sorted_terms())


def print_pv(u: PolyVector) -> str:
    terms = []
    for blade, p in u.items():
        for e, c in p.sorted_terms():
            terms.append((c, [_monomial(e), _BLADE_NAMES[blade]]))
    return _format_terms(terms)


def print_class(c) -> str:
    return f"H{c.degree}{{{'; '.join(print_poly(p) for p in c.payload())}}}"


# --- JSON -------------------------------------------------------------------

_CLASS_FIELDS = {0: ("psi",), 1: ("g0", "psi"), 2: ("G",), 3: ("P",)}


def _coeff_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def poly_to_json(p: Poly) -> list:
    return [{"exp": list(e), "coeff": _coeff_str(c)} for e, c in p.sorted_terms()]


def poly_from_json(data) -> Poly:
    return Poly({tuple(t["exp"]): Fraction(t["coeff"]) for t in data})


def pv_to_json(u: PolyVector) -> dict:
    return {
        "type": "polyvector",
        "blades": {(_BLADE_NAMES[b] or "1"): poly_to_json(p) for b, p in u.items()},
    }


def pv_from_json(data) -> PolyVector:
    if data.get("type") != "polyvector":
        raise ValueError("not a polyvector document")
    return PolyVector({_BLADE_BY_NAME[name]: poly_from_json(t) for name, t in data["blades"].items()})


def class_to_json(c) -> dict:
    out = {"type": "class", "kind": f"H{c.degree}"}
    for name, p in zip(_CLASS_FIELDS[c.degree], c.payload()):
        out[name] = poly_to_json(p)
    return out


def class_from_json(data):
    from .cohomology import CLASS_TYPES

    if data.get("type") != "class":
        raise ValueError("not a class document")
    degree = int(data["kind"][1])
    return CLASS_TYPES[degree](*(poly_from_json(data[f]) for f in _CLASS_FIELDS[degree]))


def blade_name(b: Blade) -> str:
    return _BLADE_NAMES[b] or "1"
