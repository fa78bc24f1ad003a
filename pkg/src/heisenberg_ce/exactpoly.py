"""Exact polynomials in x, y, z over the rationals.

A :class:`Poly` is a canonical map from exponent triples ``(i, j, k)`` (for
``x**i * y**j * z**k``) to nonzero :class:`fractions.Fraction` coefficients.
Values are immutable; every operation returns a new canonical ``Poly``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

Exp = tuple[int, int, int]
Scalar = Union[int, Fraction]

VARS = ("x", "y", "z")
_VAR_INDEX = {"x": 0, "y": 1, "z": 2, 0: 0, 1: 1, 2: 2}


def var_index(var) -> int:
    try:
        return _VAR_INDEX[var]
    except KeyError:
        raise ValueError(f"unknown variable {var!r}; expected one of x, y, z") from None


class Poly:
    """Polynomial in x, y, z with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exp, Scalar] | None = None):
        clean: dict[Exp, Fraction] = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != 3 or any((not isinstance(e, int)) or e < 0 for e in exp):
                    raise ValueError(f"bad exponent triple {exp!r}")
                c = Fraction(c)
                if c:
                    clean[tuple(exp)] = clean.get(tuple(exp), 0) + c
            clean = {e: c for e, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exp, Fraction]) -> "Poly":
        # terms already canonical (no zero coefficients)
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, k: int, c: Scalar = 1) -> "Poly":
        return cls({(i, j, k): c})

    @classmethod
    def coerce(cls, value) -> "Poly":
        if isinstance(value, Poly):
            return value
        if isinstance(value, (int, Rational)):
            return cls.const(Fraction(value))
        raise TypeError(f"cannot coerce {type(value).__name__} to Poly")

    @property
    def terms(self) -> dict[Exp, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exp: Exp) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == Poly.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> "Poly":
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return Poly.coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        out: dict[Exp, Fraction] = {}
        for (a, b, c), u in self._terms.items():
            for (d, e, f), v in other._terms.items():
                key = (a + d, b + e, c + f)
                out[key] = out.get(key, 0) + u * v
        return Poly._raw({e: c for e, c in out.items() if c})

    def __rmul__(self, other) -> "Poly":
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: Scalar) -> "Poly":
        c = Fraction(c)
        if not c:
            return ZERO
        return Poly._raw({e: v * c for e, v in self._terms.items()})

    def degree(self, var=None) -> int:
        """Total degree, or degree in one variable; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(e) for e in self._terms)
        i = var_index(var)
        return max(e[i] for e in self._terms)

    def free_of(self, *vars) -> bool:
        idx = [var_index(v) for v in vars]
        return all(e[i] == 0 for e in self._terms for i in idx)

    def only_in(self, var) -> bool:
        i = var_index(var)
        return all(all(e[j] == 0 for j in range(3) if j != i) for e in self._terms)

    def at_zero(self, var) -> "Poly":
        """Substitute ``var = 0``."""
        i = var_index(var)
        return Poly._raw({e: c for e, c in self._terms.items() if e[i] == 0})

    def constant_term(self) -> Fraction:
        return self._terms.get((0, 0, 0), Fraction(0))

    def sorted_terms(self) -> list[tuple[Exp, Fraction]]:
        """Terms in graded-lex order, x > y > z, highest first."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __repr__(self) -> str:
        from .frontend import print_poly

        return f"Poly({print_poly(self)!r})"


ZERO = Poly()
ONE = Poly.const(1)
X = Poly.monomial(1, 0, 0)
Y = Poly.monomial(0, 1, 0)
Z = Poly.monomial(0, 0, 1)


def poly_sum(items: Iterable[Poly]) -> Poly:
    out: dict[Exp, Fraction] = {}
    for p in items:
        for e, c in p.items():
            out[e] = out.get(e, 0) + c
    return Poly._raw({e: c for e, c in out.items() if c})


def ring_op(kind: str, p: Poly, q) -> Poly:
    """Dispatch ``add``/``sub``/``mul``/``scale`` on ``p`` and ``q``."""
    if kind == "add":
        return p + q
    if kind == "sub":
        return p - q
    if kind == "mul":
        return p * Poly.coerce(q)
    if kind == "scale":
        return p.scale(q)
    raise ValueError(f"unknown ring operation {kind!r}")


def partial(p: Poly, var) -> Poly:
    i = var_index(var)
    out = {}
    for e, c in p.items():
        if e[i]:
            f = list(e)
            f[i] -= 1
            out[tuple(f)] = c * e[i]
    return Poly._raw(out)


def antiderivative(p: Poly, var) -> Poly:
    """Antiderivative in ``var`` with zero integration constant."""
    i = var_index(var)
    out = {}
    for e, c in p.items():
        f = list(e)
        f[i] += 1
        out[tuple(f)] = c / f[i]
    return Poly._raw(out)


def z_split(p: Poly) -> tuple[Poly, Poly]:
    """Return ``(p0, p1)`` with ``p = p0 + z*p1`` and ``p0`` free of z."""
    p0, p1 = {}, {}
    for (i, j, k), c in p.items():
        if k == 0:
            p0[(i, j, k)] = c
        else:
            p1[(i, j, k - 1)] = c
    return Poly._raw(p0), Poly._raw(p1)


def mul_z(p: Poly, n: int = 1) -> Poly:
    return Poly._raw({(i, j, k + n): c for (i, j, k), c in p.items()})


def drop_pure_z(p: Poly) -> Poly:
    """Remove monomials that involve z alone (constants included)."""
    return Poly._raw({e: c for e, c in p.items() if e[0] or e[1]})
