"""Polyvector fields on K^3 with polynomial coefficients.

These are the Chevalley-Eilenberg cochains C^0 + C^1 + C^2 + C^3.  A blade is
a strictly increasing tuple of generator indices (0 = dx, 1 = dy, 2 = dz);
``()`` is the unit blade and ``(0, 1, 2)`` is omega = dx^dy^dz.
"""

from __future__ import annotations

from numbers import Rational
from typing import Mapping

from .errors import MixedDegree
from .exactpoly import ONE, ZERO, Poly

Blade = tuple[int, ...]

BLADES: tuple[Blade, ...] = ((), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2))
BLADE_ORDER = {b: n for n, b in enumerate(BLADES)}
OMEGA: Blade = (0, 1, 2)


def blade_sign(indices) -> tuple[int, Blade | None]:
    """Sort a sequence of generator indices, returning (sign, blade).

    The blade is ``None`` when an index repeats (the wedge vanishes).
    """
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0, None
    sign = 1
    # bubble sort; n <= 3
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return sign, tuple(idx)


class PolyVector:
    """Map from blades to polynomial coefficients; absent blades are zero."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[Blade, Poly] | None = None):
        clean: dict[Blade, Poly] = {}
        for blade, p in (coeffs or {}).items():
            sign, b = blade_sign(blade)
            if b is None:
                continue
            p = Poly.coerce(p)
            if sign < 0:
                p = -p
            if b in clean:
                p = clean[b] + p
            if p:
                clean[b] = p
            else:
                clean.pop(b, None)
        self._coeffs = clean

    @classmethod
    def scalar(cls, p) -> "PolyVector":
        return cls({(): Poly.coerce(p)})

    @classmethod
    def vector(cls, X1=ZERO, X2=ZERO, X3=ZERO) -> "PolyVector":
        return cls({(0,): X1, (1,): X2, (2,): X3})

    @classmethod
    def bivector(cls, xi12=ZERO, xi13=ZERO, xi23=ZERO) -> "PolyVector":
        return cls({(0, 1): xi12, (0, 2): xi13, (1, 2): xi23})

    @classmethod
    def trivector(cls, xi123=ZERO) -> "PolyVector":
        return cls({OMEGA: xi123})

    def component(self, blade: Blade) -> Poly:
        return self._coeffs.get(tuple(blade), ZERO)

    def items(self):
        return sorted(self._coeffs.items(), key=lambda t: BLADE_ORDER[t[0]])

    def blades(self) -> list[Blade]:
        return [b for b, _ in self.items()]

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def degrees(self) -> set[int]:
        return {len(b) for b in self._coeffs}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int | None:
        """Wedge degree of a homogeneous value; ``None`` for zero.

        Raises :class:`MixedDegree` for mixed values.
        """
        degs = self.degrees()
        if len(degs) > 1:
            raise MixedDegree(f"polyvector has mixed degrees {sorted(degs)}")
        return next(iter(degs)) if degs else None

    def homogeneous_part(self, k: int) -> "PolyVector":
        return PolyVector({b: p for b, p in self._coeffs.items() if len(b) == k})

    def __eq__(self, other) -> bool:
        if isinstance(other, PolyVector):
            return self._coeffs == other._coeffs
        if isinstance(other, (Poly, int, Rational)):
            return self == PolyVector.scalar(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other) -> "PolyVector":
        if not isinstance(other, PolyVector):
            return NotImplemented
        out = dict(self._coeffs)
        for b, p in other._coeffs.items():
            out[b] = out[b] + p if b in out else p
        return PolyVector(out)

    def __neg__(self) -> "PolyVector":
        return PolyVector({b: -p for b, p in self._coeffs.items()})

    def __sub__(self, other) -> "PolyVector":
        if not isinstance(other, PolyVector):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "PolyVector":
        """Coefficient-wise multiplication by a scalar or a Poly."""
        if isinstance(other, (int, Rational)):
            return PolyVector({b: p.scale(other) for b, p in self._coeffs.items()})
        if isinstance(other, Poly):
            return PolyVector({b: p * other for b, p in self._coeffs.items()})
        return NotImplemented

    __rmul__ = __mul__

    def map_coeffs(self, fn) -> "PolyVector":
        return PolyVector({b: fn(p) for b, p in self._coeffs.items()})

    def __repr__(self) -> str:
        from .frontend import print_pv

        return f"PolyVector({print_pv(self)!r})"


def wedge(u: PolyVector, v: PolyVector) -> PolyVector:
    out: dict[Blade, Poly] = {}
    for bu, pu in u.items():
        for bv, pv in v.items():
            sign, b = blade_sign(bu + bv)
            if b is None:
                continue
            term = pu * pv
            if sign < 0:
                term = -term
            out[b] = out[b] + term if b in out else term
    return PolyVector(out)


def component(u: PolyVector, blade: Blade) -> Poly:
    return u.component(blade)


def vsum(items) -> PolyVector:
    out: dict[Blade, Poly] = {}
    for v in items:
        for b, p in v.items():
            out[b] = out[b] + p if b in out else p
    return PolyVector(out)


ZERO_PV = PolyVector()
UNIT = PolyVector.scalar(ONE)
DX = PolyVector({(0,): ONE})
DY = PolyVector({(1,): ONE})
DZ = PolyVector({(2,): ONE})
OMEGA_PV = PolyVector({OMEGA: ONE})
