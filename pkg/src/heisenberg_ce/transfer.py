"""Homotopy transfer of the Schouten bracket to cohomology, order by order.

Elements of cohomology are placed in H[2]: a class of Chevalley-Eilenberg
degree k has degree ``k - 2``.  Conventions (fixed once):

* ``D2(u, v) = (-1)^{|u|} [u, v]`` with ``|u|`` the degree in C[2]; it is
  graded symmetric, ``D2(u, v) = (-1)^{|u||v|} D2(v, u)``.
* ``nu(I)`` is the Koszul sign of moving the entries indexed by ``I`` to the
  front of the word, keeping their relative order.
* For a word ``y_1 ... y_{k+1}`` the transfer equation reads

      include(d_{k+1}(y)) - delta(phi_{k+1}(y)) = R(y)

      R(y) = sum_{{I, I^c}} nu(I) D2(phi(y_I), phi(y_{I^c}))
             - sum_{2 <= |I| <= k} nu(I) phi(d(y_I), y_{I^c})

  where the first sum runs over unordered splittings into two nonempty parts
  and ``phi_1 = include``.  ``R`` is always a cocycle when lower orders are
  consistent; its normal form gives ``d_{k+1} = cls`` and
  ``phi_{k+1} = -primitive``.

``d`` and ``phi`` are evaluated pointwise on concrete words and memoized in a
:class:`TransferTable`.  Words are canonicalized by sorting entries by
``(degree, structural key)``; reordering contributes a Koszul sign.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Optional, Sequence, Union

from .cohomology import (
    CLASS_TYPES,
    GAUGES,
    CohClass,
    NormalFormResult,
    include,
    is_cocycle,
    normal_form,
)
from .errors import DegreeOutOfRange, NotACocycle
from .polyvector import PolyVector, vsum
from .schouten import schouten_closed

DValue = Union[CohClass, PolyVector, None]


def scale_class(c: CohClass, s) -> CohClass:
    if s == 1:
        return c
    return CLASS_TYPES[c.degree](*(p.scale(s) for p in c.payload()))


@dataclass(frozen=True)
class ClassWord:
    entries: tuple[CohClass, ...]

    def __init__(self, entries: Sequence[CohClass]):
        object.__setattr__(self, "entries", tuple(entries))

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def degrees(self) -> tuple[int, ...]:
        """Degrees in H[2]."""
        return tuple(c.degree - 2 for c in self.entries)

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)

    def key(self) -> tuple:
        return tuple(c.key() for c in self.entries)

    def canonical(self) -> tuple[int, "ClassWord"]:
        """(sign, sorted word) with ``word = sign * sorted word`` in Sym(H[2])."""
        order = sorted(range(len(self.entries)), key=lambda i: self.entries[i].key())
        return permutation_sign(self.degrees, order), ClassWord([self.entries[i] for i in order])


def permutation_sign(degrees: Sequence[int], order: Sequence[int]) -> int:
    """Koszul sign of reordering elements with the given degrees into ``order``."""
    odd = 0
    for a in range(len(order)):
        for b in range(a + 1, len(order)):
            if order[a] > order[b] and degrees[order[a]] % 2 and degrees[order[b]] % 2:
                odd += 1
    return -1 if odd % 2 else 1


def koszul_sign(word: ClassWord | Sequence[int], subset: Sequence[int]) -> int:
    """Sign of moving ``subset`` (0-based indices) to the front of ``word``."""
    degrees = word.degrees if isinstance(word, ClassWord) else tuple(word)
    chosen = sorted(subset)
    if len(set(chosen)) != len(chosen) or any(i < 0 or i >= len(degrees) for i in chosen):
        raise IndexError(f"invalid subset {subset!r} for a word of length {len(degrees)}")
    rest = [i for i in range(len(degrees)) if i not in set(chosen)]
    return permutation_sign(degrees, chosen + rest)


def d2_operation(u: PolyVector, v: PolyVector, bracket=schouten_closed) -> PolyVector:
    """D2(u, v) = (-1)^{|u|} [u, v] with |u| the degree in C[2]."""
    if u.is_zero() or v.is_zero():
        return PolyVector()
    value = bracket(u, v)
    return -value if u.degree() % 2 else value


@dataclass
class ResidualReport:
    residual: PolyVector
    is_cocycle: bool
    normal: Optional[NormalFormResult]
    target_degree: int  # Chevalley-Eilenberg degree of the residual
    in_range: bool = True

    @property
    def d_value(self) -> DValue:
        if not self.in_range:
            return None
        if self.normal is not None:
            return self.normal.cls
        return self.residual

    @property
    def phi_value(self) -> PolyVector:
        if self.normal is None:
            return PolyVector()
        return -self.normal.primitive

    @property
    def z_constant_part(self) -> PolyVector:
        return self.residual.map_coeffs(lambda p: p.at_zero("z"))

    @property
    def obstructed(self) -> bool:
        """True when a nonzero class (or a non-cocycle) survives."""
        if not self.in_range:
            return False
        if not self.is_cocycle:
            return not self.residual.is_zero()
        return not self.normal.cls.is_zero()

    def scaled(self, s: int) -> "ResidualReport":
        if s == 1:
            return self
        normal = None
        if self.normal is not None:
            normal = NormalFormResult(scale_class(self.normal.cls, s), self.normal.primitive * s)
        return ResidualReport(self.residual * s, self.is_cocycle, normal, self.target_degree, self.in_range)


@dataclass
class TransferTable:
    """Session state: parameters of the contraction and memoized values.

    ``a`` is the Euler-field parameter of the H1 representatives and
    ``gauge`` the divergence-solver tie-break.  Not thread-safe; share only
    after all queries are done.
    """

    a: Fraction = Fraction(0)
    gauge: str = "x"
    bracket: Callable[[PolyVector, PolyVector], PolyVector] = schouten_closed
    reports: dict = field(default_factory=dict)

    def __post_init__(self):
        self.a = Fraction(self.a)
        if self.gauge not in GAUGES:
            raise ValueError(f"unknown gauge {self.gauge!r}; expected one of {GAUGES}")

    # public evaluators ---------------------------------------------------

    def phi(self, word: ClassWord | Sequence[CohClass]) -> PolyVector:
        word = _as_word(word)
        if len(word) == 1:
            return include(word.entries[0], self.a)
        if any(c.is_zero() for c in word.entries):
            return PolyVector()
        target = word.total_degree + 2
        if not 0 <= target <= 3:
            return PolyVector()
        sign, canon = word.canonical()
        return self._report(canon).phi_value * sign

    def d(self, word: ClassWord | Sequence[CohClass]) -> DValue:
        word = _as_word(word)
        if len(word) < 2:
            raise ValueError("d is defined on words of length >= 2")
        target = word.total_degree + 3
        if not 0 <= target <= 3:
            return None
        if any(c.is_zero() for c in word.entries):
            return CLASS_TYPES[target]()
        sign, canon = word.canonical()
        value = self._report(canon).d_value
        if isinstance(value, CohClass):
            return scale_class(value, sign)
        return value * sign

    def _report(self, canon: ClassWord) -> ResidualReport:
        key = canon.key()
        report = self.reports.get(key)
        if report is None:
            report = _step(canon, self)
            self.reports[key] = report
        return report

    # pieces of the residual ------------------------------------------------

    def _phi_of_d(self, dval: DValue, rest: Sequence[CohClass]) -> PolyVector:
        if dval is None:
            return PolyVector()
        if isinstance(dval, PolyVector):
            if dval.is_zero():
                return PolyVector()
            raise NotACocycle("a lower-order residual is not a cocycle; cannot continue the recursion")
        return self.phi([dval, *rest])


def _as_word(word) -> ClassWord:
    return word if isinstance(word, ClassWord) else ClassWord(word)


def _residual(word: ClassWord, table: TransferTable) -> PolyVector:
    n = len(word)
    entries = word.entries
    idx = range(n)
    terms = []
    # unordered splittings {I, I^c}: take I among nonempty subsets avoiding index 0
    for size in range(1, n):
        for I in combinations(range(1, n), size):
            Ic = [i for i in idx if i not in I]
            left = table.phi([entries[i] for i in I])
            right = table.phi([entries[i] for i in Ic])
            if left.is_zero() or right.is_zero():
                continue
            terms.append(d2_operation(left, right, table.bracket) * koszul_sign(word, I))
    for size in range(2, n):
        for I in combinations(idx, size):
            dval = table.d([entries[i] for i in I])
            value = table._phi_of_d(dval, [entries[i] for i in idx if i not in I])
            if not value.is_zero():
                terms.append(value * -koszul_sign(word, I))
    return vsum(terms)


def _step(word: ClassWord, table: TransferTable) -> ResidualReport:
    target = word.total_degree + 3
    if not 0 <= target <= 3:
        return ResidualReport(PolyVector(), True, None, target, in_range=False)
    R = _residual(word, table)
    if R.degrees() - {target}:
        raise AssertionError(f"residual has degrees {sorted(R.degrees())}, expected {target}")
    if is_cocycle(R):
        return ResidualReport(R, True, normal_form(R, target, table.a, table.gauge), target)
    return ResidualReport(R, False, None, target)


def _check_arity(k: int, word: ClassWord) -> None:
    if len(word) != k + 1:
        raise ValueError(f"order {k} needs a word of {k + 1} classes, got {len(word)}")


def formality_residual(k: int, word: ClassWord | Sequence[CohClass], table: TransferTable | None = None) -> PolyVector:
    """The cochain ``include(d_{k+1}) - delta(phi_{k+1})`` forced on ``word``."""
    word = _as_word(word)
    _check_arity(k, word)
    table = table if table is not None else TransferTable()
    target = word.total_degree + 3
    if not 0 <= target <= 3:
        raise DegreeOutOfRange(f"residual would have degree {target}")
    return _residual(word, table)


def formality_step(k: int, word: ClassWord | Sequence[CohClass], table: TransferTable | None = None) -> ResidualReport:
    """Solve order ``k`` on ``word``, recording ``d_{k+1}`` and ``phi_{k+1}``."""
    word = _as_word(word)
    _check_arity(k, word)
    table = table if table is not None else TransferTable()
    sign, canon = word.canonical()
    return table._report(canon).scaled(sign)


def d2(c1: CohClass, c2: CohClass, table: TransferTable | None = None) -> CohClass | None:
    """Induced bracket on cohomology; ``None`` when the target degree is empty."""
    table = table if table is not None else TransferTable()
    return table.d([c1, c2])


def phi2(c1: CohClass, c2: CohClass, table: TransferTable | None = None) -> PolyVector:
    table = table if table is not None else TransferTable()
    return table.phi([c1, c2])


__all__ = [
    "ClassWord",
    "ResidualReport",
    "TransferTable",
    "koszul_sign",
    "permutation_sign",
    "d2_operation",
    "d2",
    "phi2",
    "formality_residual",
    "formality_step",
    "scale_class",
]
