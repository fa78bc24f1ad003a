"""Cohomology of the Heisenberg Lie algebra with values in K[x, y, z].

Representatives (``a`` is a fixed session parameter, ``D_a = a x dx +
(1-a) y dy + z dz`` and ``X_g = -dy(g) dx + dx(g) dy``):

    H0  psi(z)
    H1  X_{g0} + psi(z) D_a       g0 in K[x, y] without constant term
    H2  X_G ^ dz                  G = G0(x, y) + z G1(x, y), no pure-z terms
    H3  P(x, y) omega

:func:`normal_form` projects a cocycle ``u`` onto this family and returns a
primitive ``p`` with ``u = include(cls) + delta_ce(p)``.  These three maps
(inclusion, projection, primitive) are the contraction the transfer module
works with.

Whenever the procedure needs a solution of ``dx(A) + dy(B) = h`` the
``gauge`` argument picks it: ``"x"`` integrates in x (``B = 0``), ``"y"``
integrates in y (``A = 0``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeMismatch, InvalidClass, MixedDegree, NotACocycle, NotIntegrable
from .exactpoly import (
    ZERO,
    Poly,
    X,
    Y,
    Z,
    antiderivative,
    drop_pure_z,
    partial,
    z_split,
)
from .polyvector import OMEGA, PolyVector
from .schouten import HEISENBERG_PI, delta_ce

GAUGES = ("x", "y")


def hamiltonian(g: Poly) -> PolyVector:
    """X_g = -dy(g) dx + dx(g) dy."""
    return PolyVector.vector(-partial(g, "y"), partial(g, "x"))


def euler_field(a) -> PolyVector:
    a = Fraction(a)
    return PolyVector.vector(X.scale(a), Y.scale(1 - a), Z)


def apply_euler(p: Poly, a) -> Poly:
    """D_a(p)."""
    a = Fraction(a)
    return (X * partial(p, "x")).scale(a) + (Y * partial(p, "y")).scale(1 - a) + Z * partial(p, "z")


def poisson_xy(f: Poly, g: Poly) -> Poly:
    """{f, g} = dx f dy g - dx g dy f."""
    return partial(f, "x") * partial(g, "y") - partial(g, "x") * partial(f, "y")


# --- classes -----------------------------------------------------------------


class CohClass:
    """Base for the four representative families; subclasses set ``degree``."""

    degree: int

    def payload(self) -> tuple[Poly, ...]:
        raise NotImplementedError

    def key(self) -> tuple:
        return (self.degree,) + tuple(tuple(sorted(p.items())) for p in self.payload())

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.payload())

    @property
    def shifted_degree(self) -> int:
        return self.degree - 1

    @property
    def double_shifted_degree(self) -> int:
        return self.degree - 2

    def __str__(self) -> str:
        from .frontend import print_class

        return print_class(self)


def _set(obj, name, value):
    object.__setattr__(obj, name, value)


@dataclass(frozen=True)
class H0(CohClass):
    psi: Poly = ZERO
    degree = 0

    def __post_init__(self):
        _set(self, "psi", Poly.coerce(self.psi))
        if not self.psi.only_in("z"):
            raise InvalidClass("H0: psi must be a polynomial in z only")

    def payload(self):
        return (self.psi,)


@dataclass(frozen=True)
class H1(CohClass):
    g0: Poly = ZERO
    psi: Poly = ZERO
    degree = 1

    def __post_init__(self):
        g0, psi = Poly.coerce(self.g0), Poly.coerce(self.psi)
        if not g0.free_of("z"):
            raise InvalidClass("H1: g0 must not depend on z")
        if not psi.only_in("z"):
            raise InvalidClass("H1: psi must be a polynomial in z only")
        # constants do not change X_{g0}
        _set(self, "g0", drop_pure_z(g0))
        _set(self, "psi", psi)

    def payload(self):
        return (self.g0, self.psi)


@dataclass(frozen=True)
class H2(CohClass):
    G: Poly = ZERO
    degree = 2

    def __post_init__(self):
        G = Poly.coerce(self.G)
        if G.degree("z") > 1:
            raise InvalidClass("H2: G must have z-degree at most 1")
        # pure-z terms do not change X_G
        _set(self, "G", drop_pure_z(G))

    def payload(self):
        return (self.G,)


@dataclass(frozen=True)
class H3(CohClass):
    P: Poly = ZERO
    degree = 3

    def __post_init__(self):
        _set(self, "P", Poly.coerce(self.P))
        if not self.P.free_of("z"):
            raise InvalidClass("H3: P must not depend on z")

    def payload(self):
        return (self.P,)


CLASS_TYPES = {0: H0, 1: H1, 2: H2, 3: H3}


def zero_class(degree: int) -> CohClass:
    return CLASS_TYPES[degree]()


def include(c: CohClass, a=0) -> PolyVector:
    """Representative cocycle of a class."""
    if isinstance(c, H0):
        return PolyVector.scalar(c.psi)
    if isinstance(c, H1):
        return hamiltonian(c.g0) + euler_field(a) * c.psi
    if isinstance(c, H2):
        X_G = hamiltonian(c.G)
        return PolyVector.bivector(ZERO, X_G.component((0,)), X_G.component((1,)))
    if isinstance(c, H3):
        return PolyVector.trivector(c.P)
    raise InvalidClass(f"not a cohomology class: {c!r}")


def class_equal(c1: CohClass, c2: CohClass) -> bool:
    if c1.degree != c2.degree:
        raise DegreeMismatch(f"cannot compare H{c1.degree} with H{c2.degree}")
    return c1 == c2


# --- solvers -------------------------------------------------------------------


def solve_divergence(h: Poly, gauge: str = "x") -> tuple[Poly, Poly]:
    """Return (A, B) with dx(A) + dy(B) = h."""
    if gauge == "x":
        return antiderivative(h, "x"), ZERO
    if gauge == "y":
        return ZERO, antiderivative(h, "y")
    raise ValueError(f"unknown gauge {gauge!r}; expected one of {GAUGES}")


def reconstruct_potential(U: Poly, V: Poly) -> Poly:
    """Find g with -dy(g) = U and dx(g) = V.

    Requires dx(U) + dy(V) = 0.  The returned g has no pure-z terms.
    """
    if partial(U, "x") + partial(V, "y"):
        raise NotIntegrable("dx(U) + dy(V) must vanish")
    return antiderivative(V, "x") - antiderivative(U.at_zero("x"), "y")


def is_cocycle(u: PolyVector, pi: PolyVector = HEISENBERG_PI) -> bool:
    return delta_ce(u, pi).is_zero()


# --- normal form ---------------------------------------------------------------


@dataclass(frozen=True)
class NormalFormResult:
    cls: CohClass
    primitive: PolyVector


def _normal_form_0(u: PolyVector, a, gauge) -> NormalFormResult:
    return NormalFormResult(H0(u.component(())), PolyVector())


def _normal_form_1(u: PolyVector, a, gauge) -> NormalFormResult:
    a = Fraction(a)
    X1, X2, X3 = (u.component((i,)) for i in range(3))
    rest, psi = z_split(X3)
    if rest or not psi.only_in("z"):
        raise NotACocycle("degree 1: dz-component must be z*psi(z)")
    U = X1 - (X * psi).scale(a)
    V = X2 - (Y * psi).scale(1 - a)
    g0, g1 = z_split(reconstruct_potential(U, V))
    # X_{z g1} = -delta(g1)
    return NormalFormResult(H1(g0, psi), PolyVector.scalar(-g1))


def _normal_form_2(u: PolyVector, a, gauge) -> NormalFormResult:
    h = u.component((0, 1))
    g = reconstruct_potential(u.component((0, 2)), u.component((1, 2)))
    g0, g1 = z_split(g)
    g10, g11 = z_split(g1)
    h0_tilde, h1 = z_split(h)
    A, B = solve_divergence(g11 - h1, gauge)
    h0 = h0_tilde - g10
    # u + delta(A dx + B dy + g1 dz) + delta(h0 dz) = X_{g0 - z h0} ^ dz
    primitive = PolyVector.vector(-A, -B, -(g1 + h0))
    return NormalFormResult(H2(g0 - Z * h0), primitive)


def _normal_form_3(u: PolyVector, a, gauge) -> NormalFormResult:
    xi0, xi1 = z_split(u.component(OMEGA))
    A, B = solve_divergence(-xi1, gauge)
    return NormalFormResult(H3(xi0), PolyVector.bivector(ZERO, -A, -B))


_NORMAL_FORMS = (_normal_form_0, _normal_form_1, _normal_form_2, _normal_form_3)


def normal_form(u: PolyVector, degree: int | None = None, a=0, gauge: str = "x") -> NormalFormResult:
    """Project a cocycle onto its representative and return a primitive.

    ``degree`` is only needed when ``u`` is zero.
    """
    if not u.is_homogeneous():
        raise MixedDegree(f"normal_form: argument has mixed degrees {sorted(u.degrees())}")
    k = u.degree()
    if k is None:
        if degree is None:
            raise ValueError("normal_form: degree is required for the zero cochain")
        k = degree
    elif degree is not None and degree != k:
        raise DegreeMismatch(f"normal_form: expected degree {degree}, got {k}")
    if gauge not in GAUGES:
        raise ValueError(f"unknown gauge {gauge!r}; expected one of {GAUGES}")
    if not is_cocycle(u):
        raise NotACocycle(f"normal_form: degree-{k} cochain is not a cocycle")
    return _NORMAL_FORMS[k](u, a, gauge)
