"""Closed forms for brackets of representatives and for the order-1 table.

``*_stated`` functions transcribe the formulas as published; ``*_corrected``
ones carry the fixes recorded in the errata notes.  All take plain Polys and
the Euler parameter ``a``.
"""

from heisenberg_ce.cohomology import apply_euler, hamiltonian, poisson_xy, solve_divergence
from heisenberg_ce.exactpoly import ZERO, Z, partial, poly_sum, z_split
from heisenberg_ce.polyvector import DZ, PolyVector, wedge
from heisenberg_ce.schouten import delta_ce


def dz(p):
    return partial(p, "z")


def wedge_dz(p):
    """X_p ^ dz."""
    return wedge(hamiltonian(p), DZ)


def scalar(p):
    return PolyVector.scalar(p)


def vec_apply(V: PolyVector, f):
    return poly_sum(V.component((i,)) * partial(f, "xyz"[i]) for i in range(3))


# --- cochain-level brackets of representatives -----------------------------


def bracket_h0_h1(phi, psi):
    return scalar(-Z * psi * dz(phi))


def bracket_h0_h2(phi, g, coboundary_sign=1):
    g0, g1 = z_split(g * dz(phi))
    return hamiltonian(g0) + delta_ce(scalar(g1)) * coboundary_sign


def bracket_h0_h3(phi, P):
    return PolyVector.bivector(-P * dz(phi))


def bracket_h0_h3_split(phi, P):
    return delta_ce(PolyVector.vector(ZERO, ZERO, P * dz(phi))) + wedge_dz(P * Z * dz(phi))


def _h1_h1_class_part(g0, phi, h0, psi, a):
    Da = lambda p: apply_euler(p, a)  # noqa: E731
    phi0, psi0 = z_split(phi)[0], z_split(psi)[0]
    L = poisson_xy(g0, h0) + phi0 * (Da(h0) - h0) - psi0 * (Da(g0) - g0)
    from heisenberg_ce.cohomology import euler_field

    return hamiltonian(L) + euler_field(a) * (Z * (phi * dz(psi) - dz(phi) * psi))


def h1_h1_coboundary_stated(g0, phi, h0, psi, a):
    Da = lambda p: apply_euler(p, a)  # noqa: E731
    return dz(psi) * (Da(g0) - g0) - dz(phi) * (Da(h0) - h0)


def h1_h1_coboundary_corrected(g0, phi, h0, psi, a):
    Da = lambda p: apply_euler(p, a)  # noqa: E731
    return z_split(psi)[1] * (Da(g0) - g0) - z_split(phi)[1] * (Da(h0) - h0)


def bracket_h1_h1(g0, phi, h0, psi, a, corrected=False):
    m = (h1_h1_coboundary_corrected if corrected else h1_h1_coboundary_stated)(g0, phi, h0, psi, a)
    return _h1_h1_class_part(g0, phi, h0, psi, a) + delta_ce(scalar(m))


def bracket_h1_h2(g0, phi, p, a, corrected=False):
    Da = lambda q: apply_euler(q, a)  # noqa: E731
    zf = Z * dz(phi) if corrected else dz(phi)
    L = poisson_xy(g0, p) + phi * (Da(p) - p) - p * (zf + phi) - Z * dz(phi) * (Da(p) - Z * dz(p))
    prim = PolyVector.vector(ZERO, ZERO, -dz(phi) * (Da(p) - Z * dz(p)))
    return wedge_dz(L) + delta_ce(prim)


def bracket_h1_h3(g0, phi, P, a):
    Da = lambda q: apply_euler(q, a)  # noqa: E731
    return PolyVector.trivector(vec_apply(hamiltonian(g0), P) + phi * (Da(P) - 2 * P) - P * Z * dz(phi))


def bracket_h1_h3_split(g0, phi, P, a):
    Da = lambda q: apply_euler(q, a)  # noqa: E731
    phi0, phi1 = z_split(phi)
    A, _ = solve_divergence(h1_h3_divergence(phi, P, a))
    return (PolyVector.trivector(vec_apply(hamiltonian(g0), P) + phi0 * (Da(P) - 2 * P))
            + delta_ce(PolyVector.bivector(ZERO, A, ZERO)))


def h1_h3_divergence(phi, P, a):
    return z_split(phi)[1] * (apply_euler(P, a) - 2 * P) - P * dz(phi)


def bracket_h2_h2(f, g):
    f0, f1 = z_split(f)
    g0, g1 = z_split(g)
    return PolyVector.trivector(poisson_xy(f0, g1) + poisson_xy(g0, f1))


# --- order-1 table ------------------------------------------------------------


def phi2_h0_h2(phi, g):
    return scalar(-z_split(g * dz(phi))[1])


def phi2_h0_h3(phi, P):
    return PolyVector.vector(ZERO, ZERO, -P * dz(phi))


def phi2_h1_h1(g0, phi, h0, psi, a):
    return scalar(h1_h1_coboundary_stated(g0, phi, h0, psi, a))


def phi2_h1_h2(g0, phi, p, a):
    return PolyVector.vector(ZERO, ZERO, -dz(phi) * (apply_euler(p, a) - Z * dz(p)))


def phi2_h1_h3_solution(phi, P, a):
    """One solution: dx phi13 + dy phi23 equal to the required divergence."""
    A, _ = solve_divergence(h1_h3_divergence(phi, P, a))
    return PolyVector.bivector(ZERO, A, ZERO)


# --- order-2 values -------------------------------------------------------------


def d3_h0_h0_h3(phi, psi, P):
    return scalar(4 * P * dz(phi) * dz(psi))


def d3_h0_h3_h3_z_constant(phi, P, Q):
    second = partial(dz(phi), "z").at_zero("z")
    return PolyVector.trivector(-2 * P * Q * second)
