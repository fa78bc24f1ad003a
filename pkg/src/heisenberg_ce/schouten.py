"""Schouten-Nijenhuis bracket on polyvector fields in three variables.

Sign conventions, written down once:

* ``|u|`` denotes the shifted degree (wedge degree - 1).  With it the bracket
  is graded antisymmetric, ``[v, u] = -(-1)^{|u||v|} [u, v]``, satisfies the
  graded Jacobi identity

      (-1)^{|a||c|} [[a,b],c] + (-1)^{|b||a|} [[b,c],a] + (-1)^{|c||b|} [[c,a],b] = 0

  and the graded Leibniz rule
  ``[a, b^c] = [a,b]^c + (-1)^{|a|(|b|+1)} b^[a,c]``.
* The wedge product is graded commutative in the *unshifted* degree.
* ``[X, f] = X(f)`` for a vector field X and a function f, and on vector
  fields the bracket is the usual Lie bracket.
* ``delta_ce(u) = [pi, u]`` with ``pi = z dx^dy`` for the Heisenberg algebra.

Two independent routes compute the bracket.  :func:`schouten_closed` is a
table of coordinate formulas for each pair of degrees; it never looks at pi.
:func:`schouten_oracle` encodes a polyvector as a superfunction in x, y, z
and odd variables theta_1..3 and uses

    [P, Q] = sum_i (P d/dtheta_i) (d_i Q) - (-1)^{(p-1)(q-1)} (Q d/dtheta_i) (d_i P)

with right theta-derivatives.
"""

from __future__ import annotations

from .errors import MixedDegree
from .exactpoly import Poly, Z, partial, poly_sum
from .polyvector import OMEGA, Blade, PolyVector, blade_sign

HEISENBERG_PI = PolyVector({(0, 1): Z})

_D = ("x", "y", "z")


def _homogeneous_degree(u: PolyVector, name: str) -> int | None:
    if not u.is_homogeneous():
        raise MixedDegree(f"{name}: argument has mixed degrees {sorted(u.degrees())}")
    return u.degree()


def _components(u: PolyVector, k: int):
    if k == 0:
        return u.component(())
    if k == 1:
        return tuple(u.component((i,)) for i in range(3))
    if k == 2:
        return u.component((0, 1)), u.component((0, 2)), u.component((1, 2))
    return u.component(OMEGA)


def _vector_apply(X, f: Poly) -> Poly:
    return poly_sum(X[i] * partial(f, _D[i]) for i in range(3))


def _div(X) -> Poly:
    return poly_sum(partial(X[i], _D[i]) for i in range(3))


def _closed(i: int, u: PolyVector, j: int, v: PolyVector) -> PolyVector:
    """Coordinate formulas for 0 <= i <= j <= 3."""
    dx = lambda p: partial(p, "x")  # noqa: E731
    dy = lambda p: partial(p, "y")  # noqa: E731
    dz = lambda p: partial(p, "z")  # noqa: E731

    if (i, j) in ((0, 0), (2, 3), (3, 3)):
        return PolyVector()

    if (i, j) == (0, 1):
        # [f, X] = -[X, f] = -X(f)
        f, X = _components(u, 0), _components(v, 1)
        return PolyVector.scalar(-_vector_apply(X, f))

    if (i, j) == (0, 2):
        f = _components(u, 0)
        x12, x13, x23 = _components(v, 2)
        return PolyVector.vector(
            x12 * dy(f) + x13 * dz(f),
            -x12 * dx(f) + x23 * dz(f),
            -x13 * dx(f) - x23 * dy(f),
        )

    if (i, j) == (0, 3):
        f = _components(u, 0)
        x123 = _components(v, 3)
        return PolyVector.bivector(-x123 * dz(f), x123 * dy(f), -x123 * dx(f))

    if (i, j) == (1, 1):
        X, Y = _components(u, 1), _components(v, 1)
        return PolyVector.vector(*(_vector_apply(X, Y[m]) - _vector_apply(Y, X[m]) for m in range(3)))

    if (i, j) == (1, 2):
        X1, X2, X3 = _components(u, 1)
        x12, x13, x23 = _components(v, 2)
        X = (X1, X2, X3)
        c12 = (_vector_apply(X, x12) - x12 * dx(X1) - x12 * dy(X2)
               - x13 * dz(X2) + x23 * dz(X1))
        c13 = (_vector_apply(X, x13) - x13 * dx(X1) - x12 * dy(X3)
               - x13 * dz(X3) - x23 * dy(X1))
        c23 = (_vector_apply(X, x23) - x13 * dx(X2) - x23 * dy(X2)
               - x23 * dz(X3) + x12 * dx(X3))
        return PolyVector.bivector(c12, c13, c23)

    if (i, j) == (1, 3):
        X = _components(u, 1)
        x123 = _components(v, 3)
        return PolyVector.trivector(_vector_apply(X, x123) - x123 * _div(X))

    if (i, j) == (2, 2):
        a12, a13, a23 = _components(u, 2)
        b12, b13, b23 = _components(v, 2)
        c = (a12 * dx(b13) - b13 * dx(a12) + a12 * dy(b23) - b23 * dy(a12)
             + b12 * dx(a13) - a13 * dx(b12) + a13 * dz(b23) - b23 * dz(a13)
             + b12 * dy(a23) - a23 * dy(b12) + b13 * dz(a23) - a23 * dz(b13))
        return PolyVector.trivector(c)

    raise AssertionError((i, j))


def schouten_closed(u: PolyVector, v: PolyVector) -> PolyVector:
    """Bracket from the per-degree coordinate formulas.

    Pairs with ``deg u > deg v`` use graded antisymmetry.
    """
    i = _homogeneous_degree(u, "schouten_closed")
    j = _homogeneous_degree(v, "schouten_closed")
    if i is None or j is None:
        return PolyVector()
    if i <= j:
        return _closed(i, u, j, v)
    sign = -1 if ((i - 1) * (j - 1)) % 2 == 0 else 1
    return _closed(j, v, i, u) * sign


# --- superfunction oracle -------------------------------------------------

SuperTerms = dict  # (exp, theta blade) -> Fraction


def _to_super(u: PolyVector) -> SuperTerms:
    out = {}
    for blade, p in u.items():
        for e, c in p.items():
            out[(e, blade)] = c
    return out


def _from_super(s: SuperTerms) -> PolyVector:
    acc: dict[Blade, dict] = {}
    for (e, blade), c in s.items():
        acc.setdefault(blade, {})[e] = acc.setdefault(blade, {}).get(e, 0) + c
    return PolyVector({b: Poly(t) for b, t in acc.items()})


def _super_mul(a: SuperTerms, b: SuperTerms) -> SuperTerms:
    out: SuperTerms = {}
    for (ea, ta), ca in a.items():
        for (eb, tb), cb in b.items():
            sign, t = blade_sign(ta + tb)
            if t is None:
                continue
            key = ((ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]), t)
            out[key] = out.get(key, 0) + sign * ca * cb
    return {k: c for k, c in out.items() if c}


def _right_theta_derivative(s: SuperTerms, i: int) -> SuperTerms:
    out: SuperTerms = {}
    for (e, t), c in s.items():
        if i not in t:
            continue
        r = t.index(i)
        # move theta_i past the len(t)-1-r factors to its right
        sign = -1 if (len(t) - 1 - r) % 2 else 1
        key = (e, t[:r] + t[r + 1:])
        out[key] = out.get(key, 0) + sign * c
    return {k: c for k, c in out.items() if c}


def _x_derivative(s: SuperTerms, i: int) -> SuperTerms:
    out: SuperTerms = {}
    for (e, t), c in s.items():
        if e[i]:
            f = list(e)
            f[i] -= 1
            out[(tuple(f), t)] = c * e[i]
    return out


def _super_add(a: SuperTerms, b: SuperTerms, scale: int = 1) -> SuperTerms:
    out = dict(a)
    for k, c in b.items():
        out[k] = out.get(k, 0) + scale * c
    return {k: c for k, c in out.items() if c}


def schouten_oracle(u: PolyVector, v: PolyVector) -> PolyVector:
    p = _homogeneous_degree(u, "schouten_oracle")
    q = _homogeneous_degree(v, "schouten_oracle")
    if p is None or q is None:
        return PolyVector()
    P, Q = _to_super(u), _to_super(v)
    swap = -1 if ((p - 1) * (q - 1)) % 2 == 0 else 1
    out: SuperTerms = {}
    for i in range(3):
        out = _super_add(out, _super_mul(_right_theta_derivative(P, i), _x_derivative(Q, i)))
        out = _super_add(out, _super_mul(_right_theta_derivative(Q, i), _x_derivative(P, i)), swap)
    return _from_super(out)


def delta_ce(u: PolyVector, pi: PolyVector = HEISENBERG_PI, bracket=schouten_closed) -> PolyVector:
    """Chevalley-Eilenberg differential ``[pi, u]``."""
    _homogeneous_degree(u, "delta_ce")
    return bracket(pi, u)


def shifted_degree(u: PolyVector) -> int | None:
    d = u.degree()
    return None if d is None else d - 1

