"""Print concrete instances where published closed forms disagree with exact computation."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

import reference_forms as ref  # noqa: E402

from heisenberg_ce.cohomology import H0, H1, H2, H3, include  # noqa: E402
from heisenberg_ce.exactpoly import ONE, X, Y, Z  # noqa: E402
from heisenberg_ce.polyvector import PolyVector  # noqa: E402
from heisenberg_ce.schouten import schouten_closed, schouten_oracle  # noqa: E402
from heisenberg_ce.transfer import TransferTable, formality_step  # noqa: E402


def show(label, computed, stated):
    mark = "agree" if computed == stated else "DIFFER"
    print(f"{label}\n    computed: {computed}\n    stated:   {stated}\n    {mark}")


def main():
    u, v = PolyVector.vector(0, 0, Z), PolyVector.vector(0, 0, X)
    # the third component attached to dy instead of dz
    show("vector bracket [z dz, x dz]", schouten_oracle(u, v), PolyVector.vector(0, -X, 0))

    phi, g = Z**2, X * Y + Z * X
    show("[phi, X_g ^ dz], phi = z**2, g = xy + zx",
         schouten_closed(PolyVector.scalar(phi), ref.wedge_dz(g)), ref.bracket_h0_h2(phi, g))

    g0, phi, h0, psi = X**2, Z**2, Y, Z**2 + Z
    y1, y2 = include(H1(g0, phi)), include(H1(h0, psi))
    show("[X_{x^2} + z^2 D, X_y + (z^2 + z) D], a = 0",
         schouten_closed(y1, y2), ref.bracket_h1_h1(g0, phi, h0, psi, 0))

    g0, phi, p = X, Z**2, X * Y
    show("[X_x + z^2 D, X_{xy} ^ dz], a = 0",
         schouten_closed(include(H1(g0, phi)), ref.wedge_dz(p)), ref.bracket_h1_h2(g0, phi, p, 0))

    t = TransferTable()
    show("phi2(z**2, y omega)", t.phi([H0(Z**2), H3(Y)]), ref.phi2_h0_h3(Z**2, Y))
    show("phi2(z, X_{xy + zx} ^ dz)", t.phi([H0(Z), H2(X * Y + Z * X)]), ref.phi2_h0_h2(Z, X * Y + Z * X))

    rep = formality_step(2, [H0(Z), H0(Z), H3(ONE)], t)
    show("order-2 residual on (z, z, omega)", rep.residual, ref.d3_h0_h0_h3(Z, Z, ONE))
    rep = formality_step(2, [H0(Z**2), H3(ONE), H3(ONE)], t)
    show("z-constant part on (z**2, omega, omega)", rep.z_constant_part, ref.d3_h0_h3_h3_z_constant(Z**2, ONE, ONE))
    rep = formality_step(2, [H0(Z), H2(X), H2(Z * Y)], t)
    show("order-2 residual on (z, X_x ^ dz, X_{zy} ^ dz)", rep.residual, PolyVector.vector(0, 0, ONE))
    tx, ty = TransferTable(gauge="x"), TransferTable(gauge="y")
    word = [H0(Z**2), H3(X), H3(ONE)]
    print(f"gauge dependence on (z**2, x omega, omega): x-gauge {tx.d(word)}, y-gauge {ty.d(word)}")


if __name__ == "__main__":
    main()
