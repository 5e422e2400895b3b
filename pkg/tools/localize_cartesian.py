"""Localize errors in a Cartesian integral table by exact linear algebra.

Fits a correction sum_b c_b {dx^m dy^n, x^i y^j / den} supported on chosen
blocks such that [H_k, Y + correction] has no residual of derivative order
>= ``min_order`` at the sample points.  Used offline to derive the
documented Cartesian errata; not imported by the package.

Usage: python3 tools/localize_cartesian.py k alpha beta omega min_order den_spec degree m,n [m,n ...]
with den_spec a list of factor:exponent pairs such as x:2,d:2,P:2.
"""

import sys
from fractions import Fraction
from math import factorial

sys.path.insert(0, "src")
sys.path.insert(0, "tools")

from repair import solve  # noqa: E402
from ttwlab.cartesian import (  # noqa: E402
    CartOp, RatCoef, Term, applier, cart_h, cart_y, commutator, harmonic, sample_points,
)
from ttwlab.jets import Jet2  # noqa: E402


def dens(k, spec):
    """``spec`` lists factor:exponent pairs, e.g. "x:2,d:2,P:2"; x, y,
    d = x^2 - y^2, P = P_k, Q = Q_k."""
    p, q = harmonic(k)
    polys = {"x": {(1, 0): 1}, "y": {(0, 1): 1}, "d": {(2, 0): 1, (0, 2): -1}, "P": p, "Q": q}
    out = []
    for item in spec.split(","):
        name, e = item.split(":")
        out.append((name, polys[name], int(e)))
    return out


def rows(op, points, min_order):
    out = {}
    for pt in points:
        act = applier(op, pt)
        m = op.order
        for d in range(min_order, m + 1):
            for i in range(d + 1):
                v = act(Jet2.unit(pt, m, i, d - i)).value
                if v:
                    out[(pt, i, d - i)] = v / (factorial(i) * factorial(d - i))
    return out


def main():
    k = int(sys.argv[1])
    alpha, beta, omega = (Fraction(a) for a in sys.argv[2:5])
    min_order = int(sys.argv[5])
    spec, degree = sys.argv[6], int(sys.argv[7])
    blocks = [tuple(map(int, b.split(","))) for b in sys.argv[8:]]
    h = cart_h(k, alpha, beta, omega)
    y = cart_y(k, alpha, beta, omega)
    points = sample_points(int(__import__("os").environ.get("NPTS", "8")), seed=11, ops=[y], ks=[k])
    target = rows(commutator(h, y), points, min_order)
    cols = {}
    for mn in blocks:
        for i in range(degree + 1):
            j = degree - i
            t = CartOp((Term("anti", mn, RatCoef.make({(i, j): 1}, dens(k, spec))),))
            cols[(mn, i, j)] = rows(commutator(h, t), points, min_order)
    res = solve(cols, {r: -v for r, v in target.items()})
    if res is None:
        print("inconsistent")
        return
    sol, piv = res
    print("free:", sorted(set(cols) - set(sol)))
    for key, v in sorted(sol.items()):
        if v:
            print(key, v)


if __name__ == "__main__":
    main()
