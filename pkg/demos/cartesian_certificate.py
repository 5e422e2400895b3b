"""Pointwise certification that the k = 2 higher integral commutes with H_2.

The commutator is a rational-coefficient operator of order 6.  Applying it
to the shifted monomials (x-x0)^i (y-y0)^j at a base point reads off each
coefficient function there; all of them vanish.  Bumping one coefficient of
Y_4 by 1 makes every point fail, which shows the check has teeth.
"""

from fractions import Fraction

from ttwlab.cartesian import (
    CartOp, RatCoef, Term, cart_h, cart_y, certify_zero, commutator, crosscheck_algebraic, sample_points,
)
from ttwlab.catalog import ModelParams
from ttwlab.weyl import Poly2

alpha, beta, omega = Fraction(3, 7), Fraction(5, 11), Fraction(3, 2)
h = cart_h(2, alpha, beta, omega)
y = cart_y(2, alpha, beta, omega)
points = sample_points(6, seed=2, ops=[h, y], ks=[2])

c = commutator(h, y)
report = certify_zero(c, c.order, points)
print("[H_2, Y_4]:", report.verdict, "at", len(points), "points")

bumped = y + CartOp((Term("mul", (2, 2), RatCoef.make({(0, 0): 1})),))
c = commutator(h, bumped)
bad = certify_zero(c, c.order, points)
print("perturbed Y_4:", bad.verdict, "with", len(bad.residuals), "nonzero coefficients, e.g.")
print("  ", bad.residuals[0])

params = ModelParams(2, a=Fraction(1, 2), b=Fraction(1, 3), omega=Fraction(1))
cross = crosscheck_algebraic(params, [Poly2({(1, 0): 1}), Poly2({(0, 1): 1})], points[:3])
print("algebraic y_4 vs gauge-rotated Y_4:", cross.verdict, f"({cross.extra['comparisons']} comparisons)")
