"""Exact spectrum of the k = 3 model read off a flag of polynomial spaces.

h_3 maps the space of polynomials t^p u^q with p + 3q <= N into itself and
is triangular there, so its eigenvalues sit on the diagonal.  The script
checks the separation integral commutes, prints the levels with their
degeneracies and verifies one eigenpolynomial by direct application.
"""

from fractions import Fraction

from ttwlab.catalog import ModelParams, build_h, build_x, eigenpoly, spectrum, specialize
from ttwlab.flag import FlagSpec, graded_spectrum
from ttwlab.weyl import Poly2, emit_op, op_apply, op_commutator

k = 3
params = ModelParams(k, a=Fraction(1, 2), b=Fraction(1, 3), omega=Fraction(2))
h = build_h(ModelParams(k))
x = build_x(ModelParams(k))

print("h_3 in the text format:")
print(emit_op(h))
print("[h_3, x_3] vanishes:", op_commutator(h, x).is_zero())

print("\ngrade  eigenvalue  multiplicity")
hs = specialize(h, params)
for grade, values in graded_spectrum(hs, FlagSpec(8, k)):
    for value, mult in values:
        print(f"{grade:5d}  {str(value):>10}  {mult:12d}")

print("\nphysical energies E(N, n) up to grade 4:")
for r in spectrum(params, 4):
    print(f"  N={r.N} n={r.n}  E={r.energy}")

phi = eigenpoly(params, 1, 1)
lhs = op_apply(hs, phi)
print("\nh_3 Phi(1,1) = 4w(N + kn) Phi(1,1):", lhs == phi * Poly2({(0, 0): 4 * params.omega * 4}))
