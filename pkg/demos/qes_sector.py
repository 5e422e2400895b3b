"""The quasi-exactly-solvable sector at k = 1, N = 2.

The operator with the sign of the quartic coupling as printed and the one
obtained by conjugating the Hamiltonian with its gauge factor differ by
lam -> -lam.  Only the second has an all-real spectrum on the invariant
space, as a restriction of a self-adjoint operator must.
"""

from fractions import Fraction

from ttwlab.catalog import ModelParams
from ttwlab.flag import qes_sector

params = ModelParams(1, a=Fraction(1, 2), b=Fraction(1, 3), omega=Fraction(1), lam=Fraction(1, 2), N=2)
for variant in ("printed", "gauge"):
    sector = qes_sector(params, width=Fraction(1, 10**6), variant=variant)
    roots = [float((lo + hi) / 2) for lo, hi in sector.roots]
    print(f"{variant:8s} dim={sector.dim} real roots={len(roots)}:", ", ".join(f"{r:.6f}" for r in roots))

flat = qes_sector(params.with_(lam=Fraction(0)))
print("lam = 0 charpoly (roots -4w(p + kq)):", [str(c) for c in flat.charpoly])
