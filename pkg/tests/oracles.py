"""Independent oracles shared by the test modules."""

from fractions import Fraction

from ttwlab.upoly import padd, pmul, pscale, trim


def poly_det(a):
    """Determinant of a matrix of univariate polynomials by Laplace expansion."""
    n = len(a)
    if n == 0:
        return [Fraction(1)]
    total = [Fraction(0)]
    for j in range(n):
        if not a[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        total = padd(total, pscale(pmul(a[0][j], poly_det(minor)), (-1) ** j))
    return trim(total)


def cofactor_charpoly(m):
    """det(x I - M) by cofactor expansion, lowest degree first."""
    n = len(m)
    return poly_det([[trim([-Fraction(m[r][c])] + ([Fraction(1)] if r == c else [])) for c in range(n)]
                     for r in range(n)])
