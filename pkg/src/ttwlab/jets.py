"""Truncated two-variable Taylor expansions (jets) with exact rational
coefficients.

A jet of order M at (x0, y0) stores c[i][j] = (d/dx)^i (d/dy)^j f / (i! j!)
for i + j <= M.  Products are truncated at the smaller order of the two
factors; derivatives lower the order by one.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

__all__ = ["Jet2", "jet_of_poly", "poly_eval"]

_ZERO = Fraction(0)


class Jet2:
    __slots__ = ("point", "order", "c")

    def __init__(self, point, order, coeffs=None):
        self.point = (Fraction(point[0]), Fraction(point[1]))
        self.order = int(order)
        if self.order < 0:
            raise ValueError("jet order must be non-negative")
        if coeffs is None:
            coeffs = [[_ZERO] * (self.order - i + 1) for i in range(self.order + 1)]
        self.c = coeffs

    @classmethod
    def constant(cls, point, order, value=1):
        jet = cls(point, order)
        jet.c[0][0] = Fraction(value)
        return jet

    @classmethod
    def variable(cls, point, order, which):
        """Jet of the coordinate function x (which=0) or y (which=1)."""
        jet = cls.constant(point, order, point[which])
        if order >= 1:
            if which == 0:
                jet.c[1][0] = Fraction(1)
            else:
                jet.c[0][1] = Fraction(1)
        return jet

    @classmethod
    def unit(cls, point, order, i, j):
        """Jet of (x - x0)^i (y - y0)^j."""
        jet = cls(point, order)
        if i + j <= order:
            jet.c[i][j] = Fraction(1)
        return jet

    def __getitem__(self, ij):
        i, j = ij
        if i < 0 or j < 0 or i + j > self.order:
            return _ZERO
        return self.c[i][j]

    @property
    def value(self):
        return self.c[0][0]

    def derivative_value(self, i, j):
        """(d/dx)^i (d/dy)^j f at the base point."""
        return self[i, j] * factorial(i) * factorial(j)

    def is_zero(self):
        return all(v == 0 for row in self.c for v in row)

    def _check(self, other):
        if self.point != other.point:
            raise ValueError("jets at different base points")

    def truncate(self, order):
        order = min(order, self.order)
        return Jet2(self.point, order, [row[:order - i + 1] for i, row in enumerate(self.c[:order + 1])])

    def __add__(self, other):
        if not isinstance(other, Jet2):
            out = self.truncate(self.order)
            out.c[0][0] = out.c[0][0] + Fraction(other)
            return out
        self._check(other)
        m = min(self.order, other.order)
        return Jet2(self.point, m, [[self.c[i][j] + other.c[i][j] for j in range(m - i + 1)]
                                    for i in range(m + 1)])

    __radd__ = __add__

    def __neg__(self):
        return Jet2(self.point, self.order, [[-v for v in row] for row in self.c])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor):
        factor = Fraction(factor)
        return Jet2(self.point, self.order, [[v * factor for v in row] for row in self.c])

    def __mul__(self, other):
        if not isinstance(other, Jet2):
            return self.scale(other)
        return self.mul(other)

    __rmul__ = __mul__

    def mul(self, other, order=None):
        self._check(other)
        m = min(self.order, other.order)
        if order is not None:
            m = min(m, order)
        out = [[_ZERO] * (m - i + 1) for i in range(m + 1)]
        a_items = [(i, j, v) for i, row in enumerate(self.c[:m + 1]) for j, v in enumerate(row[:m - i + 1]) if v]
        b_items = [(i, j, v) for i, row in enumerate(other.c[:m + 1]) for j, v in enumerate(row[:m - i + 1]) if v]
        for i1, j1, v1 in a_items:
            room = m - i1 - j1
            for i2, j2, v2 in b_items:
                if i2 + j2 <= room:
                    out[i1 + i2][j1 + j2] += v1 * v2
        return Jet2(self.point, m, out)

    def __pow__(self, n):
        if n < 0:
            return self.reciprocal() ** (-n)
        out = Jet2.constant(self.point, self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def reciprocal(self):
        a0 = self.c[0][0]
        if a0 == 0:
            raise ZeroDivisionError("jet with zero constant term has no reciprocal")
        m = self.order
        inv0 = 1 / a0
        out = [[_ZERO] * (m - i + 1) for i in range(m + 1)]
        out[0][0] = inv0
        a_items = [(i, j, v) for i, row in enumerate(self.c) for j, v in enumerate(row) if v and (i or j)]
        for d in range(1, m + 1):
            for i in range(d + 1):
                j = d - i
                acc = _ZERO
                for p, q, v in a_items:
                    if p <= i and q <= j:
                        acc += v * out[i - p][j - q]
                out[i][j] = -acc * inv0
        return Jet2(self.point, m, out)

    def __truediv__(self, other):
        if not isinstance(other, Jet2):
            return self.scale(1 / Fraction(other))
        return self * other.reciprocal()

    def dx(self):
        if self.order == 0:
            raise ValueError("cannot differentiate a jet of order 0")
        m = self.order - 1
        return Jet2(self.point, m, [[(i + 1) * self.c[i + 1][j] for j in range(m - i + 1)]
                                    for i in range(m + 1)])

    def dy(self):
        if self.order == 0:
            raise ValueError("cannot differentiate a jet of order 0")
        m = self.order - 1
        return Jet2(self.point, m, [[(j + 1) * self.c[i][j + 1] for j in range(m - i + 1)]
                                    for i in range(m + 1)])

    def d(self, m, n):
        out = self
        for _ in range(m):
            out = out.dx()
        for _ in range(n):
            out = out.dy()
        return out

    def __eq__(self, other):
        if not isinstance(other, Jet2):
            return NotImplemented
        return self.point == other.point and self.order == other.order and self.c == other.c

    def __repr__(self):
        return f"Jet2(point={self.point}, order={self.order}, value={self.value})"


def poly_eval(poly, point):
    """Value of a polynomial ``{(i, j): c}`` at a point."""
    x0, y0 = Fraction(point[0]), Fraction(point[1])
    return sum((Fraction(c) * x0 ** i * y0 ** j for (i, j), c in poly.items()), _ZERO)


def jet_of_poly(poly, point, order):
    """Exact jet of a polynomial given as ``{(i, j): coefficient}``."""
    jet = Jet2(point, order)
    x0, y0 = jet.point
    xpow = {}
    ypow = {}
    for (i, j), c in poly.items():
        c = Fraction(c)
        if not c:
            continue
        for p in range(min(i, order) + 1):
            cx = comb(i, p) * xpow.setdefault(i - p, x0 ** (i - p))
            if not cx:
                continue
            for q in range(min(j, order - p) + 1):
                cy = comb(j, q) * ypow.setdefault(j - q, y0 ** (j - q))
                if cy:
                    jet.c[p][q] += c * cx * cy
    return jet
