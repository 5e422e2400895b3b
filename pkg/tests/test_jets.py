from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from ttwlab.jets import Jet2, jet_of_poly, poly_eval

small = st.fractions(min_value=-3, max_value=3, max_denominator=4)
points = st.tuples(small, small)
polys = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), small, max_size=5)


def poly_mul(p, q):
    out = {}
    for (i, j), a in p.items():
        for (k, m), b in q.items():
            out[(i + k, j + m)] = out.get((i + k, j + m), 0) + Fraction(a) * b
    return out


def poly_dx(p):
    return {(i - 1, j): i * Fraction(c) for (i, j), c in p.items() if i}


def test_jet_of_poly_examples():
    jet = jet_of_poly({(2, 1): 1}, (1, 1), 2)
    assert [jet[0, 0], jet[1, 0], jet[0, 1], jet[2, 0], jet[1, 1], jet[0, 2]] == [1, 2, 1, 1, 2, 0]
    one = jet_of_poly({(0, 0): 1}, (Fraction(1, 3), 5), 3)
    assert one == Jet2.constant((Fraction(1, 3), 5), 3)
    p2 = jet_of_poly({(2, 0): 1, (0, 2): -1}, (2, 1), 2)
    assert [p2[0, 0], p2[1, 0], p2[0, 1], p2[2, 0], p2[1, 1], p2[0, 2]] == [3, 4, -2, 1, 0, -1]


def test_derivative_of_cube():
    jet = jet_of_poly({(3, 0): 1}, (1, 0), 3)
    assert jet.d(2, 0).value == 6
    assert jet.d(2, 0).order == 1


def test_reciprocal_needs_nonzero_value():
    with pytest.raises(ZeroDivisionError):
        jet_of_poly({(1, 0): 1}, (0, 1), 2).reciprocal()


def test_poly_eval():
    assert poly_eval({(1, 1): 2, (0, 0): -1}, (Fraction(1, 2), 3)) == 2


@settings(max_examples=80, deadline=None)
@given(polys, polys, points, st.integers(0, 5))
def test_mul_matches_polynomial_product(p, q, pt, m):
    assert jet_of_poly(p, pt, m) * jet_of_poly(q, pt, m) == jet_of_poly(poly_mul(p, q), pt, m)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys, points, st.integers(0, 4))
def test_mul_commutative_associative(p, q, r, pt, m):
    a, b, c = (jet_of_poly(f, pt, m) for f in (p, q, r))
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert (a + b) * c == a * c + b * c


@settings(max_examples=60, deadline=None)
@given(polys, points, st.integers(0, 5))
def test_reciprocal_inverts(p, pt, m):
    assume(poly_eval(p, pt) != 0)
    f = jet_of_poly(p, pt, m)
    assert f * f.reciprocal() == Jet2.constant(pt, m)


@settings(max_examples=60, deadline=None)
@given(polys, points, st.integers(1, 5))
def test_dx_matches_polynomial_derivative(p, pt, m):
    assert jet_of_poly(p, pt, m).dx() == jet_of_poly(poly_dx(p), pt, m - 1)


@settings(max_examples=40, deadline=None)
@given(polys, points, st.integers(0, 4), st.integers(0, 3))
def test_power_is_repeated_product(p, pt, m, n):
    f = jet_of_poly(p, pt, m)
    expected = Jet2.constant(pt, m)
    for _ in range(n):
        expected = expected * f
    assert f ** n == expected
