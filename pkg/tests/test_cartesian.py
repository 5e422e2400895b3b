from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ttwlab.cartesian import (
    CartOp,
    GaugeFactor,
    RatCoef,
    SingularPointError,
    Term,
    cart_apply,
    cart_h,
    cart_x,
    cart_y,
    certify_zero,
    commutator,
    conjugated_apply,
    crosscheck_algebraic,
    crosscheck_qes,
    duality_check,
    ground_state_check,
    principal_symbol,
    principal_symbol_check,
    pullback,
    sample_points,
    square_reduction_check,
)
from ttwlab.catalog import ModelParams, build_y
from ttwlab.jets import Jet2, jet_of_poly
from ttwlab.weyl import Poly2

H = Fraction(1, 2)
ALPHA, BETA, OMEGA = Fraction(3, 7), Fraction(5, 11), Fraction(3, 2)
PARAM_SETS = [(H, H, Fraction(1)), (Fraction(2, 3), Fraction(5, 4), Fraction(3, 2)), (Fraction(3), Fraction(1, 3), Fraction(2))]


def term(mn, num, dens=(), kind="mul"):
    return CartOp((Term(kind, mn, RatCoef.make(num, dens)),))


DX = term((1, 0), {(0, 0): 1})
X = term((0, 0), {(1, 0): 1})
ONE = term((0, 0), {(0, 0): 1})


def test_pullback_examples():
    assert pullback(Poly2({(1, 0): 1}), 3) == {(2, 0): 1, (0, 2): 1}
    assert pullback(Poly2({(0, 1): 1}), 1) == {(0, 2): 1}
    assert pullback(Poly2({(0, 1): 1}), 2) == {(2, 2): 4}


@settings(max_examples=40, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)),
                       st.fractions(min_value=-3, max_value=3, max_denominator=3), max_size=4),
       st.integers(1, 3), st.fractions(min_value=-2, max_value=2, max_denominator=3),
       st.fractions(min_value=-2, max_value=2, max_denominator=3))
def test_pullback_chain_consistency(terms, k, x0, y0):
    pt, order = (x0, y0), 3
    t = jet_of_poly(pullback(Poly2({(1, 0): 1}), k), pt, order)
    u = jet_of_poly(pullback(Poly2({(0, 1): 1}), k), pt, order)
    composed = Jet2(pt, order)
    for (i, j), c in terms.items():
        composed = composed + (t ** i * u ** j).scale(c)
    assert jet_of_poly(pullback(Poly2(terms), k), pt, order) == composed


def test_cart_apply_examples():
    y2 = cart_y(1, 0, BETA, OMEGA)
    assert cart_apply(y2, Jet2.constant((1, 2), 2)).value == -OMEGA ** 2
    d2 = term((2, 0), {(0, 0): 1})
    assert cart_apply(d2, jet_of_poly({(3, 0): 1}, (1, 0), 3)).value == 6
    # anticommutator {dx, x} acting on 1 is 2x dx(1) + 1 = 1
    anti = term((1, 0), {(1, 0): 1}, kind="anti")
    assert cart_apply(anti, Jet2.constant((2, 3), 1)).value == 1


def test_singular_point_is_reported():
    with pytest.raises(SingularPointError, match="Q_2"):
        cart_apply(cart_h(2, ALPHA, BETA, OMEGA), Jet2.constant((0, 1), 2))
    with pytest.raises(SingularPointError):
        conjugated_apply(cart_h(1, 0, 0, 1), GaugeFactor(1, H, H, 1), Jet2.constant((1, 0), 2))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_ground_state_energy(k):
    for a, b, w in PARAM_SETS:
        params = ModelParams(k, a=a, b=b, omega=w)
        assert ground_state_check(params, sample_points(3, seed=k, ks=[k])).ok


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_integral_constants(k):
    for a, b, w in PARAM_SETS:
        params = ModelParams(k, a=a, b=b, omega=w)
        assert ground_state_check(params, sample_points(3, seed=10 + k, ks=[k]), which="y").ok


def test_integral_constant_examples():
    pt = (Fraction(3, 2), Fraction(1, 3))
    y6 = cart_y(3, 0, 0, 1)
    assert conjugated_apply(y6, GaugeFactor(3, 0, 0, 1), Jet2.constant(pt, 6)).value == 16
    a, b, w = Fraction(2), Fraction(1, 3), Fraction(1)
    y4 = cart_y(2, a * (a - 1), b * (b - 1), w)
    c4 = 4 * w ** 2 * (2 * a * (a + 1) - b * (b - 1))
    assert conjugated_apply(y4, GaugeFactor(2, a, b, w), Jet2.constant(pt, 4)).value == c4


def test_certify_zero_sanity():
    pts = sample_points(3, seed=1)
    report = certify_zero(commutator(DX, X) - ONE, 1, pts)
    assert report.ok and not report.extra["identically_zero"]
    bad = certify_zero(commutator(DX, X), 1, pts)
    assert len(bad.residuals) == 3
    assert bad.residuals[0]["derivative"] == [0, 0] and bad.residuals[0]["coefficient"] == "1"


def test_certify_zero_counts_points_against_degree_bound():
    pts = sample_points(5, seed=2)
    report = certify_zero(commutator(DX, X) - ONE, 1, pts, deg_bound=4)
    assert report.extra["identically_zero"]


def test_report_fields():
    report = certify_zero(ONE - ONE, 0, sample_points(1, seed=3), check="demo", k=2, params={"a": "1"})
    d = report.to_dict()
    assert {"check", "k", "params", "points", "residuals", "verdict", "elapsed_ms"} <= set(d)
    assert d["verdict"] == "pass" and d["check"] == "demo"


def test_sample_points_are_reproducible_and_regular():
    h = cart_h(3, ALPHA, BETA, OMEGA)
    a = sample_points(8, seed=7, ops=[h], ks=[3])
    assert a == sample_points(8, seed=7, ops=[h], ks=[3])
    assert len(set(a)) == 8
    for x, y in a:
        assert x and y and x != y and x != -y


@pytest.mark.parametrize("k,npts", [(1, 3), (2, 3), (3, 2), (4, 1)])
def test_hamiltonian_commutes_with_integral(k, npts):
    h, y = cart_h(k, ALPHA, BETA, OMEGA), cart_y(k, ALPHA, BETA, OMEGA)
    c = commutator(h, y)
    assert certify_zero(c, c.order, sample_points(npts, seed=k, ops=[h, y], ks=[k])).ok


@pytest.mark.parametrize("k", [3, 4])
def test_printed_tables_fail_without_errata(k):
    h, y = cart_h(k, ALPHA, BETA, OMEGA), cart_y(k, ALPHA, BETA, OMEGA, corrected=False)
    c = commutator(h, y)
    assert not certify_zero(c, c.order, sample_points(1, seed=k, ops=[h, y], ks=[k])).ok


def test_negative_control_fails_at_every_point():
    h = cart_h(2, ALPHA, BETA, OMEGA)
    y = cart_y(2, ALPHA, BETA, OMEGA) + term((2, 2), {(0, 0): 1})
    c = commutator(h, y)
    pts = sample_points(4, seed=5, ops=[h, y], ks=[2])
    report = certify_zero(c, c.order, pts)
    assert {tuple(r["point"]) for r in report.residuals} == {(str(x), str(y)) for x, y in pts}


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_hamiltonian_commutes_with_separation_integral(k):
    h, x = cart_h(k, ALPHA, BETA, OMEGA), cart_x(k, ALPHA, BETA)
    c = commutator(h, x)
    assert certify_zero(c, c.order, sample_points(3, seed=k, ops=[h, x], ks=[k])).ok


def test_crosscheck_examples():
    one, t, u = Poly2({(0, 0): 1}), Poly2({(1, 0): 1}), Poly2({(0, 1): 1})
    assert crosscheck_algebraic(ModelParams(1, a=H, b=H, omega=1), [one], sample_points(3, seed=1, ks=[1])).ok
    assert crosscheck_algebraic(ModelParams(2, a=H, b=H, omega=1), [t], sample_points(5, seed=3, ks=[2])).ok
    assert crosscheck_algebraic(ModelParams(4, a=H, b=Fraction(1, 3), omega=1), [u],
                                sample_points(1, seed=3, ks=[4])).ok


@pytest.mark.parametrize("which", ["h", "x"])
def test_crosscheck_h_and_x(which):
    polys = [Poly2({(1, 0): 1}), Poly2({(0, 1): 2, (2, 0): -1})]
    for k in (1, 2, 3):
        params = ModelParams(k, a=Fraction(2, 3), b=Fraction(5, 4), omega=Fraction(3, 2))
        assert crosscheck_algebraic(params, polys, sample_points(2, seed=k, ks=[k]), which=which).ok


def test_crosscheck_qes_variants():
    params = ModelParams(2, a=H, b=Fraction(1, 3), omega=1, lam=H, N=2)
    polys = [Poly2({(1, 0): 1}), Poly2({(0, 1): 1}), Poly2({(2, 0): 1})]
    pts = sample_points(3, seed=4, ks=[2])
    gauge = crosscheck_qes(params, polys, pts, variant="gauge")
    assert gauge.ok and gauge.extra["energy"] == "16/3"
    assert not crosscheck_qes(params, polys, pts, variant="printed").ok


def test_duality_examples():
    for ell, beta, n in ((1, 1, 6), (1, 0, 2), (2, Fraction(1, 3), 6), (2, 3, 6)):
        report = duality_check(ell, beta, sample_points(n, seed=ell, ks=[ell, 2 * ell]))
        assert report.ok and report.extra["identities"] == {"same-angle": "pass", "shifted-angle": "pass"}


def test_duality_negative_control():
    pts = sample_points(2, seed=1, ks=[1, 2])
    first = cart_h(2, 0, 1, 1) - cart_h(1, 1, Fraction(1, 2), 1)
    assert not certify_zero(first, 2, pts).ok


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_principal_symbol(k):
    report = principal_symbol_check(k)
    assert report.ok, report.residuals


def test_principal_symbol_examples():
    pt = (Fraction(2), Fraction(1, 3))
    assert principal_symbol(cart_y(1, ALPHA, BETA, OMEGA), pt) == {(2, 0): 1}
    assert principal_symbol(cart_y(2, ALPHA, BETA, OMEGA), pt) == {(4, 0): 1, (2, 2): -2, (0, 4): 1}


def test_square_reduction():
    assert square_reduction_check(1, Fraction(2, 5), DX).ok
    assert not square_reduction_check(1, Fraction(2, 5), CartOp()).ok
    beta = Fraction(2, 5)
    s2 = (term((2, 0), {(0, 0): 1}) + term((0, 2), {(0, 0): -1})
          + term((0, 0), {(2, 0): beta, (0, 2): -beta}, [("x", {(1, 0): 1}, 2), ("y", {(0, 1): 1}, 2)]))
    assert square_reduction_check(2, beta, s2).ok


def test_y_table_matches_catalog_constant():
    params = ModelParams(3, a=Fraction(2), b=Fraction(3), omega=Fraction(1, 2))
    report = ground_state_check(params, sample_points(2, seed=9, ks=[3]), which="y")
    assert report.extra["expected"] == str(build_y(params).constant)
