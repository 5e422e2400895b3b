from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ttwlab.catalog import (
    LIE_FORMS,
    DegenerateIndexError,
    GeneratorSpec,
    InvalidParamsError,
    LieExpr,
    ModelParams,
    UnsupportedIntegralError,
    a_from_alpha,
    apply_angular,
    apply_radial,
    build_generator,
    build_h,
    build_hqes,
    build_hqes_gauge,
    build_x,
    build_y,
    conjecture_witness,
    degeneracy,
    eigenpoly,
    expand_lie,
    ground_energy,
    jacobi_poly,
    laguerre_poly,
    lie_form,
    lie_residual,
    spectrum,
    specialize,
    x_constant,
    y_constant,
)
from ttwlab.upoly import padd, pmul, pscale, trim
from ttwlab.weyl import PARAM, RATIONAL, DiffOp, ParamPoly, Poly2, op_add, op_apply, op_commutator

H = Fraction(1, 2)
L = ParamPoly.var("l")
PARAM_SETS = [(H, H, Fraction(1)), (Fraction(2, 3), Fraction(5, 4), Fraction(3, 2)), (Fraction(3), Fraction(1, 3), Fraction(2))]


def op(terms):
    return DiffOp(terms, RATIONAL)


def compose_affine(p, c0, c1):
    """p(c0 + c1 z) as a coefficient list in z."""
    out = [Fraction(0)]
    for c in reversed(p):
        out = padd(pmul(out, [c0, c1]), [c])
    return trim(out)


def test_params_validation():
    with pytest.raises(InvalidParamsError):
        ModelParams(0)
    with pytest.raises(InvalidParamsError):
        ModelParams(1, N=-1)
    p = ModelParams(2, a=H, b=1, omega=2, lam=0)
    assert p.ring == RATIONAL and ModelParams(2).ring == PARAM


def test_build_h_examples():
    h2 = specialize(build_h(ModelParams(2)), ModelParams(2, a=1, b=1, omega=1))
    assert h2.coefficient(1, 1, 0, 2) == -16
    for k in range(1, 6):
        assert build_h(ModelParams(k)).coefficient(0, 0, 0, 0) == ParamPoly()
    h1 = specialize(build_h(ModelParams(1)), ModelParams(1, a=H, b=H, omega=3))
    assert h1 == op({(1, 0, 2, 0): -4, (0, 1, 1, 1): -8, (0, 1, 0, 2): -4,
                     (1, 0, 1, 0): 12, (0, 0, 1, 0): -8, (0, 1, 0, 1): 12, (0, 0, 0, 1): -4})


def test_build_x_examples():
    for k in (1, 2, 3):
        assert not op_apply(build_x(ModelParams(k)), Poly2({(0, 0): 1}, PARAM))
    assert x_constant(ModelParams(3, a=H, b=H)) == 9
    x1 = specialize(build_x(ModelParams(1)), ModelParams(1, a=H, b=H))
    p = Poly2({(0, 1): 2, (1, 0): -1})
    assert op_apply(x1, p) == p * Poly2({(0, 0): 8})


def test_build_y_examples():
    y2 = build_y(ModelParams(1))
    assert y2.scale == 4 and y2.printed.coefficient(0, 1, 2, 0) == ParamPoly.const(-1)
    assert y_constant(ModelParams(3, a=0, b=0, omega=1)) == 16
    assert y_constant(ModelParams(4, a=0, b=0, omega=1)) == 16
    assert y_constant(ModelParams(1, a=H, omega=2)) == -4
    assert y_constant(ModelParams(2, a=1, b=2, omega=1)) == 4 * (2 * 2 - 2)
    with pytest.raises(UnsupportedIntegralError, match="conjectured"):
        build_y(ModelParams(5))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_h_commutes_with_y(k):
    y = build_y(ModelParams(k))
    assert op_commutator(build_h(ModelParams(k)), y.op).is_zero()


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_h_commutes_with_x(k):
    assert op_commutator(build_h(ModelParams(k)), build_x(ModelParams(k))).is_zero()


def test_generator_examples():
    assert build_generator(GeneratorSpec("J1")) == op({(0, 0, 1, 0): 1})
    assert build_generator(GeneratorSpec("T", s=3)) == op({(0, 1, 3, 0): 1})
    assert build_generator(GeneratorSpec("J3", s=2, N=0)) == op({(0, 1, 0, 1): 2})
    assert build_generator(GeneratorSpec("J4", s=2, N=3)) == op({(2, 0, 1, 0): 1, (1, 1, 0, 1): 2, (1, 0, 0, 0): -3})
    with pytest.raises(InvalidParamsError):
        GeneratorSpec("R", s=1, i=2)


def test_expand_lie_examples():
    assert expand_lie(LieExpr().add(1, GeneratorSpec("J2"))) == op({(1, 0, 1, 0): 1})
    assert lie_residual(LieExpr().add(1, GeneratorSpec("J1")), op({(0, 0, 1, 0): 1})).is_zero()
    bad = LieExpr().add(1, GeneratorSpec("J3", s=1)).add(1, GeneratorSpec("J3", s=2))
    with pytest.raises(InvalidParamsError):
        expand_lie(bad)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_lie_forms_exact(k):
    expr, target = lie_form("x", ModelParams(k))
    assert lie_residual(expr, target).is_zero()
    if k == 1:
        expr, target = lie_form("y2", ModelParams(1))
        assert lie_residual(expr, target).is_zero()


@pytest.mark.parametrize("k", [1, 2, 3])
def test_lie_form_h_reports_residual(k):
    expr, target = lie_form("h", ModelParams(k))
    residual = lie_residual(expr, target)
    expected = DiffOp({(0, 0, 1, 0): ParamPoly.const(8), (k - 1, 0, 0, 1): ParamPoly.const(-4 * k * k)}, PARAM)
    assert residual == expected


def test_lie_form_names():
    assert set(LIE_FORMS) == {"h", "x", "y2", "y4", "hqes", "x-qes"}
    with pytest.raises(InvalidParamsError):
        lie_form("z", ModelParams(1))


def test_x_qes_residual_is_constant():
    expr, target = lie_form("x-qes", ModelParams(1, N=2))
    residual = lie_residual(expr, target)
    assert set(residual.terms) == {(0, 0, 0, 0)}
    assert specialize(residual, ModelParams(1, a=1, b=2, omega=1, lam=0)).coefficient() == -8


def test_jacobi_examples():
    assert jacobi_poly(0, H, H) == [1]
    assert jacobi_poly(1, H, H) == [0, 1]
    # Legendre P_2 = (3x^2 - 1)/2
    assert jacobi_poly(2, H, H) == [Fraction(-1, 2), 0, Fraction(3, 2)]
    with pytest.raises(DegenerateIndexError):
        jacobi_poly(2, Fraction(-1, 2), Fraction(-1, 2))


def test_laguerre_examples():
    assert laguerre_poly(0, 5) == [1]
    assert laguerre_poly(1, 3) == [4, -1]
    assert laguerre_poly(2, 0) == [1, -2, Fraction(1, 2)]


@pytest.mark.parametrize("a,b", [(H, H), (Fraction(2, 3), Fraction(5, 4)), (Fraction(3), Fraction(1, 3))])
def test_angular_eigencheck(a, b):
    for k in (1, 2, 3):
        for n in range(6):
            p = compose_affine(jacobi_poly(n, a, b), -1, 2)
            assert apply_angular(p, k, a, b) == trim(pscale(p, 4 * k * k * n * (n + a + b)))


@pytest.mark.parametrize("a,b,w", PARAM_SETS)
def test_radial_eigencheck(a, b, w):
    for k in (1, 2):
        for n in range(3):
            for N in range(6):
                lag = compose_affine(laguerre_poly(N, k * (2 * n + a + b)), 0, w)
                assert apply_radial(lag, k, n, a, b, w) == trim(pscale(lag, 4 * w * N))


def test_eigenpoly_examples():
    assert eigenpoly(ModelParams(2, a=H, b=H, omega=1), 0, 0) == Poly2({(0, 0): 1})
    assert eigenpoly(ModelParams(1, a=H, b=H, omega=1), 0, 1) == Poly2({(0, 1): 2, (1, 0): -1})
    assert eigenpoly(ModelParams(2, a=H, b=H, omega=1), 1, 0) == Poly2({(0, 0): 3, (1, 0): -1})
    with pytest.raises(InvalidParamsError):
        eigenpoly(ModelParams(1), 0, 0)


@pytest.mark.parametrize("a,b,w", PARAM_SETS)
def test_eigenpolys_are_eigenfunctions(a, b, w):
    for k in (1, 2, 3, 4):
        params = ModelParams(k, a=a, b=b, omega=w)
        h = specialize(build_h(ModelParams(k)), params)
        x = specialize(build_x(ModelParams(k)), params)
        for n in range(8 // k + 1):
            for N in range(8 - k * n + 1):
                phi = eigenpoly(params, N, n)
                assert op_apply(h, phi) == phi * Poly2({(0, 0): 4 * w * (N + k * n)})
            phi = eigenpoly(params, 0, n)
            assert op_apply(x, phi) == phi * Poly2({(0, 0): 4 * k * k * n * (n + a + b)})


def test_spectrum_examples():
    assert ground_energy(ModelParams(3, a=1, b=2, omega=H)) == 10
    levels = spectrum(ModelParams(1, a=1, b=1, omega=1), 2)
    assert next(r for r in levels if (r.N, r.n) == (1, 1)).energy == 14
    grade4 = [r for r in spectrum(ModelParams(2, a=1, b=1, omega=1), 4) if r.grade == 4]
    assert sorted((r.N, r.n) for r in grade4) == [(0, 2), (2, 1), (4, 0)]
    assert all(r.degeneracy == 3 for r in grade4)
    assert grade4[1].gamma == 4


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 6), st.integers(0, 30))
def test_degeneracy_counts_solutions(k, d):
    assert degeneracy(k, d) == sum(1 for n in range(d + 1) for N in range(d + 1) if N + k * n == d)


def test_hqes_examples():
    for k in (1, 2, 3):
        zero = op_add(build_hqes(ModelParams(k, lam=0, N=2)), build_h(ModelParams(k)))
        assert zero.is_zero()
        assert not op_apply(build_hqes(ModelParams(k, N=0)), Poly2({(0, 0): 1}, PARAM))
    h1 = build_hqes(ModelParams(1, N=1))
    assert h1.coefficient(2, 0, 1, 0) == L * ParamPoly.const(4)
    assert h1.coefficient(1, 1, 0, 1) == L * ParamPoly.const(4)
    g1 = build_hqes_gauge(ModelParams(1, N=1))
    assert g1.coefficient(2, 0, 1, 0) == L * ParamPoly.const(-4)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_hqes_commutes_with_x(k):
    x = build_x(ModelParams(k))
    for n in (0, 2):
        assert op_commutator(build_hqes(ModelParams(k, N=n)), x).is_zero()
        assert op_commutator(build_hqes_gauge(ModelParams(k, N=n)), x).is_zero()


def test_a_from_alpha():
    assert a_from_alpha(2) == 2
    assert a_from_alpha(0) == 1
    assert a_from_alpha(Fraction(-1, 4)) == H
    with pytest.raises(InvalidParamsError):
        a_from_alpha(1)
    with pytest.raises(InvalidParamsError):
        a_from_alpha(-1)


@settings(max_examples=40, deadline=None)
@given(st.fractions(min_value=Fraction(1, 2), max_value=20, max_denominator=12))
def test_a_from_alpha_inverts(a):
    assert a_from_alpha(a * (a - 1)) == a


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_conjecture_witness_reports_missing_monomial(k):
    report = conjecture_witness(k)
    assert report.expected == {(0, 0, 2 * k, 0): 4 ** k, (0, 1, 2 * k, 0): -4 ** k}
    assert report.found[(0, 1, 2 * k, 0)] == -4 ** k
    assert report.missing == [(0, 0, 2 * k, 0)]
