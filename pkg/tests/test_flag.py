from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ttwlab.catalog import GeneratorSpec, InvalidParamsError, ModelParams, build_generator, build_h, build_x, spectrum, specialize
from ttwlab.flag import (
    FlagSpec,
    StructureError,
    TriangularityError,
    basis,
    charpoly,
    generator_closure_check,
    graded_spectrum,
    preserves,
    qes_sector,
    represent,
)
from ttwlab.upoly import pmul
from ttwlab.weyl import RATIONAL, DiffOp, ParamPoly, op_mul

from oracles import cofactor_charpoly

W = ParamPoly.var("w")


def test_basis_examples():
    assert len(basis(FlagSpec(2, 1))) == 6
    assert FlagSpec(4, 2).dim == 9
    assert basis(FlagSpec(0, 3)) == [(0, 0)]
    assert basis(FlagSpec(3, 2)) == [(0, 0), (1, 0), (2, 0), (0, 1), (3, 0), (1, 1)]
    assert FlagSpec(6, 2).dim == 16
    assert basis(FlagSpec(5, 1, p_max=0)) == [(p, 0) for p in range(6)]
    with pytest.raises(ValueError):
        FlagSpec(-1)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 20), st.integers(1, 5))
def test_dimension_formula(n, s):
    assert FlagSpec(n, s).dim == sum(n - s * q + 1 for q in range(n // s + 1))


def test_represent_examples():
    assert represent(build_h(ModelParams(2)), FlagSpec(4, 1)).closed
    assert not represent(build_x(ModelParams(2)), FlagSpec(4, 1)).closed
    assert represent(build_x(ModelParams(2)), FlagSpec(4, 2)).closed
    ident = represent(DiffOp.identity(RATIONAL), FlagSpec(3, 1))
    assert ident.entries == [[int(i == j) for j in range(10)] for i in range(10)]


def test_matrix_csv_header():
    text = represent(build_generator(GeneratorSpec("J1")), FlagSpec(1, 1)).to_csv()
    assert text.split("\r\n")[0] == "row,1,t,u"
    assert text.split("\r\n")[2] == "t,0,0,0"


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_preserves_flag_levels(k):
    h, x = build_h(ModelParams(k)), build_x(ModelParams(k))
    for s in range(1, k + 3):
        for n in range(9):
            if s >= k - 1:
                assert preserves(h, FlagSpec(n, s))
            if s >= k:
                assert preserves(x, FlagSpec(n, s))
        assert preserves(h, FlagSpec(8, s)) == (s >= k - 1)
        assert preserves(x, FlagSpec(8, s)) == (s >= k)


def test_preserves_examples():
    assert preserves(build_h(ModelParams(3)), FlagSpec(6, 2))
    assert not preserves(build_x(ModelParams(3)), FlagSpec(6, 2))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_capped_flag(k):
    h = build_h(ModelParams(k))
    for p_max in (0, 1, 2):
        for n in range(9):
            assert preserves(h, FlagSpec(n, max(k - 1, 1), p_max=p_max))


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
def test_graded_spectrum_matches_spectrum(k):
    spec = FlagSpec(10, k)
    levels = graded_spectrum(build_h(ModelParams(k)), spec)
    expected = {}
    for r in spectrum(ModelParams(k), 10):
        expected.setdefault(r.grade, set()).add(r.degeneracy)
    assert [g for g, _ in levels] == sorted(expected)
    for g, values in levels:
        assert values == [(W * ParamPoly.const(4 * g), len([r for r in spectrum(ModelParams(k), 10) if r.grade == g]))]
    k2 = dict(graded_spectrum(build_h(ModelParams(2)), FlagSpec(6, 2)))
    assert k2[4][0][1] == 3


def test_graded_spectrum_errors():
    assert graded_spectrum(build_h(ModelParams(1)), FlagSpec(0, 1)) == [(0, [(ParamPoly(), 1)])]
    with pytest.raises(StructureError):
        graded_spectrum(build_x(ModelParams(2)), FlagSpec(4, 1))
    mix = DiffOp({(0, 1, 1, 0): 1}, RATIONAL)     # u dt keeps the grade on P^(1) but moves t to u
    with pytest.raises(TriangularityError):
        graded_spectrum(mix, FlagSpec(2, 1))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_h_and_x_matrices_commute(k):
    params = ModelParams(k, a=Fraction(2, 3), b=Fraction(5, 4), omega=Fraction(3, 2))
    spec = FlagSpec(8, k)
    h = represent(specialize(build_h(ModelParams(k)), params), spec)
    x = represent(specialize(build_x(ModelParams(k)), params), spec)
    assert h @ x == x @ h


def test_represent_is_multiplicative():
    params = ModelParams(2, a=1, b=Fraction(1, 3), omega=2)
    h = specialize(build_h(ModelParams(2)), params)
    x = specialize(build_x(ModelParams(2)), params)
    spec = FlagSpec(6, 2)
    assert represent(op_mul(h, x), spec) == represent(h, spec) @ represent(x, spec)


def test_charpoly_examples():
    assert charpoly([]) == [1]
    assert charpoly([[2, 0], [0, 3]]) == [6, -5, 1]
    assert charpoly([[0, 1], [1, 0]]) == [-1, 0, 1]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(
    st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=n, max_size=n),
    min_size=n, max_size=n)))
def test_charpoly_matches_cofactor_oracle(m):
    assert charpoly(m) == cofactor_charpoly(m)


def test_cofactor_oracle_sanity():
    assert cofactor_charpoly([[1, 2], [3, 4]]) == [-2, -5, 1]


QES = dict(a=Fraction(1, 2), b=Fraction(1, 3), omega=Fraction(1), lam=Fraction(1, 2))


def test_qes_sector_examples():
    s0 = qes_sector(ModelParams(1, N=0, **QES))
    assert s0.dim == 1 and s0.charpoly == [0, 1]
    s1 = qes_sector(ModelParams(1, N=1, **QES))
    assert s1.dim == 3 and len(s1.charpoly) == 4
    assert s1.charpoly == cofactor_charpoly(s1.matrix.entries)
    assert qes_sector(ModelParams(2, N=6, **QES)).dim == 16
    with pytest.raises(InvalidParamsError):
        qes_sector(ModelParams(1, N=1))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_qes_sector_charpoly_oracle(k):
    for n in range(4):
        sector = qes_sector(ModelParams(k, N=n, **QES), variant="gauge")
        assert sector.dim == sum(1 for p in range(n + 1) for q in range(n + 1) if p + k * q <= n)
        if sector.dim <= 6:
            assert sector.charpoly == cofactor_charpoly(sector.matrix.entries)
        assert len(sector.roots) == sector.dim


@pytest.mark.parametrize("k", [1, 2, 3])
def test_qes_sector_at_zero_coupling_is_triangular(k):
    params = ModelParams(k, N=4, **dict(QES, lam=0))
    sector = qes_sector(params)
    expected = [Fraction(1)]
    for p, q in FlagSpec(4, k).monomials:
        expected = pmul(expected, [4 * params.omega * (p + k * q), 1])
    assert sector.charpoly == expected


def test_qes_report_fields():
    report = qes_sector(ModelParams(1, N=1, **QES)).report()
    assert set(report) == {"k", "N", "a", "b", "omega", "lambda", "variant", "dim", "charpoly", "roots"}
    assert report["lambda"] == "1/2"


@pytest.mark.parametrize("s", [1, 2, 3])
def test_generator_closure(s):
    for n in range(7):
        report = generator_closure_check(s, n)
        assert report.ok, report.results
    # without the -N t shift J4 raises the grade
    assert not preserves(build_generator(GeneratorSpec("J4", s=s, N=0)), FlagSpec(3, s))
