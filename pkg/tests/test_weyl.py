from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ttwlab.catalog import ModelParams, build_h, build_x, specialize
from ttwlab.catalog import GeneratorSpec, build_generator
from ttwlab.weyl import (
    PARAM,
    RATIONAL,
    BudgetExceededError,
    DiffOp,
    MissingParameterError,
    ParamPoly,
    Poly2,
    RingMismatchError,
    emit_op,
    format_rational,
    op_add,
    op_apply,
    op_commutator,
    op_mul,
    parse_op,
    parse_rational,
    scalar_instantiate,
)

W = ParamPoly.var("w")


def op(terms):
    return DiffOp(terms, RATIONAL)


DT = op({(0, 0, 1, 0): 1})
T = op({(1, 0, 0, 0): 1})


def test_add_inverse_and_doubling():
    assert op_add(DT, -DT).is_zero()
    tdt = op({(1, 0, 1, 0): 1})
    assert op_add(tdt, tdt) == op({(1, 0, 1, 0): 2})


def test_add_symbolic_h_cancels():
    h = build_h(ModelParams(1))
    assert h.ring == PARAM
    assert op_add(h, -build_h(ModelParams(1))).is_zero()


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        op_add(DT, DT.to_param())
    with pytest.raises(RingMismatchError):
        op_mul(DT, DT.to_param())


def test_mul_examples():
    assert op_mul(DT, T) == op({(1, 0, 1, 0): 1, (0, 0, 0, 0): 1})
    dt2 = op({(0, 0, 2, 0): 1})
    t2 = op({(2, 0, 0, 0): 1})
    assert op_mul(dt2, t2) == op({(2, 0, 2, 0): 1, (1, 0, 1, 0): 4, (0, 0, 0, 0): 2})
    tdt = op({(1, 0, 1, 0): 1})
    assert op_mul(tdt, tdt) == op({(2, 0, 2, 0): 1, (1, 0, 1, 0): 1})


def test_commutator_examples():
    assert op_commutator(DT, T) == op({(0, 0, 0, 0): 1})
    j1 = build_generator(GeneratorSpec("J1", s=1))
    j4 = build_generator(GeneratorSpec("J4", s=1, N=0))
    assert op_commutator(j1, j4) == op({(1, 0, 1, 0): 2, (0, 1, 0, 1): 1})
    assert op_commutator(build_h(ModelParams(1)), build_x(ModelParams(1))).is_zero()


def test_commutator_budget():
    big = op({(i, j, 2, 2): 1 for i in range(6) for j in range(6)})
    with pytest.raises(BudgetExceededError) as err:
        op_commutator(big, big, budget=10)
    assert err.value.stats["budget"] == 10


def test_apply_examples():
    one = Poly2({(0, 0): 1}, PARAM)
    for k in (1, 2, 3, 5):
        assert not op_apply(build_h(ModelParams(k)), one)
    assert op_apply(DT, Poly2({(2, 0): 1})) == Poly2({(1, 0): 2})
    h1 = build_h(ModelParams(1, a=Fraction(1, 2), b=Fraction(1, 2)))
    p = Poly2({(0, 1): 2, (1, 0): -1}, PARAM)
    assert op_apply(h1, p) == p * ParamPoly.const(4) * W


def test_instantiate_examples():
    x = build_x(ModelParams(2))
    xab = scalar_instantiate(x, {"a": Fraction(1, 3), "b": Fraction(1, 3)})
    b = Fraction(1, 3)
    # -4k^2[(b + 1/2) t^k - (2b + 1) u] du with k = 2
    assert xab.coefficient(2, 0, 0, 1) == -16 * (b + Fraction(1, 2))
    assert xab.coefficient(0, 1, 0, 1) == 16 * (2 * b + 1)
    # the du coefficient is -2k^2(2b + 1) = -2 at k = 1, b = 0
    h1 = scalar_instantiate(build_h(ModelParams(1)), {"a": 0, "b": 0, "w": 0})
    assert h1 == op({(1, 0, 2, 0): -4, (0, 1, 1, 1): -8, (0, 1, 0, 2): -4, (0, 0, 1, 0): -4, (0, 0, 0, 1): -2})
    r = op({(1, 0, 0, 0): 3})
    assert scalar_instantiate(r, {"a": 1}) is r


def test_instantiate_missing_parameter():
    with pytest.raises(MissingParameterError):
        scalar_instantiate(build_h(ModelParams(1)), {"a": 1})


def test_rational_normalization():
    assert parse_rational("6/4") == Fraction(3, 2)
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(Fraction(0)) == "0"
    for bad in ("0.5", "1e3", "1/", "a"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_text_format_round_trip_and_comments():
    text = "# comment\n{-3/2 a^2 b w^1 l^0} t^2 u dt du^3\n\n1/2\n"
    parsed = parse_op(text)
    assert parsed.ring == PARAM
    assert parsed.coefficient(0, 0, 0, 0) == ParamPoly.const(Fraction(1, 2))
    assert parsed.coefficient(2, 1, 1, 3) == ParamPoly({(2, 1, 1, 0): Fraction(-3, 2)})
    assert parse_op(emit_op(parsed)) == parsed
    h = build_h(ModelParams(3))
    assert parse_op(emit_op(h)) == h
    assert emit_op(parse_op(emit_op(h))) == emit_op(h)


def test_text_format_errors():
    with pytest.raises(ValueError):
        parse_op("1 t^2 dz\n")
    with pytest.raises(RingMismatchError):
        parse_op("1 t\n{a} u\n", ring=RATIONAL)


# ---------------------------------------------------------------------------
# properties

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
keys = st.tuples(*(st.integers(0, 3) for _ in range(4)))
rat_ops = st.dictionaries(keys, small, max_size=8).map(lambda d: DiffOp(d, RATIONAL))
param_coefs = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 1), st.integers(0, 2), st.just(0)),
                              small, max_size=3).map(ParamPoly)
param_ops = st.dictionaries(keys, param_coefs, max_size=5).map(lambda d: DiffOp(d, PARAM))
polys = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), small, max_size=6).map(Poly2)


@settings(max_examples=60, deadline=None)
@given(rat_ops, rat_ops, rat_ops)
def test_mul_associative(a, b, c):
    assert op_mul(op_mul(a, b), c) == op_mul(a, op_mul(b, c))


@settings(max_examples=60, deadline=None)
@given(rat_ops, rat_ops, rat_ops)
def test_jacobi_identity(a, b, c):
    total = op_add(op_add(op_commutator(a, op_commutator(b, c)), op_commutator(b, op_commutator(c, a))),
                   op_commutator(c, op_commutator(a, b)))
    assert total.is_zero()


@settings(max_examples=60, deadline=None)
@given(rat_ops, rat_ops, rat_ops)
def test_commutator_bilinear_antisymmetric(a, b, c):
    assert op_commutator(a, b) == -op_commutator(b, a)
    assert op_commutator(op_add(a, b), c) == op_add(op_commutator(a, c), op_commutator(b, c))


@settings(max_examples=60, deadline=None)
@given(rat_ops, rat_ops, polys)
def test_apply_is_homomorphism(a, b, p):
    assert op_apply(op_mul(a, b), p) == op_apply(a, op_apply(b, p))


@settings(max_examples=40, deadline=None)
@given(param_ops, param_ops, small, small, small)
def test_instantiate_commutes_with_commutator(a, b, va, vb, vw):
    values = {"a": va, "b": vb, "w": vw}
    lhs = scalar_instantiate(op_commutator(a, b), values)
    rhs = op_commutator(scalar_instantiate(a, values), scalar_instantiate(b, values))
    assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(param_ops)
def test_round_trip_property(a):
    assert parse_op(emit_op(a), ring=PARAM) == a


@settings(max_examples=40, deadline=None)
@given(param_ops, small, small, small)
def test_specialize_agrees_with_instantiate(a, va, vb, vw):
    p = ModelParams(1, a=va, b=vb, omega=vw, lam=0)
    assert specialize(a, p) == scalar_instantiate(a, {"a": va, "b": vb, "w": vw, "l": 0})
