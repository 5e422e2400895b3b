"""Operators, constants and spectral formulas of the TTW family.

Everything is built in the parameter ring first (a, b, w, l formal) and
then specialized to whatever values a :class:`ModelParams` supplies.  When
all of a, b, omega, lambda are given the result lives in the rational ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from . import printed
from .upoly import padd, pderiv, pmul, pscale, trim
from .weyl import (
    PARAM,
    RATIONAL,
    DiffOp,
    ParamPoly,
    Poly2,
    op_add,
    op_mul,
)

__all__ = [
    "ModelParams",
    "InvalidParamsError",
    "UnsupportedIntegralError",
    "DegenerateIndexError",
    "build_h",
    "build_x",
    "x_constant",
    "build_y",
    "YIntegral",
    "y_constant",
    "build_hqes",
    "build_hqes_gauge",
    "formal_table",
    "table_to_op",
    "specialize",
    "specialize_scalar",
    "GeneratorSpec",
    "build_generator",
    "LieExpr",
    "expand_lie",
    "lie_residual",
    "lie_form",
    "LIE_FORMS",
    "LIE_TARGETS",
    "jacobi_poly",
    "laguerre_poly",
    "apply_angular",
    "apply_radial",
    "eigenpoly",
    "SpectrumRecord",
    "spectrum",
    "degeneracy",
    "ground_energy",
    "a_from_alpha",
    "conjecture_witness",
    "WitnessReport",
]


class InvalidParamsError(ValueError):
    pass


class UnsupportedIntegralError(ValueError):
    pass


class DegenerateIndexError(ZeroDivisionError):
    pass


A = ParamPoly.var("a")
B = ParamPoly.var("b")
W = ParamPoly.var("w")
L = ParamPoly.var("l")
HALF = Fraction(1, 2)


def _frac_or_none(value):
    if value is None or value == "symbolic":
        return None
    if isinstance(value, str):
        return Fraction(value)
    return Fraction(value)


@dataclass(frozen=True)
class ModelParams:
    """Family index k, exponents a, b, frequency omega, quartic coupling lam
    and QES level N.  ``None`` leaves a parameter formal."""

    k: int
    a: Fraction | None = None
    b: Fraction | None = None
    omega: Fraction | None = None
    lam: Fraction | None = None
    N: int = 0

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            raise InvalidParamsError(f"k must be a positive integer, got {self.k!r}")
        if not isinstance(self.N, int) or self.N < 0:
            raise InvalidParamsError(f"N must be a non-negative integer, got {self.N!r}")
        for name in ("a", "b", "omega", "lam"):
            object.__setattr__(self, name, _frac_or_none(getattr(self, name)))

    @property
    def values(self):
        """Assigned parameters keyed by ring variable name."""
        out = {}
        for name, key in (("a", "a"), ("b", "b"), ("omega", "w"), ("lam", "l")):
            v = getattr(self, name)
            if v is not None:
                out[key] = v
        return out

    @property
    def ring(self):
        return RATIONAL if len(self.values) == 4 else PARAM

    def with_(self, **changes):
        data = {"k": self.k, "a": self.a, "b": self.b, "omega": self.omega, "lam": self.lam, "N": self.N}
        data.update(changes)
        return ModelParams(**data)

    def describe(self):
        def show(v):
            return "symbolic" if v is None else str(v)

        return {"k": self.k, "a": show(self.a), "b": show(self.b), "omega": show(self.omega),
                "lambda": show(self.lam), "N": self.N}


def specialize(op, params):
    """Substitute the assigned parameters of ``params`` into a formal operator.

    The result lives in the rational ring as soon as no parameter is left."""
    vals = params.values
    if not vals:
        return op
    out = {}
    for key, coef in op.terms.items():
        c = coef.evaluate(vals, partial=True)
        if c:
            out[key] = c
    if all(c.is_constant() for c in out.values()):
        return DiffOp({key: c.constant_value() for key, c in out.items()}, RATIONAL)
    return DiffOp(out, PARAM)


def specialize_scalar(value, params):
    value = ParamPoly.lift(value)
    c = value.evaluate(params.values, partial=True)
    if c.is_constant():
        return c.constant_value()
    return c


def _acc(terms, key, coef):
    coef = ParamPoly.lift(coef)
    terms[key] = terms[key] + coef if key in terms else coef


# ---------------------------------------------------------------------------
# Hamiltonian and integrals


def build_h(params):
    """Gauge-rotated Hamiltonian h_k in the variables t = r^2, u = r^2k sin^2 k phi."""
    k = params.k
    t = {}
    _acc(t, (1, 0, 2, 0), -4)
    _acc(t, (0, 1, 1, 1), -8 * k)
    _acc(t, (k - 1, 1, 0, 2), -4 * k * k)
    _acc(t, (1, 0, 1, 0), 4 * W)
    _acc(t, (0, 0, 1, 0), -4 * ((A + B) * k + 1))
    _acc(t, (0, 1, 0, 1), 4 * k * W)
    _acc(t, (k - 1, 0, 0, 1), -2 * k * k * (2 * B + 1))
    return specialize(DiffOp(t, PARAM), params)


def build_x(params):
    """Separation integral x_k (gauge-rotated -L^2 + angular potential - c_k)."""
    k = params.k
    kk = k * k
    t = {}
    _acc(t, (k, 1, 0, 2), -4 * kk)
    _acc(t, (0, 2, 0, 2), 4 * kk)
    _acc(t, (k, 0, 0, 1), -4 * kk * (B + HALF))
    _acc(t, (0, 1, 0, 1), 4 * kk * (A + B + 1))
    return specialize(DiffOp(t, PARAM), params)


def x_constant(params):
    """Lowest eigenvalue c_k = k^2 (a+b)^2 of the separation integral."""
    return specialize_scalar(params.k ** 2 * (A + B) ** 2, params)


def build_hqes(params):
    """Quasi-exactly-solvable operator at level N, with the printed sign
    convention h = -(Psi0)^-1 (H - E0) Psi0 and no constant term."""
    k, n = params.k, params.N
    t = {}
    _acc(t, (1, 0, 2, 0), 4)
    _acc(t, (0, 1, 1, 1), 8 * k)
    _acc(t, (k - 1, 1, 0, 2), 4 * k * k)
    _acc(t, (2, 0, 1, 0), 4 * L)
    _acc(t, (1, 0, 1, 0), -4 * W)
    _acc(t, (0, 0, 1, 0), 4 * ((A + B) * k + 1))
    _acc(t, (1, 1, 0, 1), 4 * k * L)
    _acc(t, (0, 1, 0, 1), -4 * k * W)
    _acc(t, (k - 1, 0, 0, 1), 2 * k * k * (2 * B + 1))
    _acc(t, (1, 0, 0, 0), -4 * n * L)
    return specialize(DiffOp(t, PARAM), params)


def build_hqes_gauge(params):
    """QES operator obtained by conjugating the QES Hamiltonian with its
    printed gauge factor exp(-w r^2/2 - l r^4/4) r^((a+b)k) cos^a sin^b.

    Differs from :func:`build_hqes` by l -> -l: the printed algebraic form
    carries the opposite sign of the quartic coupling (see the Cartesian
    cross-check in :mod:`ttwlab.cartesian`)."""
    if params.lam is not None:
        return build_hqes(params.with_(lam=-params.lam))
    op = build_hqes(params)
    return DiffOp({key: _flip_l(v) for key, v in op.terms.items()}, op.ring)


def _flip_l(poly):
    return ParamPoly({e: (-c if e[3] % 2 else c) for e, c in poly.terms.items()})


# ---------------------------------------------------------------------------
# algebraic y-integrals


@dataclass(frozen=True)
class YIntegral:
    name: str
    k: int
    printed: DiffOp      # operator as printed (y_2k / scale)
    scale: int
    op: DiffOp           # y_2k itself
    constant: object     # C_2k
    anchor: str


_SCALES = {1: 4, 2: 16, 3: 1, 4: 1}
_TABLES = {
    1: lambda: printed.Y2_OVER_4,
    2: printed.y4_rows,
    3: lambda: printed.Y6,
    4: printed.y8_rows,
}


def y_constant(params):
    """Lowest eigenvalue C_2k of the Cartesian integral, k = 1..4."""
    k = params.k
    if k == 1:
        c = -W * (2 * A + 1)
    elif k == 2:
        c = 4 * W ** 2 * (2 * A * (A + 1) - B * (B - 1))
    elif k == 3:
        c = 4 * W ** 3 * (3 * A + 3 * B + 1) * (5 * A ** 2 + 36 * A * B - 27 * B ** 2 + A + 45 * B + 4)
    elif k == 4:
        c = 4 * W ** 4 * (
            3200 * A ** 4 + 512 * A ** 3 * (31 * B + 10) + 16 * A ** 2 * (206 * B + 159) * (2 * B - 3)
            + 16 * A * (310 * B ** 3 - 187 * B ** 2 - 443 * B + 105)
            + 1133 * B ** 4 + 150 * B ** 3 - 176 * B ** 2 + 493 * B + 4
        )
    else:
        raise UnsupportedIntegralError(_unsupported(k))
    return specialize_scalar(c, params)


def _unsupported(k):
    return (f"no algebraic integral y_{2 * k} is available for k={k}: only k=1..4 are "
            "constructed; existence for k>=5 is conjectured, not proven")


def build_y(params):
    """The higher integral y_2k for k = 1..4 with its printed scale and C_2k."""
    k = params.k
    if k not in _SCALES:
        raise UnsupportedIntegralError(_unsupported(k))
    table = formal_table(k)
    scale = _SCALES[k]
    shown = specialize(table, params)
    return YIntegral(
        name=f"y{2 * k}",
        k=k,
        printed=shown,
        scale=scale,
        op=shown.scale(scale),
        constant=y_constant(params),
        anchor={1: "y_2/4", 2: "y_4/16", 3: "y_6", 4: "y_8"}[k],
    )


@lru_cache(maxsize=None)
def formal_table(k):
    """Printed y-table for family index k as a formal DiffOp (cached)."""
    rows = _TABLES[k]()
    return table_to_op(rows)


def table_to_op(rows):
    """Convert rows ``((m, n), text)`` to a DiffOp over the parameter ring."""
    terms = {}
    for (m, n), text in rows:
        for (i, j, ea, eb, ew), c in printed.parse_coefficient(text).items():
            key = (i, j, m, n)
            _acc(terms, key, ParamPoly({(ea, eb, ew, 0): c}))
    return DiffOp(terms, PARAM)


@dataclass(frozen=True)
class WitnessReport:
    """Monomials of 4^k [(J1)^k - T_k] (J1)^k and whether y_2k carries them."""

    k: int
    expected: dict      # (i, j, m, n) -> coefficient of the expansion
    found: dict         # (i, j, m, n) -> coefficient in y_2k (0 if absent)

    @property
    def missing(self):
        return sorted(key for key, c in self.expected.items() if self.found[key] != c)

    @property
    def ok(self):
        return not self.missing


def conjecture_witness(k):
    """Compare the expansion of 4^k [(J1)^k - T_k] (J1)^k with y_2k termwise.

    y_2k is taken at its true normalization, formal in a, b, w."""
    j1 = build_generator(GeneratorSpec("J1", s=k))
    tk = build_generator(GeneratorSpec("T", s=k))
    power = DiffOp.identity(RATIONAL)
    for _ in range(k):
        power = op_mul(power, j1)
    expr = op_mul(op_add(power, -tk), power).scale(4 ** k)
    y = build_y(ModelParams(k)).op
    found = {}
    for key in expr.terms:
        c = y.terms.get(key)
        found[key] = c.constant_value() if c is not None and c.is_constant() else (c or 0)
    return WitnessReport(k, dict(expr.terms), found)


# ---------------------------------------------------------------------------
# generators and Lie-algebraic forms


_GENERATORS = ("J1", "J2", "J3", "J4", "R", "T")


@dataclass(frozen=True)
class GeneratorSpec:
    """One generator of the hidden algebra with grading weight s and level N."""

    which: str
    s: int = 1
    N: int = 0
    i: int = 0

    def __post_init__(self):
        if self.which not in _GENERATORS:
            raise InvalidParamsError(f"unknown generator {self.which!r}")
        if self.s < 1:
            raise InvalidParamsError("s must be positive")
        if self.which == "R" and not 0 <= self.i <= self.s:
            raise InvalidParamsError(f"R_i needs 0 <= i <= s, got i={self.i}, s={self.s}")

    def label(self):
        if self.which == "R":
            return f"R{self.i}"
        if self.which == "T":
            return f"T{self.s}"
        if self.which in ("J2", "J3", "J4") and self.N:
            return f"{self.which}_{self.N}"
        return self.which


def build_generator(spec):
    s, n = spec.s, Fraction(spec.N)
    w = spec.which
    if w == "J1":
        t = {(0, 0, 1, 0): 1}
    elif w == "J2":
        t = {(1, 0, 1, 0): 1, (0, 0, 0, 0): -n / 3}
    elif w == "J3":
        t = {(0, 1, 0, 1): s, (0, 0, 0, 0): -n / 3}
    elif w == "J4":
        t = {(2, 0, 1, 0): 1, (1, 1, 0, 1): s, (1, 0, 0, 0): -n}
    elif w == "R":
        t = {(spec.i, 0, 0, 1): 1}
    else:
        t = {(0, 1, s, 0): 1}
    return DiffOp(t, RATIONAL)


@dataclass
class LieExpr:
    """Formal sum of ordered generator products with scalar coefficients."""

    terms: list = field(default_factory=list)   # [(coef, (GeneratorSpec, ...)), ...]

    def add(self, coef, *factors):
        self.terms.append((coef, tuple(factors)))
        return self

    def check_consistent(self):
        ss = set()
        ns = set()
        for _, factors in self.terms:
            for g in factors:
                if g.which in ("J3", "J4", "T"):
                    ss.add(g.s)
                if g.which in ("J2", "J3", "J4"):
                    ns.add(g.N)
        if len(ss) > 1:
            raise InvalidParamsError(f"inconsistent s across factors: {sorted(ss)}")
        if len(ns) > 1:
            raise InvalidParamsError(f"inconsistent N across factors: {sorted(ns)}")
        for _, factors in self.terms:
            for g in factors:
                if g.which == "R" and ss and g.i > next(iter(ss)):
                    raise InvalidParamsError(f"R_{g.i} exceeds s={next(iter(ss))}")

    def text(self):
        parts = []
        for coef, factors in self.terms:
            c = coef.to_text() if isinstance(coef, ParamPoly) else str(coef)
            parts.append(f"({c}) " + " ".join(g.label() for g in factors))
        return " + ".join(parts)


def expand_lie(expr, ring=None):
    """Normal-ordered expansion of a LieExpr."""
    expr.check_consistent()
    if ring is None:
        ring = PARAM if any(isinstance(c, ParamPoly) for c, _ in expr.terms) else RATIONAL
    total = DiffOp.zero(ring)
    cache = {}
    for coef, factors in expr.terms:
        prod = DiffOp.identity(RATIONAL)
        for g in factors:
            if g not in cache:
                cache[g] = build_generator(g)
            prod = op_mul(prod, cache[g])
        prod = prod.to_ring(ring)
        if ring == RATIONAL and isinstance(coef, ParamPoly):
            coef = coef.constant_value()
        total = op_add(total, prod.scale(coef))
    return total


def lie_residual(expr, target):
    """``expand_lie(expr) - target``; empty when the rewriting is exact."""
    ring = target.ring
    if any(isinstance(c, ParamPoly) and not c.is_constant() for c, _ in expr.terms):
        ring = PARAM
    return op_add(expand_lie(expr, ring), -target.to_ring(ring))


def _lie_h(params):
    k = params.k
    J1, J2, J3 = GeneratorSpec("J1", s=k), GeneratorSpec("J2", s=k), GeneratorSpec("J3", s=k)
    Rk1 = GeneratorSpec("R", s=k, i=k - 1)
    e = LieExpr()
    e.add(ParamPoly.const(-4), J2, J1)
    e.add(ParamPoly.const(-8), J3, J1)
    e.add(ParamPoly.const(-4 * k), Rk1, J3)
    e.add(4 * W, J2)
    e.add(-4 * ((A + B) * k - 1), J1)
    e.add(4 * W, J3)
    e.add(-2 * k * k * (2 * B + 1), Rk1)
    return e, build_h(ModelParams(params.k))


def _lie_x(params):
    k = params.k
    J3 = GeneratorSpec("J3", s=k)
    Rk = GeneratorSpec("R", s=k, i=k)
    e = LieExpr()
    e.add(ParamPoly.const(-4 * k), J3, Rk)
    e.add(ParamPoly.const(4), J3, J3)
    e.add(-4 * k * k * (B + HALF), Rk)
    e.add(4 * k * (A + B), J3)
    return e, build_x(ModelParams(params.k))


def _lie_y2(params):
    if params.k != 1:
        raise InvalidParamsError("this Lie form exists for k=1 only")
    J1, J2, T1 = GeneratorSpec("J1"), GeneratorSpec("J2"), GeneratorSpec("T", s=1)
    e = LieExpr()
    e.add(ParamPoly.const(1), J2, J1)
    e.add(ParamPoly.const(-1), T1, J1)
    e.add(W, T1)
    e.add(-W, J2)
    e.add(A + HALF, J1)
    return e, formal_table(1)


def _lie_y4(params):
    if params.k != 2:
        raise InvalidParamsError("this Lie form exists for k=2 only")
    J1, J2, J3 = (GeneratorSpec(w, s=2) for w in ("J1", "J2", "J3"))
    R0, R1, R2 = (GeneratorSpec("R", s=2, i=i) for i in range(3))
    T2 = GeneratorSpec("T", s=2)
    one = ParamPoly.const(1)
    e = LieExpr()
    e.add(one, J2, J2, J1, J1)
    e.add(-one, J1, J1, T2)
    e.add(2 * one, J1, J1, J3, J3)
    e.add(4 * one, J3, J3, R2, R0)
    e.add(-4 * one, J2, J2, J3, R0)
    e.add(-2 * one, J3, J3, J3, R0)
    e.add(-2 * W, J2, J2, J1)
    e.add(-2 * W, J3, J3, J1)
    e.add(2 * (2 * A + 1), J2, J1, J1)
    e.add(-4 * (2 * B + 1), J2, J2, R0)
    e.add(4 * W, J3, R2, J1)
    e.add(-4 * (2 * A + 1), J3, R1, J1)
    e.add(8 * (2 * B + 3), J3, R1, R1)
    e.add(-8 * (A + B + 2), J3, J3, R0)
    e.add((2 * A + 1) * (2 * A + 2 * B + 1), J1, J1)
    e.add(-3 * W * (2 * A + 1), J2, J1)
    e.add(W ** 2, J2, J2)
    e.add(4 * W * (A + B + 1), J3, J1)
    e.add(-4 * W * (2 * B + 1), R2, J1)
    e.add(64 * (2 * A + 1) * (2 * B + 1), J2, R0)
    e.add(2 * W * (2 * A + 1), J3, R1)
    e.add(-4 * (2 * A ** 2 + 6 * A * B + 2 * B ** 2 + 8 * A + 7 * B + 5), J3, R0)
    e.add(4 * (2 * B + 1) * (2 * B + 3), R2, R0)
    e.add(2 * W, T2, J1)
    e.add(8 * (A + B + 1), T2, R0)
    e.add(-(2 * A + 1) * (2 * A + 2 * B + 1), J1)
    e.add(W ** 2 * (2 * A + 1), J2)
    e.add(2 * W * (2 * A + 1) * (2 * B + 1), R1)
    e.add(-2 * (2 * A + 1) * (2 * B + 1) * (2 * A + 2 * B + 1), R0)
    e.add(-W ** 2, T2)
    return e, formal_table(2)


def _lie_hqes(params):
    k, n = params.k, params.N
    J1 = GeneratorSpec("J1", s=k)
    J2, J3, J4 = (GeneratorSpec(w, s=k, N=n) for w in ("J2", "J3", "J4"))
    Rk1 = GeneratorSpec("R", s=k, i=k - 1)
    e = LieExpr()
    e.add(ParamPoly.const(1), J2, J1)
    e.add(ParamPoly.const(2), J3, J1)
    e.add(ParamPoly.const(k), J3, Rk1)
    e.add((A + B) * k + 1 + n, J1)
    e.add(-W, J2)
    e.add(-W, J3)
    e.add(-L, J4)
    e.add(Fraction(k, 6) * (2 * n + 3 * k * (2 * B + 1)), Rk1)
    return e, build_hqes(ModelParams(k, N=n)).scale(Fraction(1, 4))


def _lie_x_qes(params):
    k, n = params.k, params.N
    J3 = GeneratorSpec("J3", s=k, N=n)
    Rk = GeneratorSpec("R", s=k, i=k)
    e = LieExpr()
    e.add(ParamPoly.const(-4 * k), J3, Rk)
    e.add(ParamPoly.const(4), J3, J3)
    e.add(-4 * k * (k * (B + HALF) + Fraction(n, 3)), Rk)
    e.add(4 * (k * (A + B) + Fraction(2 * n, 3)), J3)
    e.add(ParamPoly.const(Fraction(4 * n * n, 9)))
    return e, build_x(ModelParams(k))


LIE_FORMS = {"h": _lie_h, "x": _lie_x, "y2": _lie_y2, "y4": _lie_y4, "hqes": _lie_hqes, "x-qes": _lie_x_qes}

LIE_TARGETS = {
    "h": "h_k",
    "x": "x_k",
    "y2": "y_2/4",
    "y4": "y_4/16",
    "hqes": "h_qes/4",
    "x-qes": "x_k",
}


def lie_form(name, params):
    """``(LieExpr, target)`` for one of the printed Lie-algebraic rewritings.

    Both are formal in a, b, w, l.  ``name`` is the operator rewritten: h, x,
    y2, y4, hqes, or x-qes (x_k written with the level-N generators)."""
    if name not in LIE_FORMS:
        raise InvalidParamsError(f"no Lie form named {name!r}; known: {sorted(LIE_FORMS)}")
    return LIE_FORMS[name](params)


# ---------------------------------------------------------------------------
# orthogonal polynomials and eigenfunctions


def jacobi_poly(n, a, b):
    """P_n^(a-1/2, b-1/2)(x) as a coefficient list, via the three-term recurrence."""
    al = Fraction(a) - HALF
    be = Fraction(b) - HALF
    p0 = [Fraction(1)]
    if n == 0:
        return p0
    p1 = trim([(al - be) / 2, (al + be + 2) / 2])
    for m in range(2, n + 1):
        s = 2 * m + al + be
        den = 2 * m * (m + al + be) * (s - 2)
        if den == 0:
            raise DegenerateIndexError(f"Jacobi recurrence degenerates at n={m} for indices ({al}, {be})")
        c1 = (s - 1) * (al * al - be * be)
        c2 = (s - 1) * s * (s - 2)
        c3 = 2 * (m + al - 1) * (m + be - 1) * s
        nxt = padd(pmul([c1, c2], p1), pscale(p0, -c3))
        p0, p1 = p1, pscale(nxt, 1 / den)
    return p1


def laguerre_poly(n, alpha):
    """Generalized Laguerre polynomial L_n^(alpha)(x) as a coefficient list."""
    alpha = Fraction(alpha)
    p0 = [Fraction(1)]
    if n == 0:
        return p0
    p1 = trim([1 + alpha, Fraction(-1)])
    for m in range(1, n):
        nxt = padd(pmul([2 * m + 1 + alpha, Fraction(-1)], p1), pscale(p0, -(m + alpha)))
        p0, p1 = p1, pscale(nxt, Fraction(1, m + 1))
    return p1


def apply_angular(poly, k, a, b):
    """Angular operator 4k^2 z(z-1) f'' + 4k^2 [(a+b+1) z - b - 1/2] f' in z."""
    a, b = Fraction(a), Fraction(b)
    kk = 4 * k * k
    d1 = pderiv(poly)
    d2 = pderiv(d1)
    return padd(pscale(pmul([0, -1, 1], d2), kk), pscale(pmul([-b - HALF, a + b + 1], d1), kk))


def apply_radial(poly, k, n, a, b, omega):
    """Radial operator -4t f'' + 4[w t - k(2n+a+b) - 1] f' in t."""
    a, b, omega = Fraction(a), Fraction(b), Fraction(omega)
    d1 = pderiv(poly)
    d2 = pderiv(d1)
    return padd(pmul([0, -4], d2), pmul([-4 * (k * (2 * n + a + b) + 1), 4 * omega], d1))


def _require_rational(params, names):
    for name in names:
        if getattr(params, name) is None:
            raise InvalidParamsError(f"parameter {name} must be rational here")


def eigenpoly(params, N, n):
    """Polynomial eigenfunction of h_k with quantum numbers (N, n):
    L_N^(k(2n+a+b))(w t) * sum_j c_j (2u - t^k)^j t^(k(n-j)) where P_n = sum c_j x^j."""
    _require_rational(params, ("a", "b", "omega"))
    k, a, b, w = params.k, params.a, params.b, params.omega
    lag = laguerre_poly(N, k * (2 * n + a + b))
    radial = Poly2({(p, 0): c * w ** p for p, c in enumerate(lag)}, RATIONAL)
    jac = jacobi_poly(n, a, b)
    base = Poly2({(0, 1): 2, (k, 0): -1}, RATIONAL)
    angular = Poly2({}, RATIONAL)
    power = Poly2({(0, 0): 1}, RATIONAL)
    for j in range(n + 1):
        c = jac[j] if j < len(jac) else Fraction(0)
        if c:
            angular = angular + power * Poly2({(k * (n - j), 0): c}, RATIONAL)
        power = power * base
    return radial * angular


# ---------------------------------------------------------------------------
# spectrum


@dataclass(frozen=True)
class SpectrumRecord:
    N: int
    n: int
    energy: object
    grade: int
    gamma: int
    degeneracy: int


def degeneracy(k, d):
    """Number of (N, n) with N + k n = d."""
    if d < 0:
        return 0
    return d // k + 1


def ground_energy(params):
    return specialize_scalar(2 * W * ((A + B) * params.k + 1), params)


def spectrum(params, d_max):
    """All levels with grade N + k n <= d_max, sorted by (grade, n)."""
    k = params.k
    out = []
    for d in range(d_max + 1):
        for n in range(d // k + 1):
            N = d - k * n
            e = 2 * W * (2 * N + (2 * n + A + B) * k + 1)
            out.append(SpectrumRecord(N, n, specialize_scalar(e, params), d, 2 * k * n, degeneracy(k, d)))
    return out


def a_from_alpha(alpha):
    """Branch a = (1 + sqrt(1 + 4 alpha))/2 of alpha = a(a-1); the radicand
    must be the square of a rational."""
    alpha = Fraction(alpha)
    rad = 1 + 4 * alpha
    if rad < 0:
        raise InvalidParamsError(f"1 + 4*alpha = {rad} is negative")
    num, den = rad.numerator, rad.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise InvalidParamsError(f"1 + 4*alpha = {rad} is not a rational square")
    return (1 + Fraction(rn, rd)) / 2
