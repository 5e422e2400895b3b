"""Exact coefficient rings and the two-variable Weyl algebra in (t, u).

Operators are stored in normal order: a term ``(i, j, m, n) -> c`` means
``c * t**i * u**j * dt**m * du**n`` with all derivatives to the right.
Coefficients live in one of two rings:

* ``"rational"``: :class:`fractions.Fraction`
* ``"param"``: :class:`ParamPoly`, polynomials over Q in the formal
  parameters ``a, b, w, l`` (w is the frequency omega, l the quartic
  coupling lambda).
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb

__all__ = [
    "PARAMS",
    "RATIONAL",
    "PARAM",
    "RingMismatchError",
    "BudgetExceededError",
    "MissingParameterError",
    "ParamPoly",
    "DiffOp",
    "Poly2",
    "op_add",
    "op_mul",
    "op_commutator",
    "op_apply",
    "scalar_instantiate",
    "parse_rational",
    "format_rational",
    "parse_op",
    "emit_op",
    "DEFAULT_BUDGET",
]

PARAMS = ("a", "b", "w", "l")
_PARAM_INDEX = {name: idx for idx, name in enumerate(PARAMS)}
_PARAM_ALIASES = {"omega": "w", "lambda": "l", "lam": "l"}

RATIONAL = "rational"
PARAM = "param"

DEFAULT_BUDGET = 10**7

_ZERO = Fraction(0)
_ONE = Fraction(1)


class RingMismatchError(TypeError):
    """Operands live in different coefficient rings."""


class BudgetExceededError(RuntimeError):
    """An intermediate product grew past the configured term budget."""

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = dict(stats or {})


class MissingParameterError(KeyError):
    """Instantiation was asked to drop a parameter it has no value for."""


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _canonical_param(name):
    name = _PARAM_ALIASES.get(name, name)
    if name not in _PARAM_INDEX:
        raise KeyError(f"unknown parameter {name!r}")
    return name


# ---------------------------------------------------------------------------
# parameter polynomials


class ParamPoly:
    """Sparse polynomial over Q in the parameters ``a, b, w, l``.

    Immutable; ``terms`` maps exponent quadruples to nonzero Fractions.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exps, coef in terms.items():
                if coef:
                    clean[tuple(exps)] = _as_fraction(coef)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, value):
        value = _as_fraction(value)
        return cls._raw({(0, 0, 0, 0): value} if value else {})

    @classmethod
    def var(cls, name):
        exps = [0, 0, 0, 0]
        exps[_PARAM_INDEX[_canonical_param(name)]] = 1
        return cls._raw({tuple(exps): _ONE})

    @classmethod
    def lift(cls, value):
        if isinstance(value, ParamPoly):
            return value
        return cls.const(value)

    # -- inspection -------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and (0, 0, 0, 0) in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((0, 0, 0, 0), _ZERO)

    def degree(self, name):
        idx = _PARAM_INDEX[_canonical_param(name)]
        return max((e[idx] for e in self.terms), default=0)

    def variables(self):
        used = set()
        for exps in self.terms:
            for idx, e in enumerate(exps):
                if e:
                    used.add(PARAMS[idx])
        return used

    # -- arithmetic -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, ParamPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ParamPoly.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self):
        return ParamPoly._raw({k: -v for k, v in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, ParamPoly):
            if isinstance(other, (int, Fraction)):
                other = ParamPoly.const(other)
            else:
                return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, _ZERO) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return ParamPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, ParamPoly):
            if isinstance(other, (int, Fraction)):
                other = ParamPoly.const(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ParamPoly._raw({})
            return ParamPoly._raw({k: v * other for k, v in self.terms.items()})
        if not isinstance(other, ParamPoly):
            return NotImplemented
        out = {}
        for (a1, b1, w1, l1), v1 in self.terms.items():
            for (a2, b2, w2, l2), v2 in other.terms.items():
                key = (a1 + a2, b1 + b2, w1 + w2, l1 + l2)
                out[key] = out.get(key, _ZERO) + v1 * v2
        return ParamPoly._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = ParamPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, values, partial=False):
        """Substitute rational values; returns a Fraction (or a ParamPoly if
        ``partial`` and some parameters are left unassigned)."""
        vals = {}
        for name, val in values.items():
            vals[_PARAM_INDEX[_canonical_param(name)]] = _as_fraction(val)
        out = {}
        for exps, coef in self.terms.items():
            rest = list(exps)
            c = coef
            for idx, e in enumerate(exps):
                if e and idx in vals:
                    c *= vals[idx] ** e
                    rest[idx] = 0
                elif e and not partial:
                    raise MissingParameterError(PARAMS[idx])
            key = tuple(rest)
            out[key] = out.get(key, _ZERO) + c
        poly = ParamPoly({k: v for k, v in out.items() if v})
        if partial:
            return poly
        return poly.terms.get((0, 0, 0, 0), _ZERO)

    # -- text ---------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    def to_text(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coef in self.sorted_terms():
            mono = " ".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(PARAMS, exps) if e
            )
            body = format_rational(abs(coef)) + (" " + mono if mono else "")
            if not parts:
                parts.append(("-" if coef < 0 else "") + body)
            else:
                parts.append(("- " if coef < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"ParamPoly({self.to_text()!r})"

    __str__ = to_text


def _ring_of(coef):
    return PARAM if isinstance(coef, ParamPoly) else RATIONAL


def _zero_of(ring):
    return ParamPoly._raw({}) if ring == PARAM else _ZERO


def _lift_to(coef, ring):
    if ring == PARAM:
        return ParamPoly.lift(coef)
    if isinstance(coef, ParamPoly):
        raise RingMismatchError("cannot place a parameter polynomial in the rational ring")
    return _as_fraction(coef)


# ---------------------------------------------------------------------------
# operators and polynomials


class DiffOp:
    """Normal-ordered differential operator in (t, u) with exact coefficients."""

    __slots__ = ("terms", "ring", "_hash")

    def __init__(self, terms=None, ring=None):
        terms = dict(terms or {})
        if ring is None:
            ring = PARAM if any(isinstance(c, ParamPoly) for c in terms.values()) else RATIONAL
        clean = {}
        for key, coef in terms.items():
            key = tuple(int(x) for x in key)
            if len(key) != 4 or min(key) < 0:
                raise ValueError(f"bad monomial key {key}")
            coef = _lift_to(coef, ring)
            if coef:
                clean[key] = coef
        self.terms = clean
        self.ring = ring
        self._hash = None

    @classmethod
    def _raw(cls, terms, ring):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.ring = ring
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, ring=RATIONAL):
        return cls._raw({}, ring)

    @classmethod
    def identity(cls, ring=RATIONAL):
        return cls._raw({(0, 0, 0, 0): _lift_to(1, ring)}, ring)

    @classmethod
    def mono(cls, i=0, j=0, m=0, n=0, coef=1, ring=None):
        if ring is None:
            ring = _ring_of(coef)
        return cls({(i, j, m, n): coef}, ring)

    def to_ring(self, ring):
        if ring == self.ring:
            return self
        if ring == PARAM:
            return DiffOp._raw({k: ParamPoly.lift(v) for k, v in self.terms.items()}, PARAM)
        out = {}
        for k, v in self.terms.items():
            if not v.is_constant():
                raise RingMismatchError("operator has genuine parameter dependence")
            out[k] = v.constant_value()
        return DiffOp._raw(out, RATIONAL)

    def to_param(self):
        return self.to_ring(PARAM)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_items(self):
        return sorted(self.terms.items())

    def order(self):
        return max((m + n for (_, _, m, n) in self.terms), default=0)

    def coefficient(self, i=0, j=0, m=0, n=0):
        return self.terms.get((i, j, m, n), _zero_of(self.ring))

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        if self.ring != other.ring:
            return False
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __neg__(self):
        return DiffOp._raw({k: -v for k, v in self.terms.items()}, self.ring)

    def __add__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return op_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return op_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, DiffOp):
            return op_mul(self, other)
        if isinstance(other, (int, Fraction, ParamPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            return self.scale(other)
        return NotImplemented

    def __matmul__(self, poly):
        return op_apply(self, poly)

    def scale(self, factor):
        if isinstance(factor, ParamPoly):
            if self.ring != PARAM:
                if factor.is_constant():
                    factor = factor.constant_value()
                else:
                    raise RingMismatchError("scaling a rational operator by a parameter polynomial")
        out = {}
        for k, v in self.terms.items():
            c = v * factor
            if c:
                out[k] = c
        return DiffOp._raw(out, self.ring)

    def __repr__(self):
        return f"DiffOp<{self.ring}, {len(self.terms)} terms>"

    def __str__(self):
        return emit_op(self)


class Poly2:
    """Polynomial in (t, u); ``terms`` maps (p, q) to the coefficient of t^p u^q."""

    __slots__ = ("terms", "ring")

    def __init__(self, terms=None, ring=None):
        terms = dict(terms or {})
        if ring is None:
            ring = PARAM if any(isinstance(c, ParamPoly) for c in terms.values()) else RATIONAL
        self.terms = {}
        for key, coef in terms.items():
            coef = _lift_to(coef, ring)
            if coef:
                self.terms[(int(key[0]), int(key[1]))] = coef
        self.ring = ring

    @classmethod
    def _raw(cls, terms, ring):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.ring = ring
        return obj

    @classmethod
    def monomial(cls, p, q, coef=1, ring=None):
        return cls({(p, q): coef}, ring)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Poly2):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __neg__(self):
        return Poly2._raw({k: -v for k, v in self.terms.items()}, self.ring)

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, _zero_of(self.ring)) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Poly2._raw(out, self.ring)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly2):
            self._check(other)
            out = {}
            for (p1, q1), c1 in self.terms.items():
                for (p2, q2), c2 in other.terms.items():
                    key = (p1 + p2, q1 + q2)
                    out[key] = out.get(key, _zero_of(self.ring)) + c1 * c2
            return Poly2._raw({k: v for k, v in out.items() if v}, self.ring)
        return Poly2._raw({k: v * other for k, v in self.terms.items() if v * other}, self.ring)

    __rmul__ = __mul__

    def degree_in(self, var):
        idx = 0 if var == "t" else 1
        return max((k[idx] for k in self.terms), default=0)

    def evaluate(self, t, u):
        total = _zero_of(self.ring)
        for (p, q), c in self.terms.items():
            total = total + c * (Fraction(t) ** p) * (Fraction(u) ** q)
        return total

    def instantiate(self, values):
        if self.ring == RATIONAL:
            return self
        out = {k: v.evaluate(values) for k, v in self.terms.items()}
        return Poly2._raw({k: v for k, v in out.items() if v}, RATIONAL)

    def __repr__(self):
        body = " + ".join(f"({c})*t^{p}*u^{q}" for (p, q), c in sorted(self.terms.items()))
        return f"Poly2({body or '0'})"


def _check_rings(lhs, rhs):
    if lhs.ring != rhs.ring:
        raise RingMismatchError(f"incompatible coefficient rings: {lhs.ring} vs {rhs.ring}")


def op_add(lhs, rhs):
    """Termwise sum; zero coefficients are dropped."""
    _check_rings(lhs, rhs)
    out = dict(lhs.terms)
    zero = _zero_of(lhs.ring)
    for k, v in rhs.terms.items():
        s = out.get(k, zero) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return DiffOp._raw(out, lhs.ring)


def _falling(n, r):
    out = 1
    for x in range(n - r + 1, n + 1):
        out *= x
    return out


def _leibniz_table(m, i):
    # d^m . x^i = sum_r C(m, r) i!/(i-r)! x^(i-r) d^(m-r)
    return [(r, comb(m, r) * _falling(i, r)) for r in range(min(m, i) + 1)]


def op_mul(lhs, rhs, budget=DEFAULT_BUDGET):
    """Normal-ordered product ``lhs * rhs``."""
    _check_rings(lhs, rhs)
    ring = lhs.ring
    if ring == PARAM:
        return _mul_param(lhs, rhs, budget)
    out = {}
    cache = {}
    for (i1, j1, m1, n1), c1 in lhs.terms.items():
        for (i2, j2, m2, n2), c2 in rhs.terms.items():
            tkey = (m1, i2)
            tt = cache.get(tkey)
            if tt is None:
                tt = cache[tkey] = _leibniz_table(m1, i2)
            ukey = (n1, j2)
            uu = cache.get(ukey)
            if uu is None:
                uu = cache[ukey] = _leibniz_table(n1, j2)
            c = c1 * c2
            for r, fr in tt:
                for s, fs in uu:
                    key = (i1 + i2 - r, j1 + j2 - s, m1 + m2 - r, n1 + n2 - s)
                    out[key] = out.get(key, _ZERO) + c * (fr * fs)
        if len(out) > budget:
            raise BudgetExceededError(
                "term budget exceeded in op_mul",
                {"terms": len(out), "budget": budget, "lhs_terms": len(lhs.terms), "rhs_terms": len(rhs.terms)},
            )
    return DiffOp._raw({k: v for k, v in out.items() if v}, RATIONAL)


def _mul_param(lhs, rhs, budget):
    # Flattened accumulation: key = monomial + parameter exponents.
    flat = {}
    cache = {}
    for (i1, j1, m1, n1), c1 in lhs.terms.items():
        for (i2, j2, m2, n2), c2 in rhs.terms.items():
            tkey = (m1, i2)
            tt = cache.get(tkey)
            if tt is None:
                tt = cache[tkey] = _leibniz_table(m1, i2)
            ukey = (n1, j2)
            uu = cache.get(ukey)
            if uu is None:
                uu = cache[ukey] = _leibniz_table(n1, j2)
            prod = {}
            for (a1, b1, w1, l1), v1 in c1.terms.items():
                for (a2, b2, w2, l2), v2 in c2.terms.items():
                    pk = (a1 + a2, b1 + b2, w1 + w2, l1 + l2)
                    prod[pk] = prod.get(pk, _ZERO) + v1 * v2
            for r, fr in tt:
                for s, fs in uu:
                    f = fr * fs
                    mono = (i1 + i2 - r, j1 + j2 - s, m1 + m2 - r, n1 + n2 - s)
                    for pk, v in prod.items():
                        key = mono + pk
                        flat[key] = flat.get(key, _ZERO) + v * f
        if len(flat) > budget:
            raise BudgetExceededError(
                "term budget exceeded in op_mul",
                {"terms": len(flat), "budget": budget, "lhs_terms": len(lhs.terms), "rhs_terms": len(rhs.terms)},
            )
    grouped = {}
    for key, v in flat.items():
        if v:
            grouped.setdefault(key[:4], {})[key[4:]] = v
    return DiffOp._raw({k: ParamPoly._raw(v) for k, v in grouped.items()}, PARAM)


def op_commutator(lhs, rhs, budget=DEFAULT_BUDGET):
    """``lhs*rhs - rhs*lhs``; an empty result means exact commutation."""
    return op_add(op_mul(lhs, rhs, budget), -op_mul(rhs, lhs, budget))


def op_apply(op, poly):
    """Image of a polynomial under an operator."""
    if op.ring != poly.ring:
        raise RingMismatchError(f"incompatible coefficient rings: {op.ring} vs {poly.ring}")
    zero = _zero_of(op.ring)
    out = {}
    for (i, j, m, n), c in op.terms.items():
        for (p, q), d in poly.terms.items():
            if m > p or n > q:
                continue
            f = _falling(p, m) * _falling(q, n)
            key = (p - m + i, q - n + j)
            out[key] = out.get(key, zero) + c * d * f
    return Poly2._raw({k: v for k, v in out.items() if v}, op.ring)


def scalar_instantiate(op, values):
    """Substitute rational parameter values; result lives in the rational ring."""
    if op.ring == RATIONAL:
        return op
    out = {}
    for k, v in op.terms.items():
        c = v.evaluate(values)
        if c:
            out[k] = c
    return DiffOp._raw(out, RATIONAL)


# ---------------------------------------------------------------------------
# text format

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text):
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"malformed rational {text!r}")
    value = Fraction(text)
    return value


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


_PP_TOKEN = re.compile(r"\s*(?:(?P<sign>[+-])|(?P<num>\d+(?:/\d+)?)|(?P<var>[abwl])(?:\^(?P<exp>\d+))?)")


def _parse_parampoly(text):
    pos = 0
    text = text.strip()
    terms = {}
    sign = 1
    coef = None
    exps = [0, 0, 0, 0]
    started = False

    def flush():
        if not started:
            return
        c = Fraction(sign) * (coef if coef is not None else _ONE)
        key = tuple(exps)
        terms[key] = terms.get(key, _ZERO) + c

    while pos < len(text):
        m = _PP_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse parameter polynomial near {text[pos:]!r}")
        pos = m.end()
        if m.group("sign"):
            flush()
            sign = -1 if m.group("sign") == "-" else 1
            coef = None
            exps = [0, 0, 0, 0]
            started = False
        elif m.group("num"):
            if coef is not None:
                raise ValueError("two coefficients in one term")
            coef = Fraction(m.group("num"))
            started = True
        else:
            exps[_PARAM_INDEX[m.group("var")]] += int(m.group("exp") or 1)
            started = True
    flush()
    return ParamPoly({k: v for k, v in terms.items() if v})


_MONO_TOKEN = re.compile(r"^(t|u|dt|du)(?:\^(\d+))?$")
_MONO_SLOT = {"t": 0, "u": 1, "dt": 2, "du": 3}


def _parse_mono(text):
    exps = [0, 0, 0, 0]
    for tok in text.split():
        m = _MONO_TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad monomial token {tok!r}")
        exps[_MONO_SLOT[m.group(1)]] += int(m.group(2) or 1)
    return tuple(exps)


def _emit_mono(key):
    parts = []
    for name, e in zip(("t", "u", "dt", "du"), key):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return " ".join(parts)


def emit_op(op):
    """One term per line, lexicographic in (i, j, m, n)."""
    lines = []
    for key, coef in op.sorted_items():
        scalar = "{" + coef.to_text() + "}" if op.ring == PARAM else format_rational(coef)
        mono = _emit_mono(key)
        lines.append(f"{scalar} {mono}".rstrip())
    return "\n".join(lines) + ("\n" if lines else "")


def parse_op(text, ring=None):
    """Inverse of :func:`emit_op`. Comments start with ``#``.

    Rational lines are promoted to constant parameter polynomials when any
    line carries a ``{...}`` coefficient or ``ring=PARAM`` is requested.
    """
    parsed = []
    symbolic = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("{"):
            close = line.find("}")
            if close < 0:
                raise ValueError(f"line {lineno}: unterminated parameter polynomial")
            coef = _parse_parampoly(line[1:close])
            rest = line[close + 1:]
            symbolic = True
        else:
            head, _, rest = line.partition(" ")
            try:
                coef = parse_rational(head)
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
        try:
            key = _parse_mono(rest)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        parsed.append((key, coef))
    if ring is None:
        ring = PARAM if symbolic else RATIONAL
    elif ring == RATIONAL and symbolic:
        raise RingMismatchError("parameter coefficients in a rational operator")
    terms = {}
    for key, coef in parsed:
        if ring == PARAM and not isinstance(coef, ParamPoly):
            coef = ParamPoly.const(coef)
        terms[key] = terms[key] + coef if key in terms else coef
    return DiffOp(terms, ring)
