"""Flag spaces of polynomials in (t, u), operator matrices on them, and the
finite QES sector.

The space P_N^(s) is spanned by t^p u^q with p + s q <= N; an optional cap
on q gives the reduced spaces spanned by polynomials of bounded u-degree.
Bases are ordered by (grade, q) with grade = p + s q.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .catalog import (
    GeneratorSpec,
    ModelParams,
    InvalidParamsError,
    build_generator,
    build_hqes,
    build_hqes_gauge,
    specialize,
)
from .upoly import isolate_real_roots, pdivmod, pmul, psub, trim
from .weyl import RATIONAL, ParamPoly, Poly2, format_rational, op_apply

__all__ = [
    "FlagSpec",
    "OpMatrix",
    "QesSector",
    "StructureError",
    "TriangularityError",
    "basis",
    "represent",
    "preserves",
    "graded_spectrum",
    "charpoly",
    "qes_sector",
    "generator_closure_check",
    "ClosureReport",
]


class StructureError(ValueError):
    """An operator does not have the shape a computation relies on."""


class TriangularityError(StructureError):
    pass


@dataclass(frozen=True)
class FlagSpec:
    N: int
    s: int = 1
    p_max: int | None = None

    def __post_init__(self):
        if self.N < 0:
            raise ValueError("flag level N must be non-negative")
        if self.s < 1:
            raise ValueError("grading weight s must be positive")
        if self.p_max is not None and self.p_max < 0:
            raise ValueError("cap on the u-degree must be non-negative")

    def grade(self, p, q):
        return p + self.s * q

    def contains(self, p, q):
        if p < 0 or q < 0:
            return False
        if self.p_max is not None and q > self.p_max:
            return False
        return self.grade(p, q) <= self.N

    @cached_property
    def monomials(self):
        out = []
        q_top = self.N // self.s
        if self.p_max is not None:
            q_top = min(q_top, self.p_max)
        for q in range(q_top + 1):
            for p in range(self.N - self.s * q + 1):
                out.append((p, q))
        out.sort(key=lambda pq: (self.grade(*pq), pq[1]))
        return tuple(out)

    @cached_property
    def index(self):
        return {pq: i for i, pq in enumerate(self.monomials)}

    @property
    def dim(self):
        return len(self.monomials)


def basis(spec):
    """Ordered basis monomials (p, q) of the space."""
    return list(spec.monomials)


def _label(p, q):
    parts = []
    if p:
        parts.append("t" if p == 1 else f"t^{p}")
    if q:
        parts.append("u" if q == 1 else f"u^{q}")
    return " ".join(parts) or "1"


def _zero(ring):
    return Fraction(0) if ring == RATIONAL else ParamPoly()


def _scalar_text(c):
    if isinstance(c, ParamPoly):
        return c.to_text()
    return format_rational(c)


@dataclass
class OpMatrix:
    """Matrix of an operator on a flag space; column j is the image of basis
    monomial j.  ``escapes`` lists (column monomial, image monomial) pairs
    that fall outside the space."""

    space: FlagSpec
    ring: str
    entries: list
    escapes: list = field(default_factory=list)

    @property
    def closed(self):
        return not self.escapes

    @property
    def dim(self):
        return self.space.dim

    def __matmul__(self, other):
        if self.space != other.space or self.ring != other.ring:
            raise ValueError("matrices live on different spaces or rings")
        n = self.dim
        zero = _zero(self.ring)
        out = [[zero] * n for _ in range(n)]
        for i in range(n):
            row = self.entries[i]
            for k in range(n):
                if row[k]:
                    a = row[k]
                    other_row = other.entries[k]
                    for j in range(n):
                        if other_row[j]:
                            out[i][j] = out[i][j] + a * other_row[j]
        return OpMatrix(self.space, self.ring, out, self.escapes + other.escapes)

    def __eq__(self, other):
        if not isinstance(other, OpMatrix):
            return NotImplemented
        return (self.space == other.space and self.entries == other.entries
                and self.closed == other.closed)

    def diagonal(self):
        return [self.entries[i][i] for i in range(self.dim)]

    def to_csv(self):
        """CSV with a header of basis monomials; rows follow the basis order."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        labels = [_label(p, q) for p, q in self.space.monomials]
        writer.writerow(["row"] + labels)
        for label, row in zip(labels, self.entries):
            writer.writerow([label] + [_scalar_text(c) for c in row])
        return buf.getvalue()


def represent(op, spec):
    """Exact matrix of ``op`` on ``spec``; images leaving the space are
    recorded in ``escapes`` rather than raised."""
    n = spec.dim
    zero = _zero(op.ring)
    entries = [[zero] * n for _ in range(n)]
    escapes = []
    for j, (p, q) in enumerate(spec.monomials):
        image = op_apply(op, Poly2.monomial(p, q, ring=op.ring))
        for (pp, qq), c in sorted(image.terms.items()):
            i = spec.index.get((pp, qq))
            if i is None:
                escapes.append(((p, q), (pp, qq)))
            else:
                entries[i][j] = c
    return OpMatrix(spec, op.ring, entries, escapes)


def preserves(op, spec):
    """True iff ``op`` maps the space into itself."""
    for p, q in spec.monomials:
        image = op_apply(op, Poly2.monomial(p, q, ring=op.ring))
        if any(not spec.contains(pp, qq) for pp, qq in image.terms):
            return False
    return True


def graded_spectrum(op, spec):
    """Eigenvalues of a grade-triangular operator read off its diagonal.

    Returns ``[(grade, [(value, multiplicity), ...]), ...]`` by ascending
    grade.  Raises TriangularityError if some entry raises the grade or
    mixes two monomials of the same grade."""
    m = represent(op, spec)
    if not m.closed:
        src, dst = m.escapes[0]
        raise StructureError(f"operator maps {_label(*src)} to {_label(*dst)} outside the space")
    mono = spec.monomials
    for j, (p, q) in enumerate(mono):
        gj = spec.grade(p, q)
        for i, (pp, qq) in enumerate(mono):
            if i == j or not m.entries[i][j]:
                continue
            if spec.grade(pp, qq) >= gj:
                raise TriangularityError(
                    f"entry {_label(pp, qq)} <- {_label(p, q)} does not lower the grade")
    levels = {}
    for (p, q), value in zip(mono, m.diagonal()):
        counts = levels.setdefault(spec.grade(p, q), [])
        for item in counts:
            if item[0] == value:
                item[1] += 1
                break
        else:
            counts.append([value, 1])
    return [(g, [tuple(x) for x in levels[g]]) for g in sorted(levels)]


# ---------------------------------------------------------------------------
# characteristic polynomials


def charpoly(entries):
    """det(x I - M) for a square rational matrix by fraction-free (Bareiss)
    elimination over Q[x].  Coefficients lowest degree first."""
    n = len(entries)
    if n == 0:
        return [Fraction(1)]
    a = [[trim([-Fraction(entries[i][j])] + ([Fraction(1)] if i == j else [])) for j in range(n)]
         for i in range(n)]
    sign = 1
    prev = [Fraction(1)]
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return []
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = psub(pmul(a[i][j], a[k][k]), pmul(a[i][k], a[k][j]))
                q, r = pdivmod(num, prev)
                if r:
                    raise ArithmeticError("inexact Bareiss division")
                a[i][j] = q
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return [c * sign for c in det]


@dataclass
class QesSector:
    params: ModelParams
    variant: str
    matrix: OpMatrix
    charpoly: list
    roots: list

    @property
    def dim(self):
        return self.matrix.dim

    def report(self):
        p = self.params
        return {
            "k": p.k,
            "N": p.N,
            "a": format_rational(p.a),
            "b": format_rational(p.b),
            "omega": format_rational(p.omega),
            "lambda": format_rational(p.lam),
            "variant": self.variant,
            "dim": self.dim,
            "charpoly": [format_rational(c) for c in self.charpoly],
            "roots": [[format_rational(lo), format_rational(hi)] for lo, hi in self.roots],
        }

    def to_json(self):
        return json.dumps(self.report(), indent=2, sort_keys=True)


QES_VARIANTS = {"printed": build_hqes, "gauge": build_hqes_gauge}


def qes_sector(params, width=Fraction(1, 10**12), variant="printed"):
    """Exact diagonalization of the QES operator on P_N^(k) with N = params.N.

    All of a, b, omega, lam must be rational.  ``variant`` selects the
    operator with the printed sign of lam ("printed") or the one obtained
    by conjugating with the gauge factor ("gauge"); they differ by lam -> -lam."""
    missing = [name for name in ("a", "b", "omega", "lam") if getattr(params, name) is None]
    if missing:
        raise InvalidParamsError(f"the QES sector needs rational values for {', '.join(missing)}")
    if variant not in QES_VARIANTS:
        raise ValueError(f"unknown QES variant {variant!r}")
    op = specialize(QES_VARIANTS[variant](ModelParams(params.k, N=params.N)), params)
    spec = FlagSpec(params.N, params.k)
    m = represent(op, spec)
    if not m.closed:
        src, dst = m.escapes[0]
        raise StructureError(f"QES operator maps {_label(*src)} to {_label(*dst)} outside P_N")
    cp = charpoly(m.entries)
    return QesSector(params, variant, m, cp, isolate_real_roots(cp, width))


# ---------------------------------------------------------------------------
# generators on the flag


@dataclass
class ClosureReport:
    s: int
    N: int
    results: dict

    @property
    def ok(self):
        return all(self.results.values())


def generator_closure_check(s, N):
    """Check that each generator J1, J2_N, J3_N, J4_N, R_0..R_s, T_s maps
    P_N^(s) into itself."""
    spec = FlagSpec(N, s)
    specs = [GeneratorSpec("J1", s=s)]
    specs += [GeneratorSpec(w, s=s, N=N) for w in ("J2", "J3", "J4")]
    specs += [GeneratorSpec("R", s=s, i=i) for i in range(s + 1)]
    specs.append(GeneratorSpec("T", s=s))
    results = {g.label(): preserves(build_generator(g), spec) for g in specs}
    return ClosureReport(s, N, results)

