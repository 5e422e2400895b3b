"""Localize transcription errors in a y-table by exact linear algebra.

Finds a correction d supported on chosen slots with [h, y + d] = 0, then
prints it.  Used offline to derive the documented errata; not imported by
the package.
"""

import sys
from fractions import Fraction

sys.path.insert(0, "src")

from ttwlab.catalog import ModelParams, build_h, table_to_op  # noqa: E402
from ttwlab.weyl import PARAM, DiffOp, ParamPoly, op_commutator  # noqa: E402


def flat(op):
    out = {}
    for key, c in op.terms.items():
        for e, v in c.terms.items():
            out[key + e] = v
    return out


def slots(k, max_order, max_pdeg, orders=None):
    out = []
    for m in range(max_order + 1):
        for n in range(max_order + 1 - m):
            if orders is not None and (m, n) not in orders:
                continue
            for ew in range(0, 2 * k + 1):
                for j in range(0, 2 * k + 2):
                    # 2i + 2kj - 2m - 2kn - 2ew = -2k
                    twice_i = -2 * k - 2 * k * j + 2 * m + 2 * k * n + 2 * ew
                    if twice_i < 0 or twice_i % 2:
                        continue
                    i = twice_i // 2
                    if i + k * j > m + k * n:
                        continue
                    for ea in range(max_pdeg + 1):
                        for eb in range(max_pdeg + 1 - ea):
                            out.append((i, j, m, n, ea, eb, ew))
    return out


def solve(rows_cols, rhs):
    """Sparse Gauss-Jordan over Q. rows_cols: {col: {row: val}}; returns
    a particular solution dict col -> value, or None if inconsistent."""
    # build row-major equations: for each row index r: sum_c A[r][c] x_c = rhs[r]
    eqs = {}
    for c, col in rows_cols.items():
        for r, v in col.items():
            eqs.setdefault(r, {})[c] = v
    for r in rhs:
        eqs.setdefault(r, {})
    pivots = {}
    order = []
    for r, row in eqs.items():
        row = dict(row)
        b = rhs.get(r, Fraction(0))
        for pc in order:
            if pc in row:
                prow, pb = pivots[pc]
                f = row[pc]
                for cc, vv in prow.items():
                    nv = row.get(cc, 0) - f * vv
                    if nv:
                        row[cc] = nv
                    else:
                        row.pop(cc, None)
                b -= f * pb
        if not row:
            if b:
                return None
            continue
        pc = min(row)
        f = row[pc]
        row = {cc: vv / f for cc, vv in row.items()}
        b = b / f
        # eliminate pc from existing pivots
        for oc in order:
            prow, pb = pivots[oc]
            if pc in prow:
                g = prow[pc]
                for cc, vv in row.items():
                    nv = prow.get(cc, 0) - g * vv
                    if nv:
                        prow[cc] = nv
                    else:
                        prow.pop(cc, None)
                pivots[oc] = (prow, pb - g * b)
        pivots[pc] = (row, b)
        order.append(pc)
    return {pc: pivots[pc][1] for pc in order}, {pc: pivots[pc][0] for pc in order}


def repair(k, y, cand):
    h = build_h(ModelParams(k))
    R = flat(op_commutator(h, y))
    cols = {}
    for s in cand:
        e = DiffOp({s[:4]: ParamPoly({s[4:] + (0,): 1})}, PARAM)
        cols[s] = flat(op_commutator(h, e))
    rhs = {r: -v for r, v in R.items()}
    res = solve(cols, rhs)
    return res


if __name__ == "__main__":
    from ttwlab import printed
    k = int(sys.argv[1])
    maxo = int(sys.argv[2])
    pdeg = int(sys.argv[3])
    rows = {1: printed.Y2_OVER_4, 2: printed.y4_rows(), 3: printed.Y6}.get(k)
    if k == 4:
        rows = printed.y8_rows()
    y = table_to_op(rows)
    orders = None
    if len(sys.argv) > 4:
        orders = {tuple(map(int, o.split(","))) for o in sys.argv[4:]}
    cand = slots(k, maxo, pdeg, orders)
    print(len(cand), "slots")
    res = repair(k, y, cand)
    if res is None:
        print("inconsistent")
    else:
        sol, piv = res
        free = set(cand) - set(sol)
        print("free", len(free))
        for c, v in sorted(sol.items()):
            if v:
                print(c, v, "depends on", sorted(x for x in piv[c] if x != c)[:6])
