"""Acceptance suite: one test per criterion, each recording a PASS/FAIL line.

Every comparison is exact (rational arithmetic, zero tolerance).  Run with
``pytest tests/test_acceptance.py`` for the summary block, or execute this
file directly to print the lines without pytest's report.
"""

import csv
import io
import sys
import time
from contextlib import redirect_stdout
from fractions import Fraction

import pytest

from ttwlab import cartesian as cart
from ttwlab.catalog import (
    ModelParams,
    apply_angular,
    apply_radial,
    build_h,
    build_hqes,
    build_x,
    build_y,
    conjecture_witness,
    eigenpoly,
    jacobi_poly,
    laguerre_poly,
    lie_form,
    lie_residual,
    specialize,
)
from ttwlab.cli import main as cli_main
from ttwlab.flag import FlagSpec, graded_spectrum, preserves, qes_sector
from ttwlab.upoly import padd, pmul, pscale, trim
from ttwlab.weyl import op_commutator

from acceptance_log import lines, record
from oracles import cofactor_charpoly

TOLERANCE = 0  # exact equality of rationals throughout
H = Fraction(1, 2)
RATIONAL_SETS = [(H, Fraction(1, 3), Fraction(3, 2)), (Fraction(2), Fraction(5, 4), Fraction(1))]
AB_SETS = [(H, H), (Fraction(2, 3), Fraction(5, 4)), (Fraction(3), Fraction(1, 3))]
CART_SETS = [(H, Fraction(1, 3), Fraction(1)), (Fraction(2, 3), Fraction(5, 4), Fraction(3, 2)),
             (Fraction(3), Fraction(2), Fraction(1, 2))]
ALPHA, BETA, OMEGA = Fraction(3, 7), Fraction(5, 11), Fraction(3, 2)


def compose_affine(p, c0, c1):
    out = [Fraction(0)]
    for c in reversed(p):
        out = padd(pmul(out, [c0, c1]), [c])
    return trim(out)


def count_states(k, d):
    return sum(1 for N in range(d + 1) for n in range(d + 1) if N + k * n == d)


def cli_rows(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli_main(list(argv))
    assert code == 0
    return list(csv.DictReader(io.StringIO(buf.getvalue())))


def test_criterion_01_h_commutes_with_x():
    start = time.perf_counter()
    ok = all(op_commutator(build_h(ModelParams(k)), build_x(ModelParams(k))).is_zero() for k in range(1, 7))
    seconds = time.perf_counter() - start
    ok = ok and seconds < 5
    record(1, ok, "[h_k, x_k] = 0 symbolically, k = 1..6", f"{seconds:.2f} s")
    assert ok


def test_criterion_02_h_commutes_with_y():
    start = time.perf_counter()
    ok = all(op_commutator(build_h(ModelParams(k)), build_y(ModelParams(k)).op).is_zero() for k in range(1, 5))
    seconds = time.perf_counter() - start
    record(2, ok, "[h_k, y_2k] = 0 symbolically, k = 1..4 (with documented errata)", f"{seconds:.1f} s")
    assert ok


def test_criterion_03_spectrum():
    ok = True
    for k in range(1, 6):
        spec = FlagSpec(10, k)
        for a, b, w in RATIONAL_SETS:
            params = ModelParams(k, a=a, b=b, omega=w)
            levels = dict(graded_spectrum(specialize(build_h(ModelParams(k)), params), spec))
            for d in range(11):
                ok &= levels[d] == [(4 * w * d, count_states(k, d))]
            rows = cli_rows("spectrum", "--k", str(k), "--params", f"a={a},b={b},w={w}",
                            "--d-max", "10", "--format", "csv")
            for row in rows:
                N, n = int(row["N"]), int(row["n"])
                ok &= Fraction(row["E"]) == 2 * w * (2 * N + (2 * n + a + b) * k + 1)
                ok &= int(row["degeneracy"]) == count_states(k, int(row["d"]))
            ground = next(r for r in rows if r["N"] == "0" and r["n"] == "0")
            ok &= Fraction(ground["E"]) == 2 * w * ((a + b) * k + 1)
            ok &= len(rows) == sum(count_states(k, d) for d in range(11))
    record(3, ok, "graded spectrum 4w(N+kn) on P_10^(k) and E_(N,n), E_0 tables, k = 1..5")
    assert ok


def test_criterion_04_angular_and_radial():
    ok = True
    for a, b in AB_SETS:
        for k in (1, 2, 3, 4):
            for n in range(11):
                p = compose_affine(jacobi_poly(n, a, b), -1, 2)
                ok &= apply_angular(p, k, a, b) == trim(pscale(p, 4 * k * k * n * (n + a + b)))
            w = Fraction(3, 2)
            for n in (0, 1, 2):
                for N in range(11):
                    lag = compose_affine(laguerre_poly(N, k * (2 * n + a + b)), 0, w)
                    ok &= apply_radial(lag, k, n, a, b, w) == trim(pscale(lag, 4 * w * N))
    record(4, ok, "Jacobi eigenvalues 4k^2 n(n+a+b), n <= 10; Laguerre 4wN, N <= 10")
    assert ok


def test_criterion_05_flags():
    ok = True
    for k in range(1, 5):
        h, x = build_h(ModelParams(k)), build_x(ModelParams(k))
        for s in range(1, k + 3):
            h_all = all(preserves(h, FlagSpec(n, s)) for n in range(9))
            x_all = all(preserves(x, FlagSpec(n, s)) for n in range(9))
            if s >= k - 1:
                ok &= h_all
            ok &= x_all == (s >= k)
        for n in range(9):
            ok &= preserves(h, FlagSpec(n, k, p_max=0))
        params = ModelParams(k, a=H, b=H, omega=1)
        for N in range(5):
            phi = eigenpoly(params, N, 0)
            ok &= all(q == 0 for _, q in phi.terms)
    record(5, ok, "h_k preserves P^(s) for s >= k-1, x_k iff s >= k; t-only capped flag invariant")
    assert ok


def test_criterion_06_constants():
    ok = True
    for k in range(1, 5):
        for a, b, w in CART_SETS:
            params = ModelParams(k, a=a, b=b, omega=w)
            report = cart.ground_state_check(params, cart.sample_points(3, seed=k, ks=[k]), which="y")
            ok &= report.ok and Fraction(report.extra["expected"]) == build_y(params).constant
    record(6, ok, "gauge-rotated Y_2k on 1 equals C_2k, k = 1..4, 3 parameter sets x 3 points")
    assert ok


def test_criterion_07_cartesian_certification():
    ok = True
    detail = []
    for k in range(1, 5):
        h, y = cart.cart_h(k, ALPHA, BETA, OMEGA), cart.cart_y(k, ALPHA, BETA, OMEGA)
        c = cart.commutator(h, y)
        points = cart.sample_points(12, seed=k, ops=[h, y], ks=[k])
        report = cart.certify_zero(c, c.order, points)
        ok &= report.ok and len(points) >= 12
        detail.append(f"k={k}: {len(points) - len({tuple(r['point']) for r in report.residuals})}/12")
    h = cart.cart_h(2, ALPHA, BETA, OMEGA)
    bumped = cart.cart_y(2, ALPHA, BETA, OMEGA) + cart.CartOp(
        (cart.Term("mul", (2, 2), cart.RatCoef.make({(0, 0): 1})),))
    c = cart.commutator(h, bumped)
    points = cart.sample_points(12, seed=2, ops=[h, bumped], ks=[2])
    failing = {tuple(r["point"]) for r in cart.certify_zero(c, c.order, points).residuals}
    ok &= len(failing) == len(points)
    detail.append(f"negative control fails at {len(failing)}/12")
    record(7, ok, "certify_zero([H_k, Y_2k]) at 12 points, k = 1..4", "; ".join(detail))
    assert ok


def test_criterion_08_qes_sector():
    ok = True
    qes = dict(a=H, b=Fraction(1, 3), omega=Fraction(1), lam=H)
    for k in range(1, 5):
        ok &= op_commutator(build_hqes(ModelParams(k, N=2)), build_x(ModelParams(k))).is_zero()
        for n in range(5):
            sector = qes_sector(ModelParams(k, N=n, **qes))
            ok &= sector.matrix.closed
            ok &= sector.dim == sum(1 for p in range(n + 1) for q in range(n + 1) if p + k * q <= n)
            if sector.dim <= 6:
                ok &= sector.charpoly == cofactor_charpoly(sector.matrix.entries)
            flat = qes_sector(ModelParams(k, N=n, **dict(qes, lam=0)))
            expected = [Fraction(1)]
            for p, q in FlagSpec(n, k).monomials:
                expected = pmul(expected, [4 * qes["omega"] * (p + k * q), 1])
            ok &= flat.charpoly == expected
    record(8, ok, "QES sector closed on P_N^(k), [h_qes, x_k] = 0, lam = 0 triangular, charpoly oracle")
    assert ok


@pytest.mark.xfail(strict=True, reason="two printed Lie-algebraic forms leave nonzero residuals; see the decision ledger")
def test_criterion_09_lie_forms():
    residuals = {}
    for name, k in (("x", 1), ("x", 2), ("x", 3), ("y2", 1), ("hqes", 1), ("hqes", 2), ("x-qes", 1), ("x-qes", 2)):
        expr, target = lie_form(name, ModelParams(k, N=2))
        residuals[(name, k)] = len(lie_residual(expr, target).terms)
    reports = {}
    for name, k in (("h", 1), ("h", 2), ("y4", 2)):
        expr, target = lie_form(name, ModelParams(k))
        reports[(name, k)] = lie_residual(expr, target).terms
    produced = all(r is not None for r in reports.values())
    nonzero = sorted({name for (name, _), n in residuals.items() if n})
    ok = produced and not nonzero
    record(9, ok, "Lie forms of x, y2, hqes, x-qes exact; h and y4 residuals reported",
           f"nonzero: {', '.join(nonzero) or 'none'}")
    assert ok


@pytest.mark.xfail(strict=True, reason="y_2k carries 4^k (t^k - u) dt^2k, not the witness term 4^k dt^2k")
def test_criterion_10_conjecture_witness():
    witness = {k: conjecture_witness(k) for k in range(1, 5)}
    symbol = all(cart.principal_symbol_check(k).ok for k in range(1, 5))
    ok = symbol and all(w.ok for w in witness.values())
    missing = sum(len(w.missing) for w in witness.values())
    record(10, ok, "witness 4^k[(J1)^k - T_k](J1)^k inside y_2k; principal symbol and parity",
           f"symbol/parity {'pass' if symbol else 'fail'}, {missing} witness monomials missing")
    assert ok


def test_criterion_11_dualities():
    ok = True
    for ell in (1, 2):
        for beta in (Fraction(1), Fraction(1, 3)):
            points = cart.sample_points(6, seed=ell, ks=[ell, 2 * ell])
            ok &= cart.duality_check(ell, beta, points).ok
    record(11, ok, "H_2l(w, 0, b) = H_l(w, b, b) and the shifted-angle duality, l = 1, 2, 6 points")
    assert ok


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    for test in tests:
        try:
            test()
        except AssertionError:
            pass
    print("\n".join(lines()))
    sys.exit(0)
