"""Command-line front end.

Every command prints one report (json, csv or text) to stdout or to
``--out``.  Exit codes: 0 all checks pass, 1 some check fails, 2 bad usage,
3 budget exceeded.  Rational parameters are given as "p/q" strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import signal
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

from . import cartesian as cart
from .catalog import (
    InvalidParamsError,
    ModelParams,
    UnsupportedIntegralError,
    build_h,
    build_hqes,
    build_hqes_gauge,
    build_x,
    build_y,
    degeneracy,
    lie_form,
    lie_residual,
    spectrum,
    LIE_TARGETS,
)
from .flag import FlagSpec, preserves, qes_sector
from .weyl import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    ParamPoly,
    Poly2,
    emit_op,
    format_rational,
    op_commutator,
    parse_op,
    parse_rational,
)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

SUITES = ("commutator", "lie-residual", "flag", "cartesian", "duality", "principal-symbol", "qes-integrability")
OPERATORS = ("h", "x", "y", "hqes", "hqes-gauge")
DEFAULT_CARTESIAN = "a=2/3,b=5/4,w=3/2"


class UsageError(ValueError):
    pass


class TimeBudgetExceeded(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# parameters


_PARAM_NAMES = {"a": "a", "b": "b", "w": "omega", "omega": "omega", "l": "lam", "lam": "lam", "lambda": "lam"}


def parse_params(text):
    """``"symbolic"`` or ``"a=1/2,b=1/3,w=1"`` -> dict of Fractions.

    Parameters not listed stay formal."""
    if text is None or text.strip() in ("", "symbolic"):
        return {}
    out = {}
    for item in text.split(","):
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or name not in _PARAM_NAMES:
            raise UsageError(f"bad parameter assignment {item!r}; use a=p/q, b=..., w=..., l=...")
        if value.strip() == "symbolic":
            continue
        try:
            out[_PARAM_NAMES[name]] = parse_rational(value)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return out


def model(args, k=None, **extra):
    values = parse_params(getattr(args, "params", None))
    values.update(extra)
    k = args.k if k is None else k
    if k is None:
        raise UsageError("--k is required")
    try:
        return ModelParams(k, N=getattr(args, "N", 0) or 0, **values)
    except InvalidParamsError as exc:
        raise UsageError(str(exc)) from None


def params_record(p):
    out = {}
    for name, value in (("a", p.a), ("b", p.b), ("omega", p.omega), ("lambda", p.lam)):
        out[name] = "symbolic" if value is None else format_rational(value)
    if p.N:
        out["N"] = p.N
    return out


def _rational_arg(text):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# ---------------------------------------------------------------------------
# budgets


@contextmanager
def time_budget(seconds):
    if not seconds or not hasattr(signal, "setitimer"):
        yield
        return

    def expire(signum, frame):
        raise TimeBudgetExceeded(f"wall-time budget of {seconds} s exceeded")

    old = signal.signal(signal.SIGALRM, expire)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


class Runner:
    """Runs checks in config order and collects their records."""

    def __init__(self, args):
        self.args = args
        self.records = []

    def run(self, check, k, params, fn):
        start = time.perf_counter()
        with time_budget(self.args.timeout):
            status, residuals, extra = fn()
        record = {
            "check": check,
            "k": k,
            "params": params,
            "status": status,
            "residual_terms": residuals,
            "elapsed_ms": int((time.perf_counter() - start) * 1000) if self.args.timing else 0,
        }
        record.update(extra)
        self.records.append(record)
        return record

    def run_report(self, fn):
        """Wrap a function returning a cartesian CheckReport."""
        start = time.perf_counter()
        with time_budget(self.args.timeout):
            rep = fn()
        d = rep.to_dict()
        record = {
            "check": rep.check,
            "k": rep.k,
            "params": rep.params,
            "status": rep.verdict,
            "residual_terms": rep.residuals,
            "elapsed_ms": int((time.perf_counter() - start) * 1000) if self.args.timing else 0,
            "points": d["points"],
        }
        details = {key: v for key, v in d.items() if key not in ("check", "k", "params", "points", "residuals",
                                                                   "verdict", "elapsed_ms")}
        if details:
            record["details"] = details
        self.records.append(record)
        return record

    @property
    def ok(self):
        return all(r["status"] == "pass" for r in self.records)


def _op_status(op):
    lines = emit_op(op).splitlines()
    return ("pass" if not lines else "fail"), lines, {}


# ---------------------------------------------------------------------------
# verify suites


def _build(name, p):
    if name == "h":
        return build_h(p)
    if name == "x":
        return build_x(p)
    if name == "y":
        return build_y(p).op
    if name == "hqes":
        return build_hqes(p)
    if name == "hqes-gauge":
        return build_hqes_gauge(p)
    raise UsageError(f"unknown operator {name!r}; known: {', '.join(OPERATORS)}")


def suite_commutator(args, runner):
    pair = [s.strip() for s in args.pair.split(",")]
    if len(pair) != 2:
        raise UsageError("--pair takes two operator names, e.g. h,x")
    p = model(args)
    lhs, rhs = (_build(name, p) for name in pair)
    runner.run(f"commutator {pair[0]},{pair[1]}", p.k, params_record(p),
               lambda: _op_status(op_commutator(lhs, rhs, args.budget)))


def suite_lie(args, runner):
    if args.form is None:
        raise UsageError("--form is required for lie-residual")
    k = args.k if args.k is not None else {"y2": 1, "y4": 2}.get(args.form, 1)
    p = model(args, k=k)
    try:
        expr, target = lie_form(args.form, p)
    except InvalidParamsError as exc:
        raise UsageError(str(exc)) from None

    def check():
        status, lines, _ = _op_status(lie_residual(expr, target))
        return status, lines, {"target": LIE_TARGETS[args.form], "expression": expr.text()}

    runner.run(f"lie-residual {args.form}", k, params_record(p), check)


def suite_flag(args, runner):
    ks = [args.k] if args.k is not None else [1, 2, 3, 4]
    level = args.N or 6
    for k in ks:
        p = ModelParams(k)
        ops = {"h": (build_h(p), k - 1), "x": (build_x(p), k)}
        for s in range(1, k + 3):
            for name, (op, s_min) in ops.items():
                def check(op=op, s=s, s_min=s_min):
                    seen = preserves(op, FlagSpec(level, s))
                    claim = s >= s_min
                    return ("pass" if seen == claim else "fail"), ([] if seen == claim else [
                        f"preserves={seen}, expected {claim}"]), {"s": s, "N": level, "preserves": seen}
                runner.run(f"flag {name}", k, {"s": s, "N": level}, check)

        def capped(op=ops["h"][0], k=k):
            seen = preserves(op, FlagSpec(level, max(k - 1, 1), p_max=0))
            return ("pass" if seen else "fail"), ([] if seen else ["t-only polynomials escape"]), {"preserves": seen}
        runner.run("flag h capped", k, {"s": max(k - 1, 1), "N": level, "p_max": 0}, capped)


def _cartesian_params(args, k):
    text = args.params if args.params not in (None, "symbolic") else DEFAULT_CARTESIAN
    values = parse_params(text)
    missing = [n for n in ("a", "b", "omega") if n not in values]
    if missing:
        raise UsageError(f"Cartesian checks need rational {', '.join(missing)}")
    values.pop("lam", None)
    return ModelParams(k, **values)


def suite_cartesian(args, runner):
    ks = [args.k] if args.k is not None else [1, 2, 3, 4]
    for k in ks:
        if k > 4:
            raise UsageError(build_y_message(k))
        p = _cartesian_params(args, k)
        y = cart.y_operator(p)
        alpha, beta = p.a * (p.a - 1), p.b * (p.b - 1)
        h = cart.cart_h(k, alpha, beta, p.omega)
        points = cart.sample_points(args.points, seed=args.seed, ops=[y], ks=[k])
        c = cart.commutator(h, y)
        prm = cart._params_text(a=p.a, b=p.b, omega=p.omega)
        runner.run_report(lambda: cart.certify_zero(c, c.order, points, check="commutator H,Y", k=k, params=prm))
        runner.run_report(lambda: cart.ground_state_check(p, points[:3], "h"))
        runner.run_report(lambda: cart.ground_state_check(p, points[:3], "y"))


def build_y_message(k):
    try:
        build_y(ModelParams(k))
    except UnsupportedIntegralError as exc:
        return str(exc)
    return ""


def suite_duality(args, runner):
    ells = [args.ell] if args.ell is not None else [1, 2]
    beta = args.beta if args.beta is not None else Fraction(1, 3)
    for ell in ells:
        ops = [cart.cart_h(2 * ell, beta, beta, 1), cart.cart_h(ell, beta, beta, 1)]
        points = cart.sample_points(args.points, seed=args.seed, ops=ops, ks=[ell, 2 * ell, 4 * ell])
        runner.run_report(lambda: cart.duality_check(ell, beta, points))


def suite_symbol(args, runner):
    ks = [args.k] if args.k is not None else [1, 2, 3, 4]
    for k in ks:
        if k > 4:
            raise UsageError(build_y_message(k))
        runner.run_report(lambda: cart.principal_symbol_check(k))


def suite_qes(args, runner):
    ks = [args.k] if args.k is not None else [1, 2, 3, 4]
    for k in ks:
        p = model(args, k=k)
        hq, x = build_hqes(p), build_x(p.with_(lam=None, N=0))
        runner.run("qes-integrability", k, params_record(p), lambda: _op_status(op_commutator(hq, x, args.budget)))


SUITE_RUNNERS = {
    "commutator": suite_commutator,
    "lie-residual": suite_lie,
    "flag": suite_flag,
    "cartesian": suite_cartesian,
    "duality": suite_duality,
    "principal-symbol": suite_symbol,
    "qes-integrability": suite_qes,
}


# ---------------------------------------------------------------------------
# commands


def cmd_verify(args):
    runner = Runner(args)
    SUITE_RUNNERS[args.suite](args, runner)
    return runner


def cmd_crosscheck(args):
    runner = Runner(args)
    ks = [args.k] if args.k is not None else [1, 2, 3, 4]
    polys = [Poly2({(0, 0): 1}), Poly2({(1, 0): 1}), Poly2({(0, 1): 1}), Poly2({(1, 1): 1, (2, 0): -1})]
    which = ["h", "x", "y"] if args.which == "all" else [args.which]
    for k in ks:
        if "y" in which and k > 4:
            raise UsageError(build_y_message(k))
        p = _cartesian_params(args, k)
        ops = [cart.y_operator(p)] if k <= 4 else []
        points = cart.sample_points(args.points, seed=args.seed, ops=ops, ks=[k])
        for w in which:
            runner.run_report(lambda: cart.crosscheck_algebraic(p, polys, points, w))
    return runner


def cmd_spectrum(args):
    p = model(args)
    rows = []
    for rec in spectrum(p, args.d_max):
        e = rec.energy
        rows.append({"N": rec.N, "n": rec.n, "d": rec.grade,
                     "E": e.to_text() if isinstance(e, ParamPoly) else format_rational(e),
                     "degeneracy": rec.degeneracy})
    return rows, ["N", "n", "d", "E", "degeneracy"]


def cmd_degeneracy(args):
    if args.k is None:
        raise UsageError("--k is required")
    if args.k < 1:
        raise UsageError("k must be a positive integer")
    rows = []
    for d in range(args.d_max + 1):
        states = [(d - args.k * n, n) for n in range(d // args.k + 1)]
        rows.append({"d": d, "degeneracy": degeneracy(args.k, d),
                     "states": ";".join(f"{N}:{n}" for N, n in states)})
    return rows, ["d", "degeneracy", "states"]


def cmd_qes(args):
    p = model(args)
    try:
        sector = qes_sector(p, variant=args.variant)
    except InvalidParamsError as exc:
        raise UsageError(str(exc)) from None
    return sector


def cmd_ops(args):
    if args.parse:
        with open(args.parse, encoding="utf-8") as fh:
            text = fh.read()
        try:
            return emit_op(parse_op(text))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.manifest:
        return manifest()
    if not args.emit:
        raise UsageError("ops needs --emit NAME, --parse FILE or --manifest")
    p = model(args)
    try:
        return emit_op(_build(args.emit, p))
    except UnsupportedIntegralError as exc:
        raise UsageError(str(exc)) from None


def manifest():
    rows = []
    for k in (1, 2, 3, 4):
        y = build_y(ModelParams(k))
        c = y.constant
        rows.append({"name": y.name, "k": k, "scale": y.scale, "anchor": y.anchor,
                     "constant": c.to_text() if isinstance(c, ParamPoly) else format_rational(c)})
    return json.dumps(rows, indent=2) + "\n"


# ---------------------------------------------------------------------------
# output


def _csv(rows, header):
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=header, lineterminator="\r\n", extrasaction="ignore")
    w.writeheader()
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


def _params_cell(params):
    return ";".join(f"{k}={v}" for k, v in params.items())


def render_checks(records, fmt, command):
    status = "pass" if all(r["status"] == "pass" for r in records) else "fail"
    if fmt == "json":
        return json.dumps({"command": command, "status": status, "checks": records}, indent=2) + "\n"
    if fmt == "csv":
        rows = [dict(r, params=_params_cell(r["params"]), residual_terms=len(r["residual_terms"]))
                for r in records]
        return _csv(rows, ["check", "k", "params", "status", "residual_terms", "elapsed_ms"])
    lines = []
    for r in records:
        lines.append(f"{r['status'].upper()} {r['check']} k={r['k']} {_params_cell(r['params'])} "
                     f"residual_terms={len(r['residual_terms'])}")
        for item in r["residual_terms"][:20]:
            lines.append(f"    {item}")
    lines.append(f"overall: {status}")
    return "\n".join(lines) + "\n"


def render_table(rows, header, fmt):
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        return _csv(rows, header)
    widths = [max(len(h), *(len(str(r[h])) for r in rows)) for h in header]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    for r in rows:
        lines.append("  ".join(str(r[h]).rjust(w) for h, w in zip(header, widths)))
    return "\n".join(lines) + "\n"


def render_qes(sector, fmt):
    if fmt == "json":
        return sector.to_json() + "\n"
    if fmt == "csv":
        rows = [{"index": i, "lower": format_rational(lo), "upper": format_rational(hi)}
                for i, (lo, hi) in enumerate(sector.roots)]
        return _csv(rows, ["index", "lower", "upper"])
    rep = sector.report()
    lines = [f"QES sector k={rep['k']} N={rep['N']} dim={rep['dim']} variant={rep['variant']}",
             "charpoly (constant term first): " + ", ".join(rep["charpoly"])]
    for lo, hi in sector.roots:
        lines.append(f"  root in [{format_rational(lo)}, {format_rational(hi)}]  ~ {float((lo + hi) / 2):.12g}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# argument parsing


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for sample points")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS, help="term cap for products")
    common.add_argument("--timeout", type=float, default=argparse.SUPPRESS, help="wall-time cap per check (s)")
    common.add_argument("--out", default=argparse.SUPPRESS, help="write the report to this file")
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                        help="record wall times (reports are then not byte-reproducible)")

    parser = argparse.ArgumentParser(prog="ttwlab", parents=[common],
                                     description="Exact checks for the TTW family of planar Hamiltonians.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text)

    v = add("verify", "run a named verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--k", type=int)
    v.add_argument("--pair", default="h,x")
    v.add_argument("--params", default="symbolic")
    v.add_argument("--form", choices=sorted(LIE_TARGETS), help="Lie form to expand")
    v.add_argument("--N", type=int, default=0)
    v.add_argument("--ell", type=int)
    v.add_argument("--beta", type=_rational_arg)
    v.add_argument("--points", type=int, default=12)

    s = add("spectrum", "energy table E(N, n) with degeneracies")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--params", default="symbolic")
    s.add_argument("--d-max", type=int, default=4)

    d = add("degeneracy", "number of states per grade d = N + k n")
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--d-max", type=int, default=6)

    q = add("qes", "exact QES sector: characteristic polynomial and isolated roots")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--N", type=int, default=1)
    q.add_argument("--params", required=True)
    q.add_argument("--variant", choices=("printed", "gauge"), default="printed")

    o = add("ops", "emit or parse operators in the text format")
    o.add_argument("--emit", choices=OPERATORS)
    o.add_argument("--parse")
    o.add_argument("--manifest", action="store_true")
    o.add_argument("--k", type=int)
    o.add_argument("--N", type=int, default=0)
    o.add_argument("--params", default="symbolic")

    c = add("crosscheck", "algebraic against Cartesian operators at sample points")
    c.add_argument("--k", type=int)
    c.add_argument("--params", default=DEFAULT_CARTESIAN)
    c.add_argument("--which", choices=("h", "x", "y", "all"), default="y")
    c.add_argument("--points", type=int, default=5)

    u = add("duality", "coupling dualities between H_2l and H_l")
    u.add_argument("--ell", type=int)
    u.add_argument("--beta", type=_rational_arg)
    u.add_argument("--points", type=int, default=6)
    return parser


_DEFAULTS = {"format": "json", "seed": 1, "budget": DEFAULT_BUDGET, "timeout": None, "out": None, "timing": False}


def parse_args(argv):
    args = build_parser().parse_args(argv)
    for key, value in _DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    return args


def _write(text, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _error(args, status, message):
    print(f"ttwlab: {message}", file=sys.stderr)
    if args is not None and args.format == "json":
        _write(json.dumps({"command": args.command, "status": status, "error": message}, indent=2) + "\n",
               args.out)


def main(argv=None):
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command in ("verify", "crosscheck", "duality"):
            if args.command == "duality":
                args.suite = "duality"
                runner = cmd_verify(args)
            elif args.command == "verify":
                runner = cmd_verify(args)
            else:
                runner = cmd_crosscheck(args)
            _write(render_checks(runner.records, args.format, args.command), args.out)
            return EXIT_PASS if runner.ok else EXIT_FAIL
        if args.command == "spectrum":
            rows, header = cmd_spectrum(args)
            _write(render_table(rows, header, args.format), args.out)
        elif args.command == "degeneracy":
            rows, header = cmd_degeneracy(args)
            _write(render_table(rows, header, args.format), args.out)
        elif args.command == "qes":
            _write(render_qes(cmd_qes(args), args.format), args.out)
        elif args.command == "ops":
            _write(cmd_ops(args), args.out)
        return EXIT_PASS
    except (BudgetExceededError, TimeBudgetExceeded) as exc:
        _error(args, "budget", str(exc))
        return EXIT_BUDGET
    except (UsageError, InvalidParamsError, UnsupportedIntegralError, OSError) as exc:
        _error(args, "usage", str(exc))
        return EXIT_USAGE
