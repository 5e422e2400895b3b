import csv
import io
import json
import subprocess
import sys

import pytest

from ttwlab.catalog import ModelParams, build_h, build_y
from ttwlab.cli import main
from ttwlab.weyl import parse_op


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_commutator_passes(capsys):
    code, out, _ = run(capsys, "verify", "commutator", "--k", "2", "--pair", "h,x", "--params", "symbolic")
    assert code == 0
    report = json.loads(out)
    assert report["command"] == "verify" and report["status"] == "pass"
    check = report["checks"][0]
    assert {"check", "k", "params", "status", "residual_terms", "elapsed_ms"} <= set(check)
    assert check["residual_terms"] == [] and check["elapsed_ms"] == 0


def test_verify_commutator_h_y_rational(capsys):
    code, out, _ = run(capsys, "verify", "commutator", "--k", "3", "--pair", "h,y", "--params", "a=1/2,b=2/3,w=3")
    assert code == 0 and json.loads(out)["status"] == "pass"


@pytest.mark.parametrize("argv", [
    ["verify", "commutator", "--k", "0"],
    ["verify", "commutator", "--k", "2", "--pair", "h,z"],
    ["spectrum", "--k", "3", "--params", "a=0.5"],
    ["ops", "--emit", "y", "--k", "5"],
    ["verify", "nonsense"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2


def test_error_report_is_json(capsys):
    code, out, err = run(capsys, "ops", "--emit", "y", "--k", "5")
    assert code == 2
    report = json.loads(out)
    assert report["status"] == "usage" and "conjectured" in report["error"]
    assert "conjectured" in err


def test_budget_exit_3(capsys):
    code, out, _ = run(capsys, "verify", "commutator", "--k", "4", "--pair", "h,y", "--budget", "10")
    assert code == 3
    assert json.loads(out)["status"] == "budget"


def test_lie_residual_reports_operator(capsys):
    code, out, _ = run(capsys, "verify", "lie-residual", "--form", "h", "--k", "2")
    assert code == 1
    check = json.loads(out)["checks"][0]
    assert check["status"] == "fail"
    assert sorted(check["residual_terms"]) == sorted(["{8} dt", "{-16} t du"])
    code, out, _ = run(capsys, "verify", "lie-residual", "--form", "x", "--k", "3")
    assert code == 0


def test_spectrum_csv(capsys):
    code, out, _ = run(capsys, "spectrum", "--k", "3", "--params", "a=1/2,b=1/2,w=1", "--d-max", "2", "--format", "csv")
    assert code == 0
    assert out.startswith("N,n,d,E,degeneracy\r\n")
    rows = list(csv.reader(io.StringIO(out)))
    assert ["0", "0", "0", "8", "1"] in rows
    code, out, _ = run(capsys, "spectrum", "--k", "2", "--params", "a=1,b=1,w=1", "--d-max", "0", "--format", "csv")
    assert len(list(csv.reader(io.StringIO(out)))) == 2


def test_degeneracy_column(capsys):
    code, out, _ = run(capsys, "degeneracy", "--k", "1", "--d-max", "5", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))[1:]
    assert [int(r[1]) for r in rows] == [d + 1 for d in range(6)]


def test_ops_emit_h(capsys):
    code, out, _ = run(capsys, "ops", "--emit", "h", "--k", "2")
    assert code == 0
    assert len(out.strip().splitlines()) == 7
    assert parse_op(out) == build_h(ModelParams(2))


def test_ops_round_trip_through_file(capsys, tmp_path):
    path = tmp_path / "y6.op"
    code, _, _ = run(capsys, "ops", "--emit", "y", "--k", "3", "--out", str(path))
    assert code == 0
    assert parse_op(path.read_text()) == build_y(ModelParams(3)).printed
    code, out, _ = run(capsys, "ops", "--parse", str(path))
    assert code == 0


def test_ops_manifest(capsys):
    code, out, _ = run(capsys, "ops", "--manifest", "--format", "json")
    names = [row["name"] for row in json.loads(out)]
    assert {"y2", "y4", "y6", "y8"} <= set(names)


def test_qes_report(capsys):
    code, out, _ = run(capsys, "qes", "--k", "1", "--N", "1", "--params", "a=1/2,b=1/3,w=1,l=1/2", "--variant", "gauge")
    assert code == 0
    assert "charpoly" in out


def test_cartesian_and_duality(capsys):
    code, out, _ = run(capsys, "verify", "cartesian", "--k", "2", "--points", "2")
    assert code == 0
    code, out, _ = run(capsys, "duality", "--ell", "1", "--beta", "1/3")
    assert code == 0 and json.loads(out)["status"] == "pass"


def test_reports_are_deterministic(capsys):
    argv = ["crosscheck", "--k", "2", "--which", "y", "--points", "3", "--seed", "4"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second and first[0] == 0


def test_text_format(capsys):
    code, out, _ = run(capsys, "verify", "flag", "--k", "2", "--format", "text")
    assert code == 0
    assert out.rstrip().endswith("overall: pass")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ttwlab", "verify", "commutator", "--k", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "pass"
