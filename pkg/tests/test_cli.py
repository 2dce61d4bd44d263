"""Command-line contract: outputs, JSON round trips and exit codes."""

import json
import subprocess
import sys

import pytest

from cyclicquad.cli import main
from cyclicquad.geometry import ClassificationReport


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_square_is_cyclic(capsys):
    code, out, _ = run(capsys, "check", "--sides", "1", "1", "1", "1", "--diagonals", "1.41421356", "1.41421356")
    assert code == 0
    assert "cyclic: True" in out


def test_infeasible_prints_report_and_exits_one(capsys):
    code, out, _ = run(capsys, "check", "--sides", "1", "1", "1", "1", "--diagonals", "3", "0.1")
    assert code == 1
    assert "feasible: False" in out and "warning" in out


@pytest.mark.parametrize("argv", [
    ["check", "--sides", "1", "-1", "1", "1", "--diagonals", "1", "1"],
    ["check", "--sides", "1", "a", "1", "1", "--diagonals", "1", "1"],
    ["check", "--sides", "1", "1", "1", "1"],
    ["params", "1", "1", "1", "1", "1"],
    ["params", "0", "1", "1", "1", "0"],
    ["verify", "--suite", "bogus"],
    ["scan", "--what", "everything"],
    ["scan", "--what", "theorems", "--samples", "0"],
    ["frobnicate"],
])
def test_usage_errors_exit_two(capsys, argv):
    assert main(argv) == 2


def test_check_json_round_trip(capsys):
    code, out, _ = run(capsys, "check", "--sides", "1", "1.2", "0.9", "1.1", "--diagonals", "1.4", "1.5", "--json")
    data = json.loads(out)
    rep = ClassificationReport(**data["report"])
    assert rep.to_dict() == data["report"]
    assert json.loads(json.dumps(data)) == data


def test_params_cyclic_and_pipeline_consistency(capsys):
    code, out, _ = run(capsys, "params", "2", "1", "6", "3", "0.5", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["report"]["cyclic"] is True
    L = data["lengths"]
    code, out2, _ = run(capsys, "check", "--sides", *(repr(L[k]) for k in "abcd"),
                        "--diagonals", repr(L["p"]), repr(L["q"]), "--json")
    again = json.loads(out2)
    for key in ("feasible", "convex", "cyclic", "d_position"):
        assert again["report"][key] == data["report"][key]


def test_params_square(capsys):
    code, out, _ = run(capsys, "params", "1", "1", "1", "1", "0")
    assert code == 0 and "cyclic: True" in out and "p=2" in out


def test_counterexample_human(capsys):
    code, out, _ = run(capsys, "counterexample")
    assert code == 0
    assert "x = 0.227083346211" in out
    assert "convex = False" in out
    assert len([ln for ln in out.splitlines() if ln.startswith("  ")]) == 10


def test_printed_counterexample_lengths(capsys):
    code, out, _ = run(capsys, "check", "--sides", "1.025459", "1.025459", "0.403334", "0.403334",
                       "--diagonals", "0.454167", "0.666667", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["c3_zero"] and not data["report"]["convex"] and not data["report"]["cyclic"]
    assert any("not convex" in w for w in data["warnings"])


def test_counterexample_piped_into_check():
    produced = subprocess.run([sys.executable, "-m", "cyclicquad.cli", "counterexample", "--json"],
                              capture_output=True, text=True, check=True)
    checked = subprocess.run([sys.executable, "-m", "cyclicquad.cli", "check", "--from-json", "-", "--json"],
                             input=produced.stdout, capture_output=True, text=True)
    assert checked.returncode == 0
    data = json.loads(checked.stdout)
    assert data["c3_zero"] is True
    assert data["report"]["convex"] is False and data["report"]["cyclic"] is False


def test_from_json_rejects_incomplete(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text(json.dumps({"lengths": {"a": 1}}))
    assert main(["check", "--from-json", str(f)]) == 2


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "appendix")
    assert code == 0 and "I-APP" in out
    code, out, _ = run(capsys, "verify", "--suite", "core", "--json", "--no-timing")
    assert code == 0
    ids = {r["id"] for r in json.loads(out)["records"]}
    assert {"I-PTOLEMY-RAT", "I-RR-FACT"} <= ids


def test_scan_json_is_seeded_and_deterministic(capsys, tmp_path):
    argv = ["scan", "--what", "theorems", "--seed", "9", "--samples", "3000", "--json"]
    code, first, _ = run(capsys, *argv)
    code2, second, _ = run(capsys, *argv)
    assert code == code2 == 0
    assert first == second
    assert json.loads(first)["config"]["seed"] == 9
    csv_path = tmp_path / "w.csv"
    run(capsys, "scan", "--what", "roots", "--samples", "50", "--csv", str(csv_path))
    assert csv_path.read_text() == ""


def test_scan_human_echoes_seed(capsys):
    code, out, _ = run(capsys, "scan", "--what", "sys51", "--grid", "5")
    assert code == 0
    assert "seed=42" in out and "residual floor" in out
