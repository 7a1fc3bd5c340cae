"""CLI surface: exit codes, JSON schema and determinism, golden tables."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from vermabranch.cli import main
from vermabranch.tables import GOLDEN_TABLES

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "goldens"


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "vermabranch.cli", *args],
                          capture_output=True, text=True)


@pytest.mark.parametrize("name", sorted(GOLDEN_TABLES))
def test_golden_tables_byte_identical(name):
    expected = (GOLDEN_DIR / name).read_text()
    assert GOLDEN_TABLES[name]() == expected


def test_corrupted_golden_detected():
    # exit-status/diff contract spot check: a perturbed golden must not match
    name = "f_vectors.txt"
    corrupted = (GOLDEN_DIR / name).read_text().replace("2*l", "3*l")
    assert GOLDEN_TABLES[name]() != corrupted


def test_verify_so_passes(tmp_path):
    out = tmp_path / "report.json"
    rc = main(["verify-so", "--n", "3", "--max-degree", "2",
               "--json", str(out)])
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc["meta"]["version"] == 1
    assert doc["meta"]["config"]["scenario"] == "so_pair"
    assert doc["meta"]["seed"] == 0
    statuses = {r["status"] for r in doc["records"]}
    assert "fail" not in statuses
    assert "discrepancy-reported" in statuses
    ids = [r["check-id"] for r in doc["records"]]
    assert ids == sorted(ids)


def test_json_determinism(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["verify-diag", "--max-degree", "3", "--seed", "11"]
    assert main(args + ["--json", str(a)]) == 0
    assert main(args + ["--json", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_branch_report_with_rational_weights(tmp_path):
    out = tmp_path / "r.json"
    rc = main(["branch-report", "--N", "3", "--cutoff", "8",
               "--lambda", "1/2", "--mu", "5/2", "--json", str(out)])
    assert rc == 0
    doc = json.loads(out.read_text())
    sets = doc["data"]["branch.sets.N=3"]
    assert sets["Lambda_r definitional"] != sets["Lambda_r displayed"]


def test_branch_report_weight_mismatch():
    rc = main(["branch-report", "--N", "4", "--lambda", "1/2", "--mu", "5/2"])
    assert rc == 2


def test_verify_diag_integral_weight_rejected():
    rc = main(["verify-diag", "--max-degree", "1", "--lambda", "0",
               "--mu", "0"])
    assert rc == 2


def test_usage_error_exit_code():
    proc = run_cli("verify-so", "--max-degree", "not-a-number")
    assert proc.returncode == 2
    proc = run_cli("no-such-command")
    assert proc.returncode == 2


def test_ortho_tables_output(capsys):
    rc = main(["ortho-tables", "--max-degree", "2"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "C_2 = (2*a^2 + 2*a)*x^2 - a" in out
    assert out.count("P_") == 3


def test_text_output_summary(capsys):
    rc = main(["branch-report", "--N", "2", "--cutoff", "4"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "0 failed" in out


def test_console_entrypoint():
    proc = subprocess.run(["vermabranch", "--help"], capture_output=True,
                          text=True)
    assert proc.returncode == 0
    for sub in ("verify-so", "verify-diag", "branch-report", "ortho-tables"):
        assert sub in proc.stdout
