import json
import subprocess
import sys


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "nilpair", *args],
        capture_output=True,
        text=True,
    )
    return proc


def test_pair_biexponents_json():
    proc = run_cli("pair", "biexponents", "--diagram", "2,1", "--format", "json")
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"biexponents": [[0, 1], [1, 0]]}


def test_pair_classify():
    proc = run_cli("pair", "classify", "--diagram", "3,2/1", "--format", "json")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["class"] == "distinguished"


def test_parse_error_exit_code():
    proc = run_cli("pair", "build", "--diagram", "3,1,0")
    assert proc.returncode == 2
    assert "error" in proc.stderr


def test_usage_error_exit_code():
    proc = run_cli("verify", "structure")
    assert proc.returncode == 2


def test_resource_bound_exit_code():
    proc = run_cli("verify", "structure", "--all", "99")
    assert proc.returncode == 3


def test_verify_single_diagram():
    proc = run_cli("verify", "structure", "--diagram", "2,2", "--format", "json")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["ok"]


def test_verify_multiplicity_single():
    proc = run_cli(
        "verify",
        "multiplicity",
        "--diagram",
        "2,1",
        "--lambda",
        "2,1,0",
        "--format",
        "json",
    )
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["equal_at_dominant"]


def test_rect_sp_small():
    proc = run_cli("rect", "sp", "3", "--format", "json")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    accepted = [r for r in payload["rows"] if r.get("accepted")]
    assert payload["ok"]


def test_lefschetz_failure_exits_one():
    proc = run_cli("pair", "lefschetz", "--diagram", "3,2/1", "--format", "json")
    assert proc.returncode == 1
    payload = json.loads(proc.stdout)
    assert any(not r["ok"] for r in payload["rows"])


def test_out_file(tmp_path):
    out = tmp_path / "report.json"
    proc = run_cli(
        "pair", "build", "--diagram", "2,1", "--format", "json", "--out", str(out)
    )
    assert proc.returncode == 0
    payload = json.loads(out.read_text())
    assert payload["n"] == 3 and payload["provenance"] == "(0,0);(1,0);(0,1)"


def test_determinism_byte_identical():
    a = run_cli("verify", "structure", "--all", "3", "--format", "json")
    b = run_cli("verify", "structure", "--all", "3", "--format", "json")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_jobs_flag_matches_serial():
    a = run_cli("verify", "structure", "--all", "4", "--format", "json")
    b = run_cli("verify", "structure", "--all", "4", "--format", "json", "--jobs", "2")
    assert a.stdout == b.stdout
