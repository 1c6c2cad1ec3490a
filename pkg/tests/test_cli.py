import json
import subprocess
import sys

from stratabench.cli import dispatch

RUN = [sys.executable, "-m", "stratabench"]


def run_cli(*args):
    return subprocess.run(RUN + list(args), capture_output=True, text=True)


def test_exit_codes():
    assert run_cli("catalog").returncode == 0
    assert run_cli("nonsense").returncode == 2
    assert run_cli("s2e", "verify", "--a", "1", "--b", "1",
                   "--alpha", "0", "--beta", "0").returncode == 2
    assert run_cli("implicitize", "--a", "1", "--b", "2").returncode == 2
    assert run_cli("implicitize", "--a", "x", "--b", "2").returncode == 2


def test_reports_byte_identical():
    for args in (("catalog",), ("fibration",), ("implicitize", "--a", "2", "--b", "3"),
                 ("glue", "--config", "four-lines")):
        a = run_cli(*args)
        b = run_cli(*args)
        assert a.returncode == 0
        assert a.stdout == b.stdout


def test_report_structure():
    out = run_cli("implicitize", "--a", "2", "--b", "3")
    body = out.stdout.split("\n", 1)[1]
    doc = json.loads(body)
    assert doc["verdict"] == "pass"
    assert doc["subcommand"] == "implicitize"
    assert "meta" in doc and "evidence" in doc
    terms = doc["evidence"]["quartic"]["terms"]
    assert len(terms) == 6
    assert {t["c"] for t in terms} == {"21", "40", "-25", "-4", "5", "6"}


def test_glue_enumerate_four_lines():
    out = run_cli("glue", "--config", "four-lines")
    doc = json.loads(out.stdout.split("\n", 1)[1])
    assert doc["evidence"]["orbit_count"] == 3


def test_selftests_all_pass():
    for sub in ("hilbert", "canring", "bidouble", "fibration", "glue",
                "implicitize", "s2e", "catalog"):
        out = run_cli(sub, "--selftest")
        assert out.returncode == 0, (sub, out.stdout, out.stderr)


def test_malformed_json_diagnostics(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"a1": \n  oops}', encoding="utf-8")
    out = run_cli("canring", "--model", str(bad))
    assert out.returncode == 2
    assert "line" in out.stderr and "column" in out.stderr


def test_output_file(tmp_path):
    target = tmp_path / "report.json"
    out = run_cli("--output", str(target), "hilbert", "--upto", "6",
                  "--rr", "1,2,1")
    assert out.returncode == 0
    doc = json.loads(target.read_text(encoding="utf-8"))
    assert doc["evidence"]["series"] == [1, 1, 3, 5, 8, 12, 17]
    assert doc["evidence"]["rr_agrees"]


def test_dispatch_in_process():
    # the dispatch function itself is usable as a library entry point
    assert dispatch(["catalog"]) == 0
    assert dispatch(["s2e", "verify", "--a", "1", "--b", "1",
                     "--alpha", "1", "--beta", "1"]) == 0


def test_bidouble_classify_cli():
    out = run_cli("bidouble", "--example", "Z1", "--classify", "0:0:1")
    assert out.returncode == 0
    doc = json.loads(out.stdout.split("\n", 1)[1])
    assert doc["evidence"]["classification"][0]["tag"] == "elliptic-degree-1"


def test_step_budget_env(tmp_path, monkeypatch):
    import os
    env = dict(os.environ)
    env["STRATABENCH_STEP_BUDGET"] = "2"
    out = subprocess.run(RUN + ["implicitize", "--a", "2", "--b", "3"],
                         capture_output=True, text=True, env=env)
    assert out.returncode == 1
    assert "budget" in out.stderr.lower()
