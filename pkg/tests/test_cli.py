import json
import subprocess
import sys
from pathlib import Path

import pytest

from redwords.cli import run


@pytest.fixture()
def cli(capsys):
    def invoke(*argv):
        code = run(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke


def test_words(cli):
    code, out, err = cli("words", "[25314]")
    assert code == 0
    assert out.splitlines() == ["12432", "14232", "14323", "41232", "41323", "43123"]


def test_words_json_round_trip(cli):
    code, out, _ = cli("words", "[25314]", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["count"] == 6
    assert obj["words"][0] == "12432"
    assert obj["window"] == [2, 5, 3, 1, 4]


def test_classes(cli):
    code, out, _ = cli("classes", "--kind", "braid", "[25314]")
    assert code == 0
    assert out.splitlines() == [
        "B1: 12432",
        "B2: 14232 14323",
        "B3: 41232 41323",
        "B4: 43123",
    ]
    code, out, _ = cli("classes", "[25314]")
    assert out.splitlines() == [
        "C1: 12432 14232 41232",
        "C2: 14323 41323 43123",
    ]


def test_table(cli):
    code, out, _ = cli("table", "[25314]")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["C1", "C2"]
    assert lines[1].split() == ["B1", "12432", "-"]
    assert lines[4].split() == ["B4", "-", "43123"]
    code, out, _ = cli("table", "[25314]", "--format", "csv")
    assert out.splitlines()[1] == "B1,12432,"
    code, out, _ = cli("table", "[25314]", "--format", "json")
    obj = json.loads(out)
    assert obj["cells"][0] == ["12432", None]
    assert obj["jump_property"] is True


def test_graph_dot(cli):
    code, out, _ = cli("graph", "--which", "gamma", "[25314]", "--format", "dot")
    assert code == 0
    assert out.startswith("graph {")
    assert '"B1" -- "C1"' in out
    code, out, _ = cli("graph", "[25314]")
    assert out.count("style=dashed") == 2
    code, out, _ = cli("graph", "--which", "gc", "[25314]", "--format", "json")
    obj = json.loads(out)
    assert obj["vertices"] == ["C1", "C2"]


def test_check(cli):
    code, out, _ = cli("check", "[4132]")
    assert code == 0
    fields = dict(line.split(": ", 1) for line in out.splitlines())
    assert fields["achieves_lower"] == "True"
    assert fields["width"] == "2"
    assert fields["conjecture"] == "agree"
    code, out, _ = cli("check", "[25314]", "--format", "json")
    obj = json.loads(out)
    assert (obj["r"], obj["b"], obj["c"]) == (6, 4, 2)
    assert obj["violations"] == []


def test_interval(cli):
    code, out, _ = cli("interval", "[3421]")
    assert code == 0
    fields = dict(line.split(": ", 1) for line in out.splitlines())
    assert fields["rank_sizes"] == "1 2 3 3 2 1"
    assert fields["width"] == "3"
    assert fields["support_size"] == "3"
    code, out, _ = cli("interval", "[3421]", "--format", "json")
    obj = json.loads(out)
    assert obj["ranks"][0] == ["[1234]"]
    assert obj["ranks"][-1] == ["[3421]"]


def test_counts(cli):
    code, out, _ = cli("counts", "--n", "5")
    assert code == 0
    assert out.splitlines() == [
        "catalan(5) = 42",
        "upper(5) = 45",
        "lower(5) = 65",
    ]
    code, out, _ = cli("counts", "--n", "7", "--format", "json")
    obj = json.loads(out)
    assert (obj["catalan"], obj["upper"], obj["lower"]) == (429, 434, 506)
    code, out, _ = cli("counts", "--n", "7", "--format", "csv")
    assert out.splitlines() == ["n,catalan,upper,lower", "7,429,434,506"]


def test_scan_stdout_jsonl(cli):
    code, out, _ = cli("scan", "--n", "3")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 7  # 6 records + 1 report
    report = json.loads(lines[-1])
    assert report["type"] == "report"
    assert report["upper_achiever_count"] == 6


def test_scan_text_summary(cli):
    code, out, _ = cli("scan", "--n", "4", "--format", "text")
    assert code == 0
    assert "upper achievers: 16 (closed form 16)" in out
    assert "lower achievers: 23 (closed form 23)" in out
    assert "closed_form_match: True" in out


def test_scan_to_file_deterministic_across_workers(cli, tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    code, _, _ = cli("scan", "--n", "4", "--workers", "1", "--output", str(a))
    assert code == 0
    code, _, _ = cli("scan", "--n", "4", "--workers", "2", "--output", str(b))
    assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_conjecture(cli):
    code, out, _ = cli("conjecture", "--n", "4")
    assert code == 0
    assert "24 of 24 agree" in out
    assert "counterexamples: none" in out
    code, out, _ = cli("conjecture", "--n", "4", "--format", "json")
    obj = json.loads(out)
    assert obj["agreements"] == 24
    assert obj["counterexamples"] == []


def test_usage_errors(cli):
    code, _, err = cli("words", "[2231]")
    assert code == 1
    assert "redwords" in err
    code, _, err = cli("nonsense")
    assert code == 1
    code, _, err = cli("words", "[25314]", "--format", "yaml")
    assert code == 1
    code, _, err = cli("scan", "--n", "3", "--checks", "nope")
    assert code == 1
    code, _, err = cli("counts", "--n", "99")
    assert code == 1


def test_strict_cap_exit_code(cli):
    code, _, err = cli("words", "[54321]", "--cap", "5", "--strict")
    assert code == 3
    code, _, err = cli("words", "[54321]", "--cap", "5")
    assert code == 0
    assert "skipped" in err
    code, _, err = cli("check", "[54321]", "--cap", "5", "--strict")
    assert code == 3
    code, _, err = cli("scan", "--n", "4", "--cap", "5", "--strict", "--format", "text")
    assert code == 3


def test_help_exits_zero(cli):
    code, out, _ = cli("--help")
    assert code == 0


def test_theorem_violation_exit_code(cli, monkeypatch):
    import importlib

    scan_module = importlib.import_module("redwords.scan")
    real = scan_module.verify_permutation

    def broken(w, **kwargs):
        rec = real(w, **kwargs)
        return scan_module.ScanRecord(
            **{**rec.__dict__, "violations": ("synthetic violation",)}
        )

    monkeypatch.setattr(scan_module, "verify_permutation", broken)
    code, _, err = cli("check", "[213]")
    assert code == 2
    assert "theorem check failed" in err


def test_module_entry_point(tmp_path):
    repo_src = Path(__file__).resolve().parents[1] / "src"
    proc = subprocess.run(
        [sys.executable, "-m", "redwords", "counts", "--n", "4"],
        capture_output=True,
        text=True,
        env={"PYTHONPATH": str(repo_src), "PATH": "/usr/bin:/bin"},
    )
    assert proc.returncode == 0
    assert "upper(4) = 16" in proc.stdout
