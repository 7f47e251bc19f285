import json
import shlex
import subprocess
import sys
from pathlib import Path

import pytest

from hodgejac import report
from hodgejac.cli import EXIT_CONFIG, EXIT_DEGENERATE, EXIT_PRECONDITION, OUTPUT_DIR_ENV, run

ROOT = Path(__file__).resolve().parents[1]


def invoke(tmp_path, argv, name="out.json"):
    out = tmp_path / name
    code = run(argv + ["-o", str(out)])
    return code, (report.load(out) if out.exists() else None)


def test_bott_example(tmp_path, capsys):
    code, rep = invoke(tmp_path, ["bott", "--type", "A3", "--weight", "1,0,1"])
    assert code == 0
    assert rep["command"] == "bott"
    assert rep["result"]["entries"][0]["dimension"] == 15
    assert "dim 15" in capsys.readouterr().out


def test_bott_on_a_partial_flag(tmp_path):
    code, rep = invoke(tmp_path, ["bott", "--type", "A2", "--weight", "1,0", "--parabolic", "2"])
    assert code == 0


def test_check_vanishing_on_the_plane(tmp_path):
    code, rep = invoke(tmp_path, ["check-vanishing", "--model", "P2", "--degree", "3",
                                  "--condition", "C1", "--k", "1..3"])
    assert code == 0
    assert [v["status"] for v in rep["result"]["verdicts"]] == ["Vanishes"] * 3


def test_jacobian_and_cayley(tmp_path):
    code, rep = invoke(tmp_path, ["jacobian", "--model", "P3", "--degree", "4",
                                  "--poly", str(ROOT / "samples" / "fermat_quartic.poly")])
    assert code == 0 and rep["result"]["dims"] == [1, 19, 1]
    code, rep = invoke(tmp_path, ["cayley", "--n", "3", "--degrees", "2,2", "--seed", "1"])
    assert code == 0 and rep["result"]["dims"] == [1, 1]


def test_rank_check_and_surjectivity(tmp_path):
    code, rep = invoke(tmp_path, ["rank-check", "--model", "P2", "--degree", "3", "--seed", "0"])
    assert code == 0 and rep["result"]["agree"] is True
    code, rep = invoke(tmp_path, ["mult-surjectivity", "--model", "P3", "--degree", "4",
                                  "--k", "0..2"])
    assert code == 0
    assert [r["status"] for r in rep["result"]["results"]][0] == "EmptySource"


def test_degree_bound(tmp_path):
    code, rep = invoke(tmp_path, ["degree-bound", "--model", "P2", "--degree", "3",
                                  "--poly-inline", "1 3,0,0;1 0,3,0;1 0,0,3",
                                  "--h-inline", "3 2,1,0;5 0,0,3"])
    assert code == 0
    assert rep["result"]["member"] is True


@pytest.mark.parametrize("argv,code", [
    (["jacobian", "--degree", "3", "--seed", "0"], EXIT_CONFIG),
    (["jacobian", "--model", "P2", "--degree", "3", "--poly-inline", "x 1,2,0"], EXIT_CONFIG),
    (["jacobian", "--model", "P2", "--degree", "3"], EXIT_CONFIG),
    (["bott", "--type", "Z9", "--weight", "1"], EXIT_CONFIG),
    (["jacobian", "--model", "P2", "--degree", "3", "--poly-inline", "1 2,0,0"],
     EXIT_PRECONDITION),
    (["rank-check", "--model", "P2", "--degree", "4", "--seed", "0"], EXIT_PRECONDITION),
    (["jacobian", "--model", "P2", "--degree", "3",
      "--poly-inline", "1 0,2,1;-1 3,0,0;-1 2,0,1"], EXIT_DEGENERATE),
    (["cayley", "--n", "3", "--degrees", "2,2", "--poly-inline", "1 2,0,0,0;---;1 2,0,0,0"],
     EXIT_DEGENERATE),
])
def test_exit_codes(tmp_path, argv, code):
    got, rep = invoke(tmp_path, argv)
    assert got == code
    assert rep is None


def test_usage_errors_exit_with_config_code():
    with pytest.raises(SystemExit) as exc:
        run(["no-such-command"])
    assert exc.value.code == EXIT_CONFIG


def test_default_output_directory(tmp_path, monkeypatch):
    monkeypatch.setenv(OUTPUT_DIR_ENV, str(tmp_path))
    assert run(["bott", "--type", "A1", "--weight", "2"]) == 0
    files = list(tmp_path.glob("bott-*.json"))
    assert len(files) == 1
    rep = report.load(files[0])
    assert files[0].name == f"bott-{rep['digest'][:12]}.json"


def test_reports_are_reproducible_and_ignore_jobs(tmp_path):
    argv = ["jacobian", "--model", "P3", "--degree", "4", "--seed", "5"]
    _, a = invoke(tmp_path, argv, "a.json")
    _, b = invoke(tmp_path, argv + ["--jobs", "2"], "b.json")
    assert a["digest"] == b["digest"]
    strip = lambda r: {k: v for k, v in r.items() if k not in report.VOLATILE_KEYS}
    assert report.canonical_json(strip(a)) == report.canonical_json(strip(b))
    assert "jobs" not in a["inputs"]


def test_report_layout(tmp_path):
    _, rep = invoke(tmp_path, ["bott", "--type", "A2", "--weight", "1,1"])
    assert set(rep) == {"command", "inputs", "provenance", "result", "timing", "backend", "digest"}
    assert rep["digest"] == report.digest(rep)
    text = (tmp_path / "out.json").read_text()
    assert json.loads(text) == rep and text.endswith("\n")


def test_console_entry_point(tmp_path):
    out = tmp_path / "r.json"
    proc = subprocess.run([sys.executable, "-m", "hodgejac.cli", "bott", "--type", "A3",
                           "--weight", "1,0,1", "-o", str(out)],
                          capture_output=True, text=True, cwd=ROOT)
    assert proc.returncode == 0, proc.stderr
    assert report.load(out)["result"]["entries"][0]["dimension"] == 15


def sample_commands():
    lines = (ROOT / "samples" / "commands.txt").read_text().splitlines()
    return [shlex.split(line) for line in lines if line.strip() and not line.startswith("#")]


def test_every_sample_command_runs(tmp_path, monkeypatch):
    monkeypatch.chdir(ROOT)
    for i, argv in enumerate(sample_commands()):
        code, _ = invoke(tmp_path, argv, f"s{i}.json")
        assert code == 0, argv
