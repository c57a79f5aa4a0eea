import io
import json
import subprocess
import sys

import pytest

from filtersums.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_file(tmp_path, capsys):
    prog = tmp_path / "q.fs"
    prog.write_text("let F = perp(dcc)\nmember F [5..inf)\nmember dcc [0..inf)\n")
    code, out, _ = run(capsys, "eval", str(prog))
    res = json.loads(out)
    assert code == 0
    assert [r["verdict"] for r in res] == ["yes", "no"]
    assert res[0]["query"] == "member F [5..inf)"


def test_eval_stdin_text(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO("1/2 + 1/3\n"))
    code, out, _ = run(capsys, "eval", "-", "--format", "text")
    assert code == 0 and out.strip() == "1/2 + 1/3  =>  value 5/6"


def test_syntax_error_exit_two(tmp_path, capsys):
    prog = tmp_path / "bad.fs"
    prog.write_text("member dcc\n")
    code, out, err = run(capsys, "eval", str(prog))
    assert code == 2 and out == ""
    assert "line 1, column 11" in err


def test_domain_error_exit_one(tmp_path, capsys):
    prog = tmp_path / "err.fs"
    prog.write_text("member nothing [0..1]\nmember cof [0..inf)\n")
    code, out, err = run(capsys, "eval", str(prog))
    res = json.loads(out)
    assert code == 1 and res[0]["verdict"] == "error" and res[1]["verdict"] == "no"
    assert "nothing" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "eval", "/nonexistent/prog.fs")
    assert code == 2 and "error" in err


def test_suite_list(capsys):
    code, out, _ = run(capsys, "suite", "--list")
    names = [s["name"] for s in json.loads(out)]
    assert code == 0 and "nonassoc-s8" in names and "oracle-gate" in names and len(names) == 11


def test_nonassoc_suite(capsys):
    code, out, _ = run(capsys, "--seed", "0xF1L7ER", "suite", "nonassoc-s8")
    rep = json.loads(out)
    assert code == 0 and rep["cases"] == 1 and rep["passes"] == 1 and rep["failures"] == []
    assert rep["seed"] == "0xF1L7ER" and rep["window"] == 32


def test_flags_after_subcommand(capsys):
    code, out, _ = run(capsys, "suite", "accbal", "--samples", "50", "--format", "text")
    assert code == 0 and out.startswith("PASS accbal: 50/50")


def test_accbal_default(capsys):
    code, out, _ = run(capsys, "suite", "accbal", "--seed", "0xF1L7ER", "--window", "32")
    rep = json.loads(out)
    assert code == 0 and rep["cases"] == 1000 and not rep["failures"]


def test_unknown_suite(capsys):
    code, _, err = run(capsys, "suite", "no-such")
    assert code == 2 and "unknown suite" in err


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "filtersums", "suite", "laurent", "--format", "text"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.startswith("PASS laurent: 4/4")


@pytest.mark.parametrize("seed", ["7", "abc", "0x10"])
def test_seeds_are_reproducible(seed, capsys):
    _, a, _ = run(capsys, "--seed", seed, "suite", "gsum")
    _, b, _ = run(capsys, "--seed", seed, "suite", "gsum")
    strip = lambda s: {k: v for k, v in json.loads(s).items() if k != "details"}
    assert strip(a) == strip(b)
