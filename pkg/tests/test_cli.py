import io
import subprocess
import sys

import pytest

from sharplrc.bench import bench, to_csv
from sharplrc.cli import cli_dispatch, parse_word
from sharplrc.errors import ParseError

from helpers import EX1


def run(*argv):
    out = io.StringIO()
    status = cli_dispatch([str(a) for a in argv], out)
    return status, out.getvalue()


def test_structure_report():
    status, text = run("structure", "--code", EX1)
    assert status == 0
    lines = text.splitlines()
    assert len(lines) == 10
    assert all(" loc=3 " in l for l in lines[:9])
    assert lines[-1] == "summary loc=3 dual_distance=4 optimal=yes"


def test_structure_full_testset():
    status, text = run("structure", "--code", EX1, "--full-testset")
    assert status == 0
    assert text.splitlines()[-1].startswith("testset elements=")


def test_recover_single(tmp_path):
    out = tmp_path / "word.txt"
    status, text = run("recover", "--code", EX1, "--word", "0,0,0,1,?,1,2,0,3", "--out", out)
    assert status == 0
    assert "x_5=2" in text
    assert out.read_text() == "0,0,0,1,2,1,2,0,3\n"


def test_recover_three_erasures():
    status, text = run("recover", "--code", EX1, "--word", "0,0,0,1,?,1,?,0,?")
    assert status == 0
    assert text.strip() == "word=0,0,0,1,2,1,2,0,3"


def test_domain_errors_exit_one():
    assert run("recover", "--code", EX1, "--word", "?,?,?,1,2,1,2,?,3")[0] == 1
    assert run("recover", "--code", EX1, "--word", "0,0,0,1,?,1,2,0")[0] == 1
    assert run("structure", "--code", "/nonexistent/file.code")[0] == 1


def test_usage_errors_exit_two():
    assert run("structure", "--bogus")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run()[0] == 2


def test_bench_csv_rows():
    status, text = run("bench", "--q", 2, "--n", 10, "--k", 4, "--trials", 20)
    assert status == 0
    lines = text.splitlines()
    assert lines[0] == "q,n,k,trial,elapsed_ms,candidates,loc,dual_distance"
    assert len(lines) == 21


def test_bench_deterministic():
    a = bench(3, 8, 3, 5, seed=11)
    b = bench(3, 8, 3, 5, seed=11)
    assert to_csv(a, timing=False) == to_csv(b, timing=False)
    assert [r.elapsed_ms >= 0 for r in a] == [True] * 5
    assert run("bench", "--q", 2, "--n", 8, "--k", 3, "--trials", 3, "--no-timing") == run(
        "bench", "--q", 2, "--n", 8, "--k", 3, "--trials", 3, "--no-timing"
    )


def test_analyze():
    status, text = run("analyze", "--code", EX1)
    assert status == 0
    assert "n=9 k=4" in text and "d=5 dual_distance=4" in text


def test_oracle_verify():
    assert run("oracle-verify", "--code", EX1)[0] == 0
    status, text = run("oracle-verify", "--random", "--trials", 5, "--q", 3, "--n", 7, "--k", 3)
    assert status == 0 and text.splitlines()[-1] == "verified=5 mismatches=0"


def test_budget_env(monkeypatch):
    monkeypatch.setenv("LRC_BUDGET", "10")
    assert run("structure", "--code", EX1)[0] == 1


def test_parse_word():
    assert parse_word("0, 3,?,1") == [0, 3, None, 1]
    with pytest.raises(ParseError):
        parse_word("0,4", q=4)
    with pytest.raises(ParseError):
        parse_word("0,a")


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "sharplrc", "analyze", "--code", str(EX1)], capture_output=True, text=True)
    assert r.returncode == 0 and "redundancy=5" in r.stdout
