import json
import subprocess
import sys
from pathlib import Path

import pytest

from e510bound.cli import main

GOLDEN = Path(__file__).parent / "golden"

CASES = [
    (["candidates", "--degree", "12"], "candidates_degree_12.txt"),
    (["candidates", "--degree", "11"], "candidates_degree_11.txt"),
    (["candidates", "--degree", "13"], "candidates_degree_13.txt"),
    (["candidates", "--degree", "9"], "candidates_degree_9.txt"),
    (["bound-report"], "bound_report.txt"),
    (["table", "--check"], "table_check.txt"),
    (["decompose", "--tensor", "1,0,0,0", "0,0,0,1", "--md"], "decompose_5x5bar.txt"),
]


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv, name", CASES)
def test_golden(capsys, argv, name):
    code, out, _ = run(capsys, argv)
    assert code == 0
    assert out == (GOLDEN / name).read_text()


def test_decompose_json(capsys):
    code, out, _ = run(capsys, ["decompose", "--ext", "0,1,0,0", "--k", "2"])
    assert code == 0
    assert json.loads(out) == [{"weight": [1, 0, 1, 0], "mult": 1}]
    code, out, _ = run(capsys, ["decompose", "--ext", "0,0,1,0", "--k", "10", "--tensor-with", "0,1,0,0"])
    assert json.loads(out) == [{"weight": [0, 1, 0, 0], "mult": 1}]


def test_table_json(capsys):
    code, out, _ = run(capsys, ["table", "--json"])
    cells = json.loads(out)
    assert len(cells) == 25
    assert all(c["dim"] == c["expected_dim"] for c in cells)


def test_candidates_json(capsys):
    code, out, _ = run(capsys, ["candidates", "--degree", "11", "--json"])
    obj = json.loads(out)
    assert obj["discrepancy"]["surplus"] == [[0, 0, 0, 0]]
    code, out, _ = run(capsys, ["candidates", "--degree", "10", "--md"])
    assert out.count("\n| [") == 16


def test_bound_report_json(capsys):
    code, out, _ = run(capsys, ["bound-report", "--json"])
    assert json.loads(out)["global_bound"] == 12


def test_sing(capsys):
    code, out, _ = run(capsys, ["sing", "--hw", "0,0,0,1", "--degree", "1", "--weight", "1,0,0,0", "--json"])
    assert code == 0
    assert json.loads(out)["dimension"] == 1
    code, out, _ = run(capsys, ["sing", "--hw", "0,0,0,0", "--degree", "1", "--show"])
    assert "kernel dimension 10" in out


def test_sing_budget(capsys):
    code, _, err = run(capsys, ["sing", "--hw", "1,0,0,0", "--degree", "3", "--budget", "10"])
    assert code == 2 and "budget" in err


def test_verify_and_pseudo_check(capsys):
    code, out, _ = run(capsys, ["verify", "--suite", "verma", "--json"])
    assert code == 0 and json.loads(out)["passed"]
    code, out, _ = run(capsys, ["pseudo-check", "--samples", "5"])
    assert code == 0 and json.loads(out)["passed"]


@pytest.mark.parametrize("argv", [
    ["decompose", "--tensor", "1,0,0", "0,0,0,1"],
    ["decompose", "--tensor", "1,x,0,0", "0,0,0,1"],
    ["decompose", "--ext=-1,0,0,0", "--k", "1"],
    ["decompose", "--ext", "1,0,0,0"],
    ["decompose", "--ext", "1,0,0,0", "--k", "9"],
    ["candidates", "--degree", "-1"],
    ["sing", "--hw", "0,0,0,1", "--degree", "9"],
    ["pseudo-check", "--samples", "0"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, argv)
    assert code == 2
    assert "error" in err


@pytest.mark.parametrize("argv", [["bogus"], ["candidates"], ["table", "--md", "--json"],
                                  ["decompose", "--tensor", "-1,0,0,0", "0,0,0,1"]])
def test_argparse_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "e510bound", "candidates", "--degree", "12"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout == (GOLDEN / "candidates_degree_12.txt").read_text()
