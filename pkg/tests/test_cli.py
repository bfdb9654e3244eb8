import io
import json

import pytest

from constrained_knots.cli import main


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), io.StringIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


def test_invariants():
    code, out, _ = run("invariants", "5", "3", "2", "3", "1")
    obj = json.loads(out)
    assert code == 0
    assert (obj["rank"], obj["genus"], obj["fibred"]) == (13, 5, True)


def test_convert():
    code, out, _ = run("convert", "5", "3", "2", "3", "1", "--to", "11")
    assert code == 0 and json.loads(out)["result"] == ["W", 13, 1, 5, 6, "+"]


def test_equivalent():
    code, out, _ = run("equivalent", *"7 2 2 3 1 7 4 2 3 1".split())
    assert code == 0 and json.loads(out)["verdict"] == "Equivalent"


def test_surgery_commands():
    code, out, _ = run("surgery-magic", "3", "1", "3", "-2", "1", "3")
    assert json.loads(out)["knot"] == [9, 7, 7, 3, 1]
    code, out, _ = run("surgery-braid", "4", "2", "5", "--fill", "5", "2")
    assert code == 0 and json.loads(out)["braid"]["b"] == 2
    code, _, err = run("surgery-braid", "4", "2", "5", "--fill", "5", "1")
    assert code == 2 and "outside" in err


def test_census_stdin():
    line = json.dumps({"p": 5, "q": 1, "alexander": [[0, 1]]})
    code, out, _ = run("census", stdin=line + "\n")
    assert code == 0 and json.loads(out)["verdict"] == "SimpleFilling"
    code, _, _ = run("census", stdin="[1, 2]\n")
    assert code == 2


def test_verify_iso():
    code, out, _ = run("verify-iso", "7", "2", "2", "3", "1")
    assert code == 0 and json.loads(out)["ok"] is True
    assert run("verify-iso")[0] == 1
    assert run("verify-iso", "1", "2")[0] == 1


def test_exit_codes():
    assert run()[0] == 1
    assert run("invariants", "5", "3")[0] == 1
    assert run("invariants", "4", "2", "2", "3", "1")[0] == 2


def test_table_and_determinism():
    code, out, _ = run("--format", "table", "invariants", "5", "3", "2", "3", "1")
    assert code == 0 and "rank: 13" in out
    assert run("invariants", "5", "3", "2", "3", "1") == run("invariants", "5", "3", "2", "3", "1")
