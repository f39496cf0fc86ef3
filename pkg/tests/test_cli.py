from __future__ import annotations

import json
import subprocess
import sys

import pytest

from circumkit import cli
from circumkit.graph import complete_bipartite, cycle, star
from circumkit.graph6 import decode, encode


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def g6file(tmp_path):
    def make(*graphs, text=None):
        p = tmp_path / "in.g6"
        p.write_text(text if text is not None else "".join(encode(g) + "\n" for g in graphs))
        return str(p)
    return make


def test_gen_with_verify(capsys, tmp_path):
    parts = tmp_path / "parts.json"
    code, out, err = run(capsys, "gen", "H", "n=7", "omega=3", "delta=2", "--parts", str(parts))
    assert code == cli.OK
    g = decode(out.strip())
    assert g.n == 7 and sorted(g.degrees()) == [2, 2, 2, 2, 2, 6, 6]
    assert "delta=2 omega=3 c=4 OK" in err
    side = json.loads(parts.read_text())
    assert side["params"]["family"] == "H"


def test_gen_mismatch_and_notes(capsys):
    code, _, err = run(capsys, "gen", "H4", "omega=4", "l1=3", "l2=0")
    assert code == cli.VIOLATION
    assert "MISMATCH claimed" in err and "note:" in err
    code, _, err = run(capsys, "gen", "H4", "omega=4", "l1=3", "l2=0", "--no-verify")
    assert code == cli.OK


def test_gen_errors(capsys):
    assert run(capsys, "gen", "Z", "n=9", "omega=4", "delta=3")[0] == cli.CONSTRAINT
    assert run(capsys, "gen", "Q", "n=9")[0] == cli.USAGE
    assert run(capsys, "gen", "H", "n=9", "omega=4")[0] == cli.USAGE
    assert run(capsys, "gen", "H", "n9")[0] == cli.USAGE
    code, _, err = run(capsys, "gen", "G2", "omega=4", "delta=2", "l1=4", "l2=0")
    assert code == cli.CONSTRAINT and "filter" in err


def test_gen_list_values(capsys):
    code, out, _ = run(capsys, "gen", "G2", "omega=4", "delta=3", "l1=1", "l2=0", "stars=4")
    assert code in (cli.OK, cli.VIOLATION)
    assert decode(out.strip()).n == 4 + 2 + 4


def test_solve(capsys, g6file):
    path = g6file(cycle(6))
    code, out, _ = run(capsys, "solve", "circ", "-i", path)
    assert code == cli.OK and out.splitlines()[0] == "6"
    assert run(capsys, "solve", "clique", "-i", path)[1].splitlines()[0] == "2"
    assert run(capsys, "solve", "ham", "-i", path)[1].splitlines()[0] == "true"
    assert run(capsys, "solve", "path", "0", "3", "-i", path)[1].splitlines()[0] == "4"
    # hamiltonian graphs are never edge-maximal; H(7,3,2) is (any new edge makes a C5)
    assert run(capsys, "solve", "edge-maximal", "-i", path)[1].strip() == "false"
    h = g6file(text="F}rE?\n")
    assert run(capsys, "solve", "edge-maximal", "-i", h)[1].strip() == "true"
    assert run(capsys, "solve", "ham", "-i", g6file(star(3)))[1].strip() == "false"


def test_solve_errors(capsys, g6file, tmp_path):
    assert run(capsys, "solve", "path", "0", "-i", g6file(cycle(5)))[0] == cli.USAGE
    assert run(capsys, "solve", "path", "0", "9", "-i", g6file(cycle(5)))[0] == cli.USAGE
    assert run(capsys, "solve", "circ", "-i", str(tmp_path / "missing"))[0] == cli.USAGE
    assert run(capsys, "solve", "circ", "-i", g6file(text="D??\n@@@\n"))[0] == cli.PARSE
    assert run(capsys, "solve", "circ", "-i", g6file(text="\n"))[0] == cli.PARSE
    with pytest.raises(SystemExit) as e:
        cli.main(["solve", "circ", "--budget", "10"])
    assert e.value.code == cli.USAGE
    with pytest.raises(SystemExit) as e:
        cli.main(["frobnicate"])
    assert e.value.code == cli.USAGE


def test_budget_exhaustion(capsys, g6file):
    code, _, err = run(capsys, "solve", "circ", "--budget", "10000", "-i", g6file(complete_bipartite(12, 14)))
    assert code == cli.BUDGET and "exceeded 10000" in err


def test_classify(capsys, g6file):
    code, out, _ = run(capsys, "classify", "-i", g6file(cycle(6)))
    assert code == cli.OK
    doc = json.loads(out)
    assert doc["main"]["case"] == "bound_met" and doc["yuan"]["case"] == "bound_met"
    code, out, _ = run(capsys, "classify", "--format", "human", "-i", g6file(cycle(5), cycle(6)))
    assert code == cli.OK and len(out.splitlines()) == 2
    assert run(capsys, "classify", "-i", g6file(star(3)))[0] == cli.CONSTRAINT
    strict = g6file(text="H?Ci[^~\n")
    assert run(capsys, "classify", "-i", strict)[0] == cli.OK
    assert run(capsys, "classify", "--strict-hosts", "-i", strict)[0] == cli.VIOLATION


def test_sweep_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "sweep", "--n-max", "6", "--out-dir", str(tmp_path), "--format", "json")
    assert code == cli.OK
    doc = json.loads(out)
    assert doc["header"]["status"] == "COMPLETE"
    assert (tmp_path / "sweep_n6.json").exists() and (tmp_path / "sweep_n6.g6").exists()
    code, out, _ = run(capsys, "lemma-sweep", "--delta", "3", "--order-max", "6",
                       "--out-dir", str(tmp_path), "--stem", "lem")
    assert code == cli.OK and "violations: 0" in out
    assert (tmp_path / "lem.csv").exists()
    assert run(capsys, "sweep", "--n-max", "11", "--out-dir", str(tmp_path))[0] == cli.CONSTRAINT
    assert run(capsys, "lemma-sweep", "--delta", "5", "--out-dir", str(tmp_path))[0] == cli.CONSTRAINT
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert run(capsys, "sweep", "--n-max", "4", "--out-dir", str(blocker))[0] == cli.USAGE


def test_strict_sweep_reports_violation(capsys, tmp_path):
    # n = 9 is needed for the one strict-reading violation; restrict to that graph via classify
    code, out, _ = run(capsys, "classify", "--strict-hosts", "--format", "human",
                       "-i", str(_write(tmp_path, "H?Ci[^~")))
    assert code == cli.VIOLATION and "main=VIOLATION" in out


def _write(tmp_path, line):
    p = tmp_path / "one.g6"
    p.write_text(line + "\n")
    return p


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "circumkit", "solve", "clique"],
                       input=encode(cycle(5)) + "\n", capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.splitlines()[0] == "2"
