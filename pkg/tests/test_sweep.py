from __future__ import annotations

import csv
import io
import json

import pytest

from circumkit import classify as cl
from circumkit.graph6 import decode, encode
from circumkit.orderly import EnumerationCapError, enumerate_graphs
from circumkit.sweep import (LemmaConfig, SweepConfig, atomic_write, run_lemma_sweep, run_sweep)


@pytest.fixture(scope="module")
def small():
    return run_sweep(7, SweepConfig(keep="all"))


def test_totals_partition_records(small):
    t = small.totals
    assert t["classes"] == {"3": 1, "4": 3, "5": 10, "6": 56, "7": 468}
    total = sum(t["classes"].values())
    assert sum(t["main"].values()) == total == sum(t["yuan"].values()) == len(small.records)
    assert small.violations == 0 and small.complete
    assert small.header["status"] == "COMPLETE"


def test_records_agree_with_direct_classification(small):
    for r in small.records[::25]:
        g = decode(r.graph6)
        inv = cl.invariants(g)
        assert (inv.n, inv.delta, inv.omega, inv.c) == (r.n, r.delta, r.omega, r.circumference)
        assert cl.check_theorem_main(g).case == r.verdict_main
        assert cl.check_theorem_yuan(g).case == r.verdict_yuan


def test_records_cover_every_class_once(small):
    keys = [r.graph6 for r in small.records]
    assert len(keys) == len(set(keys))
    want = {encode(g) for n in range(3, 8) for g in enumerate_graphs(n, "biconnected")}
    assert set(keys) == want


def test_keep_exceptional_filters_but_keeps_digest(small):
    rep = run_sweep(7)
    assert rep.digest == small.digest
    assert rep.records == [r for r in small.records if r.exceptional]


def test_empty_range():
    rep = run_sweep(2)
    assert rep.records == [] and rep.totals["classes"] == {}
    assert rep.complete and rep.violations == 0
    assert run_lemma_sweep(2, 4).records == []


def test_cap():
    with pytest.raises(EnumerationCapError):
        run_sweep(11)
    with pytest.raises(ValueError):
        run_lemma_sweep(5, 8)
    with pytest.raises(ValueError):
        SweepConfig(keep="some")


def test_worker_count_does_not_change_body():
    a = run_sweep(6, SweepConfig(keep="all", workers=1))
    b = run_sweep(6, SweepConfig(keep="all", workers=2))
    assert a.body_json() == b.body_json()
    assert a.header["workers"] == 1 and b.header["workers"] == 2
    la = run_lemma_sweep(2, 6, LemmaConfig(keep="all", workers=1))
    lb = run_lemma_sweep(2, 6, LemmaConfig(keep="all", workers=2))
    assert la.body_json() == lb.body_json()


def test_budget_incidents_make_report_incomplete():
    rep = run_sweep(6, SweepConfig(budget=1, retry_budget=2))
    assert not rep.complete and rep.incidents
    assert rep.header["status"] == "INCOMPLETE"
    # a small first budget is rescued by the 10x retry
    rep = run_sweep(6, SweepConfig(budget=3))
    assert rep.complete and sum(rep.totals["classes"].values()) == 70
    lem = run_lemma_sweep(2, 6, LemmaConfig(budget=1, retry_budget=1))
    assert lem.incidents and all(i.roots is not None for i in lem.incidents)


def test_lemma_sweep_small():
    rep = run_lemma_sweep(2, 6, LemmaConfig(keep="all"))
    assert rep.violations == 0
    assert set(rep.totals["verdict"]) <= {cl.PATH_FOUND, cl.EXC_LT, cl.EXC_SLT}
    for r in rep.records:
        assert r.x < r.y
        assert cl.rooted_hypotheses(decode(r.graph6), r.x, r.y, 2) is None
    rep3 = run_lemma_sweep(3, 7)
    assert rep3.violations == 0
    assert rep3.totals["verdict"].get(cl.EXC_SLT, 0) > 0


def test_report_io(tmp_path, small):
    paths = small.write(tmp_path / "out", "main")
    assert [p.suffix for p in paths] == [".json", ".csv", ".g6"]
    doc = json.loads(paths[0].read_text())
    assert doc["body"]["digest"] == small.digest
    assert doc["header"]["status"] == "COMPLETE"
    rows = list(csv.reader(io.StringIO(paths[1].read_text())))
    assert rows[0][0] == "graph6" and len(rows) == len(small.records) + 1
    corpus = paths[2].read_text().split()
    assert corpus == sorted(set(corpus), key=corpus.index)
    assert all(decode(s).n >= 3 for s in corpus)
    assert not list((tmp_path / "out").glob(".*.tmp"))


def test_atomic_write_replaces(tmp_path):
    p = tmp_path / "f.txt"
    atomic_write(p, "one")
    atomic_write(p, "two")
    assert p.read_text() == "two"
    assert [q.name for q in tmp_path.iterdir()] == ["f.txt"]
