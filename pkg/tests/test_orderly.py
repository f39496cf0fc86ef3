from __future__ import annotations

import pytest

import oracles
from circumkit.canon import canonical_key
from circumkit.graph import Graph, is_2connected, is_connected
from circumkit.orderly import EnumerationCapError, children, enumerate_graphs, parents_for

ALL = [1, 2, 4, 11, 34, 156, 1044, 12346]
CONNECTED = [1, 1, 2, 6, 21, 112, 853, 11117]
BICONNECTED = [0, 0, 1, 3, 10, 56, 468, 7123]


@pytest.mark.parametrize("n", range(1, 9))
def test_class_counts(n):
    assert sum(1 for _ in enumerate_graphs(n, "all")) == ALL[n - 1]
    assert sum(1 for _ in enumerate_graphs(n, "connected")) == CONNECTED[n - 1]
    assert sum(1 for _ in enumerate_graphs(n, "biconnected")) == BICONNECTED[n - 1]


@pytest.mark.parametrize("n", range(1, 6))
def test_complete_against_labelled_filtering(n):
    """All labelled graphs, deduplicated by brute-force canonical form."""
    classes = {"all": set(), "connected": set(), "biconnected": set()}
    for edges in oracles.all_labelled_graphs(n):
        key = oracles.brute_canonical(n, edges)
        classes["all"].add(key)
        if oracles.connected(n, edges):
            classes["connected"].add(key)
        if oracles.two_connected(n, edges):
            classes["biconnected"].add(key)
    for kind, expected in classes.items():
        got = {oracles.brute_canonical(g.n, g.edges()) for g in enumerate_graphs(n, kind)}
        assert got == expected, kind


def test_complete_against_labelled_filtering_n6():
    seen: dict[str, set] = {"all": set(), "connected": set(), "biconnected": set()}
    for edges in oracles.all_labelled_graphs(6):
        g = Graph.from_edges(6, edges)
        key = canonical_key(g)
        seen["all"].add(key)
        if is_connected(g):
            seen["connected"].add(key)
        if is_2connected(g):
            seen["biconnected"].add(key)
    for kind, keys in seen.items():
        got = [canonical_key(g) for g in enumerate_graphs(6, kind)]
        assert len(got) == len(set(got)) == len(keys)
        assert set(got) == keys


def test_examples():
    assert sum(1 for _ in enumerate_graphs(3, "biconnected")) == 1
    four = list(enumerate_graphs(4, "biconnected"))
    assert sorted(g.num_edges() for g in four) == [4, 5, 6]  # C4, K4-e, K4


def test_predicate_and_cap():
    tri_free = list(enumerate_graphs(5, "all", predicate=lambda g: g.num_edges() == 0))
    assert len(tri_free) == 1
    with pytest.raises(EnumerationCapError):
        next(enumerate_graphs(11))


def test_parents_partition_level():
    kids = [g for p in parents_for(6, "biconnected") for g in children(p, "biconnected")]
    assert len(kids) == 56 == len({canonical_key(g) for g in kids})
