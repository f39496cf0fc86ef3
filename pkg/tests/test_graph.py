from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given

import oracles
from conftest import graphs, graphs_with_perm
from circumkit.graph import (Graph, OrderError, articulation_points, bits, complement, complete,
                             complete_bipartite, components, cycle, disjoint_union, induced,
                             is_2connected, is_2connected_naive, is_clique, is_connected, join,
                             mask_of, min_degree, path, petersen, star)


def test_constructors_and_basic_queries():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.num_edges() == 3
    assert g.degrees() == [1, 2, 2, 1]
    assert g.neighbors(1) == [0, 2]
    assert g.has_edge(2, 1) and not g.has_edge(0, 3)
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert (0, 3) in g.non_edges()


@pytest.mark.parametrize("rows", [[0b10, 0b00], [0b01], [0b100, 0b000, 0b000], [0b1000, 0, 0]])
def test_rejects_malformed_rows(rows):
    with pytest.raises(ValueError):
        Graph(len(rows), tuple(rows))


def test_rejects_loops_and_order():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(OrderError):
        Graph.from_edges(65, [])


def test_named_graphs():
    assert complete(5).num_edges() == 10
    assert cycle(6).degrees() == [2] * 6
    assert path(4).num_edges() == 3
    assert star(4).degrees() == [4, 1, 1, 1, 1]
    assert complete_bipartite(2, 3).num_edges() == 6
    p = petersen()
    assert p.n == 10 and p.degrees() == [3] * 10 and p.num_edges() == 15


def test_join_and_union():
    g = join(complete(2), disjoint_union(complete(1), Graph.from_edges(2, [])))
    assert g.n == 5 and sorted(g.degrees()) == [2, 2, 2, 4, 4]
    assert complement(complete(4)).num_edges() == 0


def test_induced_relabels_in_order():
    g = cycle(5)
    h = induced(g, mask_of([0, 1, 2]))
    assert h.edges() == [(0, 1), (1, 2)]
    with pytest.raises(ValueError):
        induced(g, 0)


def test_two_connectivity_examples():
    assert is_2connected(cycle(5))
    assert not is_2connected(star(3))
    assert not is_2connected(path(3))
    assert not is_2connected(complete(2))
    # two triangles sharing a vertex: vertex 2 is a cut vertex
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert list(bits(articulation_points(bowtie))) == [2]


@given(graphs(0, 9))
def test_articulation_points_match_oracle(g):
    assert set(bits(articulation_points(g))) == oracles.cut_vertices(g.n, g.edges())


@given(graphs(0, 9))
def test_articulation_points_match_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    assert set(bits(articulation_points(g))) == set(nx.articulation_points(h))


@given(graphs(0, 9))
def test_two_connected_agrees_with_naive(g):
    assert is_2connected(g) == is_2connected_naive(g) == oracles.two_connected(g.n, g.edges())


@given(graphs(1, 9))
def test_components_partition_vertices(g):
    comps = components(g)
    total = 0
    for c in comps:
        assert total & c == 0
        total |= c
        assert is_connected(g, c)
    assert total == g.full
    assert (len(comps) == 1) == is_connected(g)


@given(graphs_with_perm(1, 9))
def test_relabel_preserves_invariants(gp):
    g, perm = gp
    h = g.relabel(perm)
    assert sorted(g.degrees()) == sorted(h.degrees())
    assert h.num_edges() == g.num_edges()
    for u, v in g.edges():
        assert h.has_edge(perm[u], perm[v])
    assert is_2connected(g) == is_2connected(h)


@given(graphs(1, 9))
def test_min_degree_and_clique_helper(g):
    assert min_degree(g) == oracles.min_degree(g.n, g.edges())
    for v in range(g.n):
        assert is_clique(g, 1 << v)
    for u, v in g.edges():
        assert is_clique(g, 1 << u | 1 << v)
    for u, v in g.non_edges():
        assert not is_clique(g, 1 << u | 1 << v)
