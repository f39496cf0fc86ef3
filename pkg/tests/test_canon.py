from __future__ import annotations

import networkx as nx
from hypothesis import given

import oracles
from conftest import graphs, graphs_with_perm
from circumkit.canon import (are_isomorphic, canonical_form, canonical_graph, canonical_key,
                             find_isomorphism, same_orbit)
from circumkit.graph import Graph, complete, cycle, path, petersen, star


@given(graphs_with_perm(1, 9))
def test_canonical_form_is_label_invariant(gp):
    g, perm = gp
    h = g.relabel(perm)
    assert canonical_form(g) == canonical_form(h)
    assert canonical_graph(g) == canonical_graph(h)


@given(graphs(1, 9))
def test_canonical_graph_is_isomorphic_to_input(g):
    c = canonical_graph(g)
    phi = find_isomorphism(g, c)
    assert phi is not None and sorted(phi) == list(range(g.n))
    for u, v in g.edges():
        assert c.has_edge(phi[u], phi[v])
    assert c.num_edges() == g.num_edges()


@given(graphs(1, 6), graphs(1, 6))
def test_isomorphism_agrees_with_brute_force(g, h):
    same = oracles.brute_canonical(g.n, g.edges()) == oracles.brute_canonical(h.n, h.edges())
    assert are_isomorphic(g, h) == same


@given(graphs(1, 8), graphs(1, 8))
def test_isomorphism_agrees_with_networkx(g, h):
    a, b = nx.Graph(), nx.Graph()
    a.add_nodes_from(range(g.n))
    a.add_edges_from(g.edges())
    b.add_nodes_from(range(h.n))
    b.add_edges_from(h.edges())
    assert are_isomorphic(g, h) == nx.is_isomorphic(a, b)


def test_hard_regular_cases():
    # C6 vs two triangles, Petersen vs a relabelled Petersen
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not are_isomorphic(cycle(6), two_triangles)
    p = petersen()
    assert are_isomorphic(p, p.relabel([3, 7, 1, 9, 0, 2, 8, 4, 6, 5]))
    assert canonical_key(complete(7)) == canonical_key(complete(7).relabel([6, 5, 4, 3, 2, 1, 0]))


def test_orbits():
    assert same_orbit(cycle(7), 0, 4)
    assert not same_orbit(path(4), 0, 1)
    assert same_orbit(path(4), 0, 3)
    assert same_orbit(star(4), 1, 4) and not same_orbit(star(4), 0, 1)


@given(graphs(2, 7))
def test_same_orbit_matches_marking(g):
    # v ~ w iff hanging a pendant path longer than n at v or at w gives isomorphic graphs
    def marked(v):
        tail = list(range(g.n, 2 * g.n + 1))
        return Graph.from_edges(2 * g.n + 1, g.edges() + [(v, tail[0])] + list(zip(tail, tail[1:])))
    for w in range(1, g.n):
        assert same_orbit(g, 0, w) == are_isomorphic(marked(0), marked(w))
