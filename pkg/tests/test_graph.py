from itertools import combinations

import pytest
from hypothesis import given, settings

from hyperconf.graph import (
    Graph,
    GraphError,
    enumerate_maximal_cliques,
    extend_to_maximal_clique,
    graphs_equal,
    is_clique_transversal_bounded,
    is_maximal_clique,
    is_minimal_clique_transversal_bounded,
    maximal_cliques,
    universal_vertices,
)

from . import oracles
from .strategies import graphs, z
from .test_conformality import k222

P3 = Graph.from_edges(3, [(0, 1), (1, 2)])   # a - b - c
C5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
K4 = Graph.complete(4)
STAR = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
FIG1 = Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 5), (1, 5), (0, 4), (2, 4), (1, 3), (2, 3)])


def test_from_edges_validation():
    with pytest.raises(GraphError, match="duplicate"):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError, match="loop"):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(GraphError, match="range"):
        Graph.from_edges(3, [(0, 3)])
    assert Graph.from_edges(3, [(0, 1), (1, 0)], strict=False).num_edges == 1


def test_adjacency_sorted_and_symmetric():
    g = Graph.from_edges(4, [(3, 0), (2, 0), (1, 0)])
    assert g.adj[0] == (1, 2, 3)
    assert g.matrix.tolist() == [[0, 1, 1, 1], [1, 0, 0, 0], [1, 0, 0, 0], [1, 0, 0, 0]]
    with pytest.raises(GraphError):
        Graph(2, [(1,), ()])


def test_maximal_cliques_examples():
    cl = set(maximal_cliques(k222()))
    assert len(cl) == 8
    assert z(1, 2, 3) in cl and z(4, 5, 6) in cl
    assert all(len(c) == 3 for c in cl)
    assert sorted(maximal_cliques(Graph.empty(3))) == [(0,), (1,), (2,)]
    assert sorted(maximal_cliques(C5)) == sorted(C5.edges())


def test_enumeration_visitor_can_stop():
    seen = enumerate_maximal_cliques(k222(), lambda c: False)
    assert len(seen) == 1
    assert len(enumerate_maximal_cliques(k222())) == 8


@settings(max_examples=200)
@given(graphs(max_n=9))
def test_maximal_cliques_match_brute_force(g):
    mine = list(maximal_cliques(g))
    assert len(mine) == len(set(mine))
    assert {frozenset(c) for c in mine} == set(oracles.maximal_cliques(g.n, g.edges()))


def test_is_maximal_clique_examples():
    assert is_maximal_clique(FIG1, z(1, 2, 3))
    assert is_maximal_clique(C5, z(1, 2))
    assert not is_maximal_clique(C5, z(1, 3))
    assert not is_maximal_clique(K4, z(1, 2, 3))
    with pytest.raises(IndexError):
        is_maximal_clique(C5, [7])


@given(graphs(max_n=8, min_n=1))
def test_extend_to_maximal(g):
    for v in range(g.n):
        c = extend_to_maximal_clique(g, [v])
        assert v in c and is_maximal_clique(g, c)


def test_clique_transversal_examples():
    assert is_clique_transversal_bounded(STAR, [0])
    assert is_clique_transversal_bounded(P3, [0, 2])
    assert not is_clique_transversal_bounded(P3, [0])
    assert not is_clique_transversal_bounded(P3, [])
    assert is_clique_transversal_bounded(Graph.empty(0), [])
    assert is_minimal_clique_transversal_bounded(P3, [0, 2])
    assert is_minimal_clique_transversal_bounded(K4, [0])
    assert not is_minimal_clique_transversal_bounded(P3, [0, 1])


def test_bound_is_enforced():
    with pytest.raises(GraphError):
        is_clique_transversal_bounded(Graph.empty(10), range(9))
    assert is_clique_transversal_bounded(Graph.empty(10), range(10), bound=None)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_bounded_check_matches_definition(g):
    cliques = oracles.maximal_cliques(g.n, g.edges())
    for r in range(4):
        for x in combinations(range(g.n), r):
            expect = all(set(x) & c for c in cliques)
            assert is_clique_transversal_bounded(g, x) == expect


@given(graphs(max_n=8))
def test_singleton_transversal_iff_universal(g):
    uni = set(universal_vertices(g))
    for v in range(g.n):
        assert is_clique_transversal_bounded(g, [v]) == (v in uni)


def test_universal_and_equality():
    assert universal_vertices(P3) == (1,)
    assert universal_vertices(C5) == ()
    assert universal_vertices(K4) == (0, 1, 2, 3)
    assert graphs_equal(C5, Graph.from_edges(5, C5.edges()))
    assert not graphs_equal(P3, Graph.empty(3))
    assert not graphs_equal(k222(), Graph.complete(6))
