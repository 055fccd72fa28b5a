import pytest

from arbcount import constructions as C
from arbcount.graphs import (
    digraphs_isomorphic,
    in_degrees,
    is_balanced,
    is_strongly_connected,
    is_tournament,
    out_degrees,
)


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9])
def test_swirl_regular(n):
    T = C.swirl(n)
    assert is_tournament(T)
    assert out_degrees(T) == [(n - 1) // 2] * n
    assert is_balanced(T)


@pytest.mark.parametrize("n", [0, 2, 4])
def test_swirl_rejects_even(n):
    with pytest.raises(ValueError):
        C.swirl(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_transitive(n):
    T = C.transitive(n)
    assert is_tournament(T)
    assert out_degrees(T) == list(range(n - 1, -1, -1))


@pytest.mark.parametrize("q", [3, 7, 11, 19, 23])
def test_paley(q):
    T = C.paley(q)
    assert is_tournament(T)
    assert is_balanced(T)
    # vertex-transitive under translation
    shift = [(i + 1) % q for i in range(q)]
    assert T.relabel(shift) == T


@pytest.mark.parametrize("q", [5, 9, 13, 15])
def test_paley_rejects(q):
    with pytest.raises(ValueError):
        C.paley(q)


def test_paley_3_is_swirl_3():
    assert digraphs_isomorphic(C.paley(3), C.swirl(3))


def test_complete_graphs():
    K = C.complete_graph(5)
    assert K.edge_count == 10 and K.degrees() == [4] * 5
    B = C.complete_bipartite(2, 3)
    assert B.edge_count == 6 and B.degrees() == [3, 3, 2, 2, 2]
    assert C.cycle_graph(5).degrees() == [2] * 5
    assert C.path_graph(4).edge_count == 3
    with pytest.raises(ValueError):
        C.complete_bipartite(0, 3)


@pytest.mark.parametrize("n,m", [(2, 2), (2, 4), (4, 2), (4, 6)])
def test_blowup(n, m):
    D = C.bipartite_blowup_minimizer(n, m)
    assert D.underlying() == C.complete_bipartite(n, m)
    assert is_balanced(D)
    assert is_strongly_connected(D)


def test_blowup_rejects_odd():
    with pytest.raises(ValueError):
        C.bipartite_blowup_minimizer(3, 4)


def test_double_and_symmetric():
    G = C.complete_graph(4)
    D2 = C.double(G)
    assert D2.edge_count == 2 * G.edge_count
    S = C.symmetric_orientation(D2)
    assert S.underlying() == D2
    assert S.reverse() == S
    with pytest.raises(ValueError):
        C.symmetric_orientation(G)


@pytest.mark.parametrize("seed", range(5))
def test_random_instances_are_seeded(seed):
    assert C.random_tournament(6, seed) == C.random_tournament(6, seed)
    assert C.random_digraph(5, 0.5, seed, 3) == C.random_digraph(5, 0.5, seed, 3)
    assert is_tournament(C.random_tournament(6, seed))
    G = C.random_graph(6, 0.5, seed, 2)
    D = C.random_orientation(G, seed)
    assert D.underlying() == G


@pytest.mark.parametrize("seed", range(10))
def test_random_eulerian_orientation(seed):
    G = C.random_even_graph(7, 0.5, seed, max_mult=3)
    assert all(d % 2 == 0 for d in G.degrees())
    D = C.random_eulerian_orientation(G, seed)
    assert D.underlying() == G
    assert out_degrees(D) == in_degrees(D)


def test_random_eulerian_orientation_rejects_odd():
    with pytest.raises(ValueError):
        C.random_eulerian_orientation(C.path_graph(3), 0)


def test_connected_graph_census():
    graphs = C.connected_graphs(6)
    by_edges = {}
    for G in graphs:
        assert G.is_connected()
        by_edges[G.edge_count] = by_edges.get(G.edge_count, 0) + 1
    # counts of connected graphs with 0..6 edges, no isolated vertices
    assert [by_edges[m] for m in range(7)] == [1, 1, 1, 3, 5, 12, 30]
