from __future__ import annotations

import networkx as nx
import pytest
from oracles import bfs_connected_cubic, iso_classes

from forcing_lab.errors import BadParameterError, InstanceTooLargeError, KTooSmallError
from forcing_lab.families import (
    diamond_necklace,
    enumerate_cubic_multigraphs,
    fig4_multigraph,
    paper_graph,
    triangle_expansion,
)
from forcing_lab.graph import is_claw_free, is_connected, is_cubic


def as_nx(G):
    g = nx.Graph(G.edges())
    g.add_nodes_from(range(G.n))
    return g


@pytest.mark.parametrize("n, total, connected", [(2, 1, 1), (4, 3, 2), (6, 9, 6)])
def test_multigraph_counts(n, total, connected):
    Ms = enumerate_cubic_multigraphs(n)
    assert len(Ms) == total
    assert sum(M.is_connected() for M in Ms) == connected
    assert all(M.is_cubic() for M in Ms)


def test_multigraph_range():
    with pytest.raises(InstanceTooLargeError):
        enumerate_cubic_multigraphs(10)


@pytest.mark.parametrize("k", [2, 3, 4, 6])
def test_necklace_shape(k):
    G, L = diamond_necklace(k)
    assert G.n == 4 * k and is_cubic(G) and is_claw_free(G) and is_connected(G)
    for i in range(1, k + 1):
        assert not G.has_edge(L.a(i), L.b(i))
        assert G.has_edge(L.a(i), L.b(i % k + 1))
    assert L.names()["c2"] == L.c(2)


def test_necklace_needs_two_diamonds():
    with pytest.raises(KTooSmallError):
        diamond_necklace(1)


def test_expansion_port_choice_is_irrelevant():
    for M in enumerate_cubic_multigraphs(4):
        base, _ = triangle_expansion(M)
        other, _ = triangle_expansion(M, [(2, 0, 1)] * M.n)
        assert nx.is_isomorphic(as_nx(base), as_nx(other))


def test_expansion_rejects_bad_ports():
    M = enumerate_cubic_multigraphs(2)[0]
    with pytest.raises(BadParameterError):
        triangle_expansion(M, [(0, 0, 1), (0, 1, 2)])


@pytest.mark.parametrize("ell", [4, 6, 8])
def test_fig4_is_expansion_of_doubled_cycle(ell):
    G, names = paper_graph("fig4", ell)
    H, _ = triangle_expansion(fig4_multigraph(ell))
    assert nx.is_isomorphic(as_nx(G), as_nx(H))
    assert G.has_edge(names["v1_3"], names["v2_3"])


@pytest.mark.parametrize("name, n", [("fig7", 10), ("fig9", 14)])
def test_drawn_graphs_are_claw_free_cubic(name, n):
    G, names = paper_graph(name)
    assert G.n == n == len(names)
    assert is_cubic(G) and is_claw_free(G) and is_connected(G)


def test_corpus_is_complete(corpus):
    """The pinned fixture holds exactly one graph per class, checked by plain BFS enumeration."""
    by_n: dict[int, list] = {}
    for G in corpus:
        by_n.setdefault(G.n, []).append(as_nx(G))
    for n in range(4, 15, 2):
        expected = iso_classes(G for G in bfs_connected_cubic(n) if is_claw_free(G))
        got = by_n.get(n, [])
        assert len(got) == len(expected), n
        for g in expected:
            assert sum(nx.is_isomorphic(g, h) for h in got) == 1
