import json

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from parityspec import graph as G
from parityspec.errors import DisconnectedGraphError, SizeGuardError


def as_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def edge_set(g):
    return {frozenset(e) for e in g.edges}


def test_path_power_examples():
    p = G.path_power(4, 1)
    assert p.m == 3 and edge_set(p) == edge_set(G.path(4))
    assert edge_set(G.path_power(5, 2)) == {frozenset(e) for e in [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]}


def test_bip_path_power_predicate():
    assert edge_set(G.bip_path_power(6, 1)) == edge_set(G.path(6))
    for n, ell in [(10, 2), (17, 3)]:
        expected = {frozenset((i, j)) for i in range(n) for j in range(i + 1, n) if (j - i) % 2 == 1 and j - i <= 2 * ell}
        assert edge_set(G.bip_path_power(n, ell)) == expected
        assert G.bip_path_power(n, ell).is_bipartite()


def test_hypercube_and_generators_vs_networkx():
    assert nx.is_isomorphic(as_nx(G.hypercube(2)), nx.cycle_graph(4))
    assert nx.is_isomorphic(as_nx(G.hypercube(4)), nx.hypercube_graph(4))
    assert nx.is_isomorphic(as_nx(G.complete(6)), nx.complete_graph(6))
    assert nx.is_isomorphic(as_nx(G.complete_bipartite(3, 4)), nx.complete_bipartite_graph(3, 4))
    assert nx.is_isomorphic(as_nx(G.cycle(7)), nx.cycle_graph(7))


def test_generate_dispatch():
    assert G.generate("cycle", 5) == G.cycle(5)
    with pytest.raises(ValueError):
        G.generate("petersen")


def test_cut_edge_join_examples():
    k2 = G.complete(2)
    assert nx.is_isomorphic(as_nx(G.cut_edge_join(k2, k2, 0, 0)), nx.path_graph(4))
    j = G.cut_edge_join(G.path(2), G.path(2), 1, 0)
    assert j.n == 4 and edge_set(j) == edge_set(G.path(4))
    assert j.edges[-1] == (1, 2)


def test_theorem52_graph_n4():
    t = G.theorem52_graph(4)
    assert t.hypothesis_holds
    # 2n + 2^n vertices: 8 in K_{4,4}, 16 on the path
    assert t.graph.n == 24
    assert t.graph == G.cut_edge_join(G.complete_bipartite(4, 4), G.path(16), 0, 0)
    assert t.graph.has_edge(0, 8)
    assert t.graph.is_bipartite() and t.graph.is_connected()


def test_theorem52_graph_small_and_guard():
    with pytest.warns(UserWarning):
        t = G.theorem52_graph(2)
    assert t.graph.n == 8 and not t.hypothesis_holds
    with pytest.raises(SizeGuardError):
        G.theorem52_graph(16)


def test_gk_examples():
    gk = G.gk_graph(8)
    assert gk.r == 2
    assert {ell: len(span) for ell, span in gk.component_spans.items()} == {1: 256, 2: 16}
    assert gk.graph.n == 273 and gk.graph.degree(0) == 2
    g1 = G.gk_graph(1)
    assert g1.r == 1 and nx.is_isomorphic(as_nx(g1.graph), nx.path_graph(3))
    with pytest.raises(SizeGuardError):
        G.gk_graph(27)


@pytest.mark.parametrize("k", range(1, 200))
def test_icbrt(k):
    r = G.icbrt(k)
    assert r**3 <= k < (r + 1) ** 3


def test_orderings():
    o = G.default_ordering(G.path(4), 0)
    assert o.order == (0, 1, 2, 3) and o.back_degrees == (0, 1, 1, 1)
    assert G.vertex_ordering(G.path_power(6, 2)).back_degrees == (0, 1, 2, 2, 2, 2)
    assert G.default_ordering(G.complete(4), 0).back_degrees == (0, 1, 2, 3)
    with pytest.raises(DisconnectedGraphError):
        G.default_ordering(G.Graph(3, ((0, 1),)), 0)
    with pytest.raises(ValueError):
        G.vertex_ordering(G.path(3), [0, 0, 1])


def test_graph_validation():
    with pytest.raises(ValueError):
        G.Graph(3, ((0, 0),))
    with pytest.raises(ValueError):
        G.Graph(3, ((0, 5),))
    with pytest.raises(ValueError):
        G.Graph(3, ((0, 1), (1, 0)))


@given(st.integers(1, 12), st.data())
def test_json_roundtrip(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    g = G.Graph(n, tuple(edges))
    assert G.Graph.from_json(json.loads(json.dumps(g.to_json()))) == g


@given(st.integers(2, 30), st.integers(1, 5))
def test_path_power_matches_networkx_power(n, ell):
    ell = min(ell, n - 1)
    expected = nx.power(nx.path_graph(n), ell)
    assert edge_set(G.path_power(n, ell)) == {frozenset(e) for e in expected.edges}


def test_dot_export():
    dot = G.path(3).to_dot("P3", edge_labels=["a", "b"])
    assert dot.startswith("graph P3 {")
    assert '0 -- 1 [label="a"]' in dot
