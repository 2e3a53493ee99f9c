import itertools
import json
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parityspec import coloring as C
from parityspec import graph as G
from parityspec.coloring import EdgeColoring, parse_colors
from parityspec.errors import NotASpecError, SizeGuardError
from parityspec.experiments import random_canonical_refinement, random_pair

EX27 = (G.cycle(4), parse_colors("1,2,1,3"))


def parity_path_bruteforce(g, phi):
    """Independent pec oracle: enumerate simple paths with networkx."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    for s, t in itertools.combinations(range(g.n), 2):
        for p in nx.all_simple_paths(h, s, t):
            counts = {}
            for a, b in zip(p, p[1:]):
                c = phi.colors[g.edge_id(a, b)]
                counts[c] = counts.get(c, 0) ^ 1
            if not any(counts.values()):
                return p
    return None


@st.composite
def graph_and_coloring(draw, max_n=8, max_colors=6):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_pair(random.Random(seed), max_n, max_colors)


# -- examples ---------------------------------------------------------------------------


def test_canonical_from_labeling_examples():
    c4 = C.canonical_from_labeling(G.cycle(4), [0b00, 0b01, 0b11, 0b10])
    assert c4.num_colors == 2
    assert c4.colors[0] == c4.colors[2] and c4.colors[1] == c4.colors[3]
    assert C.canonical_from_labeling(G.complete(4), [0, 1, 2, 3]).num_colors == 3
    assert C.canonical_from_labeling(G.complete(2), [0, 1]).num_colors == 1
    with pytest.raises(ValueError):
        C.canonical_from_labeling(G.path(3), [0, 1, 1])


def test_oracle_examples():
    assert C.parity_walk_oracle(G.complete(2), EdgeColoring((1,))) is None
    p3 = G.path(3)
    w = C.parity_walk_oracle(p3, EdgeColoring((1, 1)))
    assert w is not None and not w.closed and w.is_parity(p3, EdgeColoring((1, 1)))
    assert set(w.vertices) == {0, 1, 2}
    assert C.parity_walk_oracle(*EX27) is None


def test_is_spec_examples():
    assert C.is_spec(*EX27)
    assert C.is_spec(G.complete(3), EdgeColoring((1, 2, 3)))
    c6 = G.cycle(6)
    # two colors cannot separate six vertices: 0-1-2-3-4 is an open parity walk
    alt = parse_colors("1,2,1,2,1,2")
    assert not C.is_spec(c6, alt)
    assert C.parity_walk_oracle(c6, alt) is not None
    rainbow3 = parse_colors("1,2,3,1,2,3")
    assert C.is_spec(c6, rainbow3) == (C.parity_walk_oracle(c6, rainbow3) is None)


def test_is_pec_examples():
    assert C.is_pec(*EX27)
    assert not C.is_pec(G.path(3), EdgeColoring((1, 1)))
    with pytest.raises(SizeGuardError):
        C.is_pec(G.path(30), EdgeColoring.from_values(range(29)))


def test_canonicalize_example_27():
    res = C.canonicalize(*EX27, root=0)
    assert res.is_spec and res.cycle_space_dim == 1
    assert res.coloring_star.num_colors == 2
    pi = res.refinement_map
    assert pi[2] == pi[3] != pi[1]
    assert C.is_refinement(EX27[1], res.coloring_star)
    # merged map agrees edgewise
    assert all(pi[c] == s for c, s in zip(EX27[1].colors, res.coloring_star.colors))


def test_canonicalize_of_canonical_is_injective():
    g = G.complete(5)
    phi = C.canonical_from_labeling(g, [0, 1, 2, 4, 7])
    res = C.canonicalize(g, phi)
    assert res.coloring_star.num_colors == phi.num_colors
    assert len(set(res.refinement_map.values())) == len(res.refinement_map)


def test_canonicalize_collision():
    res = C.canonicalize(G.path(3), EdgeColoring((1, 1)), 0)
    assert not res.is_spec
    assert set(res.collision) == {0, 2}
    assert res.coloring_star is None
    assert json.loads(json.dumps(res.to_json()))["collision"] == list(res.collision)


def test_is_refinement_examples():
    phi = parse_colors("1,2,3")
    assert C.is_refinement(phi, phi)
    assert C.is_refinement(*[EX27[1], C.canonicalize(*EX27).coloring_star])
    assert not C.is_refinement(parse_colors("1,2,1"), parse_colors("1,2,2"))


def test_lift_examples():
    lifted = C.lift_kn_to_knn(2, EdgeColoring((1,)))
    k22 = G.complete_bipartite(2, 2)
    assert lifted.num_colors == 2 and C.is_spec(k22, lifted)
    lifted3 = C.lift_kn_to_knn(3, EdgeColoring((1, 2, 3)))
    assert lifted3.num_colors == 4 and C.is_spec(G.complete_bipartite(3, 3), lifted3)
    k4 = C.canonical_from_labeling(G.complete(4), [0, 1, 2, 3])
    lifted4 = C.lift_kn_to_knn(4, k4)
    assert lifted4.num_colors == 4 and C.is_spec(G.complete_bipartite(4, 4), lifted4)
    with pytest.raises(NotASpecError):
        C.lift_kn_to_knn(3, EdgeColoring((1, 1, 2)))


def test_cycle_space_image_dim_examples():
    tree = G.path(6)
    assert C.cycle_space_image_dim(tree, parse_colors("1,1,2,1,3")) == 0
    assert C.cycle_space_image_dim(G.complete(3), EdgeColoring((1, 2, 3))) == 1
    q2 = C.canonical_from_labeling(G.hypercube(2), [0, 1, 2, 3])
    assert C.cycle_space_image_dim(G.hypercube(2), q2) == 0


def test_compose_cut_edge_is_pec():
    g1, p1 = G.complete(3), EdgeColoring((1, 2, 3))
    g2, p2 = G.path(4), parse_colors("1,2,1")
    g, phi = C.compose_cut_edge(g1, p1, g2, p2, 2, 0)
    assert g.n == 7 and phi.num_colors == 4
    assert C.is_pec(g, phi) and parity_path_bruteforce(g, phi) is None


def test_coloring_parsing_and_json():
    phi = parse_colors(" 1, 2,1 ,3")
    assert phi.colors == (1, 2, 1, 3)
    assert EdgeColoring.from_json(json.loads(json.dumps(phi.to_json()))) == phi
    with pytest.raises(ValueError):
        EdgeColoring((0, 1))
    with pytest.raises(ValueError):
        C.is_spec(G.cycle(4), parse_colors("1,2"))


# -- properties --------------------------------------------------------------------------


@settings(max_examples=300, deadline=None)
@given(graph_and_coloring())
def test_is_spec_agrees_with_oracle(pair):
    g, phi = pair
    witness = C.parity_walk_oracle(g, phi)
    assert C.is_spec(g, phi) == (witness is None)
    if witness is not None:
        assert not witness.closed and witness.is_parity(g, phi)


@settings(max_examples=200, deadline=None)
@given(graph_and_coloring(max_n=7))
def test_spec_implies_pec_and_pec_matches_bruteforce(pair):
    g, phi = pair
    path = C.find_parity_path(g, phi)
    assert (path is None) == (parity_path_bruteforce(g, phi) is None)
    if C.is_spec(g, phi):
        assert path is None
    if path is not None:
        assert C.WalkWitness(tuple(path)).is_parity(g, phi)
        assert len(set(path)) == len(path)


@settings(max_examples=200, deadline=None)
@given(graph_and_coloring(max_n=10, max_colors=12), st.integers(0, 9))
def test_canonicalization_invariants(pair, root):
    g, phi = pair
    root %= g.n
    res = C.canonicalize(g, phi, root)
    assert res.labeling[root] == 0
    if not res.is_spec:
        u, v = res.collision
        assert u != v and res.labeling[u] == res.labeling[v]
        return
    star = res.coloring_star
    assert C.is_refinement(phi, star)
    assert star.num_colors <= phi.num_colors
    assert C.is_spec(g, star)
    assert star == C.canonical_from_labeling(g, res.labeling)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_canonical_colorings_are_specs(seed):
    rng = random.Random(seed)
    g = G.complete(rng.randint(2, 7)) if rng.random() < 0.3 else random_pair(rng)[0]
    phi = random_canonical_refinement(rng, g, 4, split_prob=rng.choice([0.0, 0.5]))
    assert C.is_spec(g, phi)
    assert C.parity_walk_oracle(g, phi) is None


@settings(max_examples=100, deadline=None)
@given(graph_and_coloring())
def test_spec_status_independent_of_root(pair):
    g, phi = pair
    assert len({C.is_spec(g, phi, r) for r in range(g.n)}) == 1


@settings(max_examples=100, deadline=None)
@given(graph_and_coloring())
def test_cycle_space_dim_bound(pair):
    # a spec's colors number at least lg n + dim C_phi
    g, phi = pair
    res = C.canonicalize(g, phi)
    if res.is_spec:
        assert 2 ** (phi.num_colors - res.cycle_space_dim) >= g.n
