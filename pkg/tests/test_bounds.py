import math
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parityspec import bounds as B
from parityspec import coloring as C
from parityspec import graph as G
from parityspec.errors import HypothesisError, NotASpecError, SizeGuardError


def test_ceil_floor_lg():
    assert [B.ceil_lg(n) for n in range(1, 10)] == [0, 1, 2, 2, 3, 3, 3, 3, 4]
    assert [B.floor_lg(n) for n in range(1, 10)] == [0, 1, 1, 2, 2, 2, 2, 3, 3]
    with pytest.raises(ValueError):
        B.ceil_lg(0)


def test_hopf_stiefel_examples():
    assert B.hopf_stiefel(1, 1) == 1
    assert B.hopf_stiefel(3, 3) == 4
    assert B.hopf_stiefel(2, 3) == 4
    assert B.hopf_stiefel_binomial(1, 1) == 1
    assert B.hopf_stiefel_binomial(2, 2) == 2
    assert B.hopf_stiefel_binomial(4, 4) == 4
    assert B.hopf_stiefel_binomial(2, 3) == 4


def test_binomial_parity_against_math_comb():
    for n in range(40):
        for k in range(n + 1):
            assert B.binomial_is_odd(n, k) == (math.comb(n, k) % 2 == 1)


def _hs_by_math_comb(s, t):
    n = max(s, t)
    while any(math.comb(n, k) % 2 for k in range(max(n - t + 1, 0), s)):
        n += 1
    return n


@pytest.mark.parametrize("s,t", list(product(range(1, 25), repeat=2)))
def test_hopf_stiefel_agrees_with_direct_binomials(s, t):
    assert B.hopf_stiefel(s, t) == _hs_by_math_comb(s, t)


@given(st.integers(1, 300), st.integers(1, 300))
def test_hopf_stiefel_properties(s, t):
    v = B.hopf_stiefel(s, t)
    assert v == B.hopf_stiefel(t, s)
    assert max(s, t) <= v <= s + t - 1
    assert v == B.hopf_stiefel_binomial(s, t)


@given(st.integers(1, 500))
def test_hopf_stiefel_diagonal(n):
    assert B.hopf_stiefel(n, n) == 1 << B.ceil_lg(n)


def test_binomial_guard():
    with pytest.raises(SizeGuardError):
        B.hopf_stiefel_binomial(6000, 6000)


def test_sr_bound_examples():
    p4 = G.path(4)
    assert B.sr_bound(p4, C.canonical_from_labeling(p4, [0, 1, 3, 2])) == 2
    k3 = G.complete(3)
    val = B.sr_bound(k3, C.EdgeColoring((1, 2, 3)))
    assert val == pytest.approx(math.log2(3) + 1)
    assert math.ceil(val) == 3
    q3 = G.hypercube(3)
    assert B.sr_bound(q3, C.canonical_from_labeling(q3, list(range(8)))) == 3
    with pytest.raises(NotASpecError):
        B.sr_bound(G.path(3), C.EdgeColoring((1, 1)))


def test_saturating_examples():
    p8 = B.SaturatingInstance(G.vertex_ordering(G.path(8)).back_degrees)
    assert B.saturating_min_sum(p8).value == 3
    p16 = B.SaturatingInstance(G.vertex_ordering(G.path_power(16, 2)).back_degrees)
    res = B.saturating_min_sum(p16)
    assert res.value == 7 == B.saturating_min_sum_bruteforce(p16).value
    assert p16.is_saturating(res.witness) and p16.cost(res.witness) == 7
    for n in range(1, 40):
        ones = B.SaturatingInstance((0,) + (1,) * (n - 1))
        assert B.saturating_min_sum(ones).value == B.ceil_lg(n)


def test_saturating_hypothesis_and_guard():
    with pytest.raises(HypothesisError):
        B.saturating_min_sum(B.SaturatingInstance((0, 1, 0, 2)))
    with pytest.raises(SizeGuardError):
        B.saturating_min_sum_bruteforce(B.SaturatingInstance((0,) + (1,) * 20))


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(1, 9), min_size=0, max_size=15))
def test_saturating_dp_matches_bruteforce(tail):
    inst = B.SaturatingInstance((0, *tail))
    dp = B.saturating_min_sum(inst)
    brute = B.saturating_min_sum_bruteforce(inst)
    assert dp.value == brute.value
    assert inst.is_saturating(dp.witness) and inst.cost(dp.witness) == dp.value
    # the least-back-degree floor never exceeds the saturating optimum
    assert B.least_backdegree_sum(inst) <= dp.value


def test_saturating_bound_is_lower_bound_on_small_graphs():
    # known values: p-hat(K_4) = 3, p-hat(K_3,3) = 4, p-hat(P_16) = 4
    assert B.saturating_bound(G.complete(4)).value <= 3
    k33 = G.complete_bipartite(3, 3)
    assert B.saturating_bound(k33, G.default_ordering(k33).order).value <= 4
    with pytest.raises(HypothesisError):
        B.saturating_bound(k33)
    assert B.saturating_bound(G.path(16)).value == 4


def test_pathpower_bounds_examples():
    for n in (2, 5, 16, 1000):
        L = B.ceil_lg(n)
        assert B.pathpower_bounds(n, 1) == (L - 1, L + 1)
    # lower = 2*4 - 3, upper = 2*4 - 2*(1 - 1)
    assert B.pathpower_bounds(16, 2) == (5, 8)
    assert B.pathpower_bounds(1024, 4) == (30, 36)
    with pytest.raises(ValueError):
        B.pathpower_bounds(8, 4)


def test_gk_certificates():
    assert B.gk_lower_bound_certificate(1).value == 2
    cert8 = B.gk_lower_bound_certificate(8)
    assert cert8.value == 11
    with pytest.raises(SizeGuardError):
        B.gk_lower_bound_certificate(64)


def test_theorem52_saturating_bound():
    res = B.theorem52_saturating_bound(4)
    assert res.value == 6
    inst = B.SaturatingInstance(G.vertex_ordering(G.theorem52_graph(4).graph, G.theorem52_ordering(4)).back_degrees)
    assert inst.is_saturating(res.witness)
