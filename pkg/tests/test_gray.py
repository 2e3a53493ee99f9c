import pytest
from hypothesis import given
from hypothesis import strategies as st

from parityspec import bounds as B
from parityspec import coloring as C
from parityspec import gray
from parityspec.gf2 import atom, weight


def ruler_recursive(k):
    """``A_k = A_{k-1}, k, A_{k-1}`` with ``A_1 = 1``."""
    if k == 1:
        return [1]
    inner = ruler_recursive(k - 1)
    return inner + [k] + inner


def test_ruler_examples():
    assert gray.ruler_sequence(8) == [1, 2, 1, 3, 1, 2, 1, 4]
    assert gray.ruler_sequence(1) == [1]
    a4 = gray.ruler_sequence(15)
    assert a4 == a4[::-1] and a4[7] == 4
    assert a4 == ruler_recursive(4)
    with pytest.raises(ValueError):
        gray.ruler(0)


@pytest.mark.parametrize("k", range(1, 12))
def test_ruler_matches_recursion(k):
    assert gray.ruler_sequence(2**k - 1) == ruler_recursive(k)


def test_gray_labels_examples():
    # coordinate j is bit j-1: 000, 100, 110, 010 read as coordinates 1..3
    assert gray.gray_labels(3) == [0, 0b001, 0b011, 0b010]
    assert gray.gray_labels(0) == [0]
    labels = gray.gray_labels(255)
    assert labels == [i ^ (i >> 1) for i in range(256)]
    assert labels[7] == 0b100


def test_gray_coloring_examples():
    assert gray.gray_coloring(4, 1).coloring.num_colors == 2
    assert gray.gray_coloring(8, 2).coloring.num_colors == 5
    assert gray.gray_coloring(2, 1).coloring.num_colors == 1
    with pytest.warns(UserWarning):
        gray.gray_coloring(8, 4)


def test_census_examples():
    assert gray.color_census(16, 2) == {1: 1, 2: 2, 3: 2, 4: 2}
    for n in (2, 3, 9, 100):
        census = gray.color_census(n, 1)
        assert all(v == 1 for v in census.values()) and sum(census.values()) == B.ceil_lg(n)
    with pytest.raises(ValueError):
        gray.color_census(8, 4)


def test_window_color_examples():
    assert gray.window_color(0, 2) == atom(1) ^ atom(2)
    assert gray.window_color(4, 8) == atom(2) ^ atom(4)
    with pytest.raises(ValueError):
        gray.window_color(3, 3)


@given(st.integers(0, 5000), st.integers(1, 5000))
def test_window_weight_parity(i, length):
    assert weight(gray.window_color(i, i + length)) % 2 == length % 2


@given(st.integers(0, 3000), st.integers(1, 40))
def test_window_color_is_xor_of_ruler_atoms(i, length):
    acc = 0
    for x in range(i + 1, i + length + 1):
        acc ^= atom(gray.ruler(x))
    assert gray.window_color(i, i + length) == acc


def test_trim_examples():
    for m in range(10):
        res = gray.trim_check(0, 0, m)
        assert res and res.index == m
    res = gray.trim_check(1, 1, 5)
    assert res.status == "holds"
    labels = gray.gray_labels(5)
    assert labels[res.index] == labels[1] ^ labels[4]
    assert gray.trim_check(3, 5, 10).status == "invalid"
    assert not gray.trim_check(3, 5, 10)


def test_trim_sweep_small():
    checked, failures = gray.trim_sweep(64)
    assert failures == [] and checked > 0


def test_window_reduction_examples():
    # window (2,4] contains c_4 = 3, which is already the copy at 2^(3-1)
    assert gray.largest_element_window_reduction(2, 4, 2) == (2, 4)
    assert gray.largest_element_window_reduction(4, 6, 2) == (0, 2)


@pytest.mark.parametrize("ell", range(1, 13))
def test_window_reduction_exhaustive(ell):
    n = 2**12
    for i in range(0, n - 1):
        for j in range(i + 1, min(i + ell, n - 1) + 1):
            a, b = gray.largest_element_window_reduction(i, j, ell)
            assert gray.window_color(a, b) == gray.window_color(i, j)
            assert b - a <= ell and b & (b - 1) == 0


@pytest.mark.parametrize("n", [2**4, 2**6, 2**8])
def test_gray_specs_and_census_sum(n):
    for ell in range(1, B.ceil_lg(n) + 1):
        gc = gray.gray_coloring(n, ell)
        assert C.is_spec(gc.graph, gc.coloring)
        census = gray.color_census(n, ell)
        assert sum(census.values()) == gc.coloring.num_colors
        assert all(v <= gray.census_cap(k, ell) for k, v in census.items())
        assert gc.coloring.num_colors <= B.pathpower_gray_count_bound(n, ell)
