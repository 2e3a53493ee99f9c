"""Ruler sequence, reflected Gray code labels, and the Gray spec of path powers.

The ruler sequence is 1-based: ``c_i = 1 + v_2(i)`` for ``i >= 1``. Vertices
of ``P_n^ell`` are ``0..n-1`` and vertex ``i`` gets the Gray label ``s_i``, so
the edge ``v_i v_j`` (``i < j``) is colored by the window ``c_{i+1}..c_j``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import NamedTuple

from .bounds import ceil_lg
from .coloring import EdgeColoring, canonical_from_labeling
from .gf2 import Vector
from .graph import Graph, path_power


def ruler(i: int) -> int:
    """``c_i``: one plus the exponent of the largest power of 2 dividing ``i``."""
    if i < 1:
        raise ValueError(f"ruler sequence is 1-based, got {i}")
    return (i & -i).bit_length()


def ruler_sequence(m: int) -> list[int]:
    """``[c_1, ..., c_m]``."""
    return [ruler(i) for i in range(1, m + 1)]


def gray_label(i: int) -> Vector:
    """``s_i``, the ``i``-th word of the binary reflected Gray code."""
    return i ^ (i >> 1)


def gray_labels(m: int) -> list[Vector]:
    """``[s_0, ..., s_m]`` as prefix sums of the atoms ``e_{c_i}``."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    labels = [0]
    for i in range(1, m + 1):
        labels.append(labels[-1] ^ (1 << (ruler(i) - 1)))
    return labels


def window_color(i: int, j: int) -> Vector:
    """Sum of the atoms ``e_{c_{i+1}} + ... + e_{c_j}``, i.e. the color of ``v_i v_j``."""
    if not 0 <= i < j:
        raise ValueError(f"need 0 <= i < j, got ({i}, {j})")
    return gray_label(i) ^ gray_label(j)


class GrayColoring(NamedTuple):
    graph: Graph
    labels: list[Vector]
    coloring: EdgeColoring


def in_regime(n: int, ell: int) -> bool:
    return n >= 2 and 1 <= ell <= ceil_lg(n)


def gray_coloring(n: int, ell: int) -> GrayColoring:
    """Canonical coloring of ``P_n^ell`` generated by ``v_i -> s_i``.

    Always a spec. Outside ``1 <= ell <= ceil(lg n)`` a warning is issued and
    none of the color-count statements are promised.
    """
    if not in_regime(n, ell):
        warnings.warn(f"ell={ell} is outside 1..ceil(lg {n}); color-count bounds do not apply", stacklevel=2)
    g = path_power(n, ell)
    labels = [gray_label(i) for i in range(n)]
    return GrayColoring(g, labels, canonical_from_labeling(g, labels))


def color_census(n: int, ell: int) -> dict[int, int]:
    """Number of distinct colors of the Gray coloring whose top coordinate is ``k``.

    Computed from the constructed coloring, not from a formula.
    """
    if not in_regime(n, ell):
        raise ValueError(f"census needs 1 <= ell <= ceil(lg n); got n={n}, ell={ell}")
    g = path_power(n, ell)
    colors = {gray_label(u) ^ gray_label(v) for u, v in g.edges}
    census: dict[int, int] = {k: 0 for k in range(1, ceil_lg(n) + 1)}
    for x in colors:
        census[x.bit_length()] += 1
    return census


def census_cap(k: int, ell: int) -> int:
    """``min(ell, 2^(k-1))``, the count of colors with top coordinate ``k`` when all windows occur."""
    return min(ell, 1 << (k - 1))


@dataclass(frozen=True)
class TrimResult:
    status: str  # "holds", "fails", or "invalid"
    index: int | None = None

    def __bool__(self) -> bool:
        return self.status == "holds"


def trim_check(q: int, r: int, m: int) -> TrimResult:
    """Whether ``a_{q+1} + ... + a_{m-r}`` equals one of ``s_0..s_m``.

    Valid inputs have ``2r <= m`` and ``r in {q, q+1}``; anything else
    returns status ``"invalid"``. The match is found by direct comparison
    against the prefix sums, and ``index`` reports which ``s_h`` it equals.
    """
    if min(q, r, m) < 0 or 2 * r > m or r not in (q, q + 1) or q > m - r:
        return TrimResult("invalid")
    prefix = gray_labels(m)
    window = prefix[q] ^ prefix[m - r]
    for h, s in enumerate(prefix):
        if s == window:
            return TrimResult("holds", h)
    return TrimResult("fails")


def trim_sweep(max_m: int) -> tuple[int, list[tuple[int, int, int]]]:
    """Check every valid ``(q, r, m)`` with ``m <= max_m``.

    Returns the number of triples checked and the list of failures.
    """
    checked = 0
    failures = []
    prefix = gray_labels(max_m)
    for m in range(max_m + 1):
        index = {s: h for h, s in enumerate(prefix[: m + 1])}
        for r in range(m // 2 + 1):
            for q in (r - 1, r):
                if q < 0:
                    continue
                checked += 1
                if prefix[q] ^ prefix[m - r] not in index:
                    failures.append((q, r, m))
    return checked, failures


def largest_element_window_reduction(i: int, j: int, ell: int) -> tuple[int, int]:
    """Relocate the color of window ``(i, j]`` to a window ending at ``2^(k-1)``.

    ``k`` is the largest ruler entry in the window. Scans windows
    ``(i', 2^(k-1)]`` of length at most ``ell`` for one with the same color.
    """
    if not 0 <= i < j or j - i > ell:
        raise ValueError(f"window ({i}, {j}] must be nonempty with length <= {ell}")
    color = window_color(i, j)
    k = max(ruler(x) for x in range(i + 1, j + 1))
    end = 1 << (k - 1)
    for start in range(end - 1, max(end - ell, 0) - 1, -1):
        if window_color(start, end) == color:
            return start, end
    raise LookupError(f"no window ending at {end} reproduces the color of ({i}, {j}]")


__all__ = [
    "GrayColoring",
    "TrimResult",
    "census_cap",
    "color_census",
    "gray_coloring",
    "gray_label",
    "gray_labels",
    "in_regime",
    "largest_element_window_reduction",
    "ruler",
    "ruler_sequence",
    "trim_check",
    "trim_sweep",
    "window_color",
]
