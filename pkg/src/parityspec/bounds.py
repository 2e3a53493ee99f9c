"""Lower and upper bounds on the strong parity edge chromatic number."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .coloring import EdgeColoring, canonicalize
from .errors import HypothesisError, NotASpecError, SizeGuardError
from .graph import Graph, VertexOrdering, gk_graph, theorem52_graph, theorem52_ordering, vertex_ordering

BINOMIAL_GUARD = 10**4
BRUTE_FORCE_MAX_N = 18


def ceil_lg(n: int) -> int:
    """``ceil(log2 n)`` for ``n >= 1``, without floating point."""
    if n < 1:
        raise ValueError(f"ceil_lg needs n >= 1, got {n}")
    return (n - 1).bit_length()


def floor_lg(n: int) -> int:
    if n < 1:
        raise ValueError(f"floor_lg needs n >= 1, got {n}")
    return n.bit_length() - 1


# -- Hopf-Stiefel -----------------------------------------------------------------


def hopf_stiefel(s: int, t: int) -> int:
    """``s o t = min_j 2^j (ceil(s/2^j) + ceil(t/2^j) - 1)``.

    For ``2^j >= s + t`` every term is at least ``2^j``, which already exceeds
    the ``j = 0`` term ``s + t - 1``, so ``j`` stops at ``ceil(lg(s + t))``.
    """
    if s < 1 or t < 1:
        raise ValueError("hopf_stiefel needs positive arguments")
    best = s + t - 1
    for j in range(1, ceil_lg(s + t) + 1):
        p = 1 << j
        best = min(best, p * (-(-s // p) + -(-t // p) - 1))
    return best


def binomial_is_odd(n: int, k: int) -> bool:
    """Parity of ``C(n, k)`` by Lucas: odd iff the bits of ``k`` are a subset of those of ``n``."""
    return 0 <= k <= n and k & ~n == 0


def hopf_stiefel_binomial(s: int, t: int) -> int:
    """Least ``n`` with ``C(n, k)`` even for every ``n - t < k < s``."""
    if s < 1 or t < 1:
        raise ValueError("hopf_stiefel_binomial needs positive arguments")
    if s + t > BINOMIAL_GUARD:
        raise SizeGuardError(f"s + t = {s + t} exceeds guard {BINOMIAL_GUARD}")
    n = max(s, t)
    while any(binomial_is_odd(n, k) for k in range(max(n - t + 1, 0), s)):
        n += 1
    return n


# -- coset bound --------------------------------------------------------------------


def sr_bound(g: Graph, phi: EdgeColoring, root: int = 0) -> float:
    """``lg n + dim C_phi``, a lower bound on the number of colors of the spec ``phi``."""
    result = canonicalize(g, phi, root)
    if not result.is_spec:
        raise NotASpecError("sr_bound needs a spec", result.collision)
    return math.log2(g.n) + result.cycle_space_dim


# -- saturating sets -------------------------------------------------------------------


@dataclass(frozen=True)
class SaturatingInstance:
    """Back-degrees along a vertex ordering (``back_degrees[0]`` belongs to ``v_1``).

    A set ``T`` of positions ``1..n-1`` is saturating when, for each
    ``k = 2..n``, it holds at least ``ceil(lg k)`` of the positions ``1..k-1``.
    """

    back_degrees: tuple[int, ...]

    @classmethod
    def from_ordering(cls, ordering: VertexOrdering) -> "SaturatingInstance":
        return cls(tuple(ordering.back_degrees))

    @property
    def n(self) -> int:
        return len(self.back_degrees)

    def threshold(self, k: int) -> int:
        return ceil_lg(k)

    def is_saturating(self, positions: Sequence[int]) -> bool:
        chosen = set(positions)
        if any(not 1 <= p < self.n for p in chosen):
            return False
        count = 0
        for k in range(2, self.n + 1):
            count += (k - 1) in chosen
            if count < ceil_lg(k):
                return False
        return True

    def cost(self, positions: Sequence[int]) -> int:
        return sum(self.back_degrees[p] for p in positions)

    def check_hypothesis(self) -> None:
        bad = [i for i, d in enumerate(self.back_degrees) if i >= 1 and d < 1]
        if bad:
            raise HypothesisError(f"positions {bad[:5]} have no earlier neighbor")


@dataclass(frozen=True)
class SaturatingResult:
    value: int
    witness: tuple[int, ...]


def saturating_min_sum(inst: SaturatingInstance) -> SaturatingResult:
    """Minimum back-degree sum over saturating sets.

    Dynamic program over positions with state ``count`` chosen so far,
    capped at ``ceil(lg n)`` since no threshold asks for more. Returns the
    optimum and a witness as 0-based positions.
    """
    inst.check_hypothesis()
    n = inst.n
    if n <= 1:
        return SaturatingResult(0, ())
    top = ceil_lg(n)
    inf = math.inf
    best: list[float] = [0] + [inf] * top
    # parents[i-1][c] = count before position i on the best route to c
    parents: list[list[int]] = []
    for i in range(1, n):
        d = inst.back_degrees[i]
        new = [inf] * (top + 1)
        parent = [-1] * (top + 1)
        for c in range(top + 1):
            if best[c] == inf:
                continue
            if best[c] < new[c]:
                new[c], parent[c] = best[c], c
            c2 = min(c + 1, top)
            if best[c] + d < new[c2]:
                new[c2], parent[c2] = best[c] + d, c
        for c in range(ceil_lg(i + 1)):
            new[c] = inf
        best = new
        parents.append(parent)

    witness = []
    c = top
    for i in range(n - 1, 0, -1):
        prev = parents[i - 1][c]
        # back-degrees are >= 1 here, so staying at count c never comes from a take
        if prev != c:
            witness.append(i)
        c = prev
    return SaturatingResult(int(best[top]), tuple(sorted(witness)))


def saturating_min_sum_bruteforce(inst: SaturatingInstance) -> SaturatingResult:
    """Exhaustive search over all subsets of positions ``1..n-1``."""
    n = inst.n
    if n > BRUTE_FORCE_MAX_N:
        raise SizeGuardError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got {n}")
    if n <= 1:
        return SaturatingResult(0, ())
    thresholds = [ceil_lg(k) for k in range(2, n + 1)]
    best = None
    best_set = ()
    for mask in range(1 << (n - 1)):
        count = 0
        ok = True
        for idx in range(n - 1):
            count += mask >> idx & 1
            if count < thresholds[idx]:
                ok = False
                break
        if not ok:
            continue
        positions = tuple(idx + 1 for idx in range(n - 1) if mask >> idx & 1)
        cost = inst.cost(positions)
        if best is None or cost < best:
            best, best_set = cost, positions
    return SaturatingResult(best, best_set)


def least_backdegree_sum(inst: SaturatingInstance) -> int:
    """Sum of the ``ceil(lg n)`` smallest back-degrees after the first vertex."""
    inst.check_hypothesis()
    return sum(sorted(inst.back_degrees[1:])[: ceil_lg(max(inst.n, 1))])


def saturating_bound(g: Graph, order: Sequence[int] | None = None) -> SaturatingResult:
    """Saturating lower bound for ``g`` along ``order`` (vertex-id order by default)."""
    return saturating_min_sum(SaturatingInstance.from_ordering(vertex_ordering(g, order)))


# -- family bounds ----------------------------------------------------------------------


def pathpower_bounds(n: int, ell: int) -> tuple[int, int]:
    """Strict bounds ``(lower, upper)`` on the spec number of ``P_n^ell``.

    ``lower = ell L - C(ell+1, 2)`` and ``upper = ell L - ell (floor(lg ell) - 1)``
    with ``L = ceil(lg n)``; valid for ``1 <= ell <= L``.
    """
    if n < 2 or not 1 <= ell <= ceil_lg(n):
        raise ValueError(f"need 1 <= ell <= ceil(lg n); got n={n}, ell={ell}")
    big_l = ceil_lg(n)
    return ell * big_l - math.comb(ell + 1, 2), ell * big_l - ell * (floor_lg(ell) - 1)


def pathpower_gray_count_bound(n: int, ell: int) -> int:
    """``ell L - ell floor(lg ell) + ell - 1``, the explicit bound on the Gray coloring's size."""
    big_l = ceil_lg(n)
    return ell * big_l - ell * floor_lg(ell) + ell - 1


def gk_lower_bound_certificate(k: int) -> SaturatingResult:
    """Exact saturating minimum for ``G_k`` along its construction order."""
    return saturating_bound(gk_graph(k).graph)


def theorem52_saturating_bound(n: int) -> SaturatingResult:
    g = theorem52_graph(n).graph
    return saturating_bound(g, theorem52_ordering(n))


__all__ = [
    "SaturatingInstance",
    "SaturatingResult",
    "binomial_is_odd",
    "ceil_lg",
    "floor_lg",
    "gk_lower_bound_certificate",
    "hopf_stiefel",
    "hopf_stiefel_binomial",
    "least_backdegree_sum",
    "pathpower_bounds",
    "pathpower_gray_count_bound",
    "saturating_bound",
    "saturating_min_sum",
    "saturating_min_sum_bruteforce",
    "sr_bound",
    "theorem52_saturating_bound",
]
