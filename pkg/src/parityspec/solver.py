"""Exact p-hat and p at desk scale, and hypercube embedding.

Both solvers raise the target color count one step at a time from the
trivial lower bound ``max(ceil(lg n), max degree)``; the first feasible target
is the answer.

p-hat searches injective labelings only, which suffices because every spec
is refined by a canonical coloring with no more colors. Labels are assigned
in BFS order with the root at 0. Whenever a label is independent of the
earlier ones it is forced to be the next standard basis vector. This is
safe because an invertible linear map of the label space leaves color counts
unchanged.

p branches over edge colors in BFS edge order, with colors numbered
canonically. After each assignment it rejects any parity path through the
newly colored edge.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .bounds import ceil_lg
from .coloring import (
    EdgeColoring,
    canonical_from_labeling,
    color_vectors,
    cycle_space_image_dim,
    is_pec,
)
from .errors import BudgetExceeded
from .gf2 import Vector, combination
from .graph import Graph, bfs_order

DEFAULT_BUDGET = 120.0
_CHECK_EVERY = 2048


@dataclass
class SolveResult:
    value: int
    witness: object
    status: str = "exact"
    nodes: int = 0
    seconds: float = 0.0

    def to_json(self) -> dict:
        if isinstance(self.witness, EdgeColoring):
            witness = self.witness.to_json()
        else:
            witness = [format(x, "x") for x in self.witness]
        return {"value": self.value, "status": self.status, "witness": witness}


@dataclass
class _Clock:
    budget: float | None
    start: float = field(default_factory=time.monotonic)
    nodes: int = 0

    def tick(self, lower: int, upper: int | None, witness=None) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes % _CHECK_EVERY == 0:
            if time.monotonic() - self.start > self.budget:
                raise BudgetExceeded(
                    f"budget of {self.budget}s exhausted after {self.nodes} nodes", lower, upper, witness
                )

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.start


def trivial_lower_bound(g: Graph) -> int:
    return max(ceil_lg(max(g.n, 1)), g.max_degree())


def _phat_feasible(g: Graph, c: int, order: list[int], clock: _Clock, upper: int | None) -> list[Vector] | None:
    """An injective labeling whose canonical coloring uses at most ``c`` colors."""
    n = g.n
    position = [0] * n
    for i, v in enumerate(order):
        position[v] = i
    back = [[u for u in g.neighbors(v) if position[u] < position[v]] for v in order]
    labels = [-1] * n
    used: set[Vector] = set()
    count: dict[Vector, int] = {}

    def place(i: int, dim: int) -> bool:
        if i == n:
            return True
        clock.tick(c, upper)
        v = order[i]
        earlier = back[i]
        full = len(count) == c
        if full:
            # no new colors allowed: the label is an earlier neighbor's label plus a used color
            base = labels[earlier[0]]
            cands = {base ^ col for col in count}
        else:
            cands = set(range(1 << dim))
            if dim < c:
                cands.add(1 << dim)
        scored = []
        for x in cands:
            if x in used:
                continue
            new = 0
            fresh = set()
            for u in earlier:
                col = x ^ labels[u]
                if col not in count and col not in fresh:
                    fresh.add(col)
                    new += 1
            if len(count) + new <= c:
                scored.append((new, x))
        scored.sort()
        for _, x in scored:
            labels[v] = x
            used.add(x)
            for u in earlier:
                col = x ^ labels[u]
                count[col] = count.get(col, 0) + 1
            if place(i + 1, dim + 1 if x == 1 << dim else dim):
                return True
            for u in earlier:
                col = x ^ labels[u]
                if count[col] == 1:
                    del count[col]
                else:
                    count[col] -= 1
            used.discard(x)
            labels[v] = -1
        return False

    labels[order[0]] = 0
    used.add(0)
    if place(1, 0):
        return labels
    return None


def exact_phat(g: Graph, time_budget: float | None = DEFAULT_BUDGET, root: int = 0) -> SolveResult:
    """Minimum colors in a strong parity edge-coloring, with a witness labeling."""
    g.require_connected()
    clock = _Clock(time_budget)
    if g.m == 0:
        return SolveResult(0, (0,) * g.n, nodes=0)
    order = bfs_order(g, root)
    # identity labeling gives a feasible starting upper bound
    upper_labels = list(range(g.n))
    upper = len(set(color_vectors(g, upper_labels)))
    c = trivial_lower_bound(g)
    while c < upper:
        try:
            labels = _phat_feasible(g, c, order, clock, upper)
        except BudgetExceeded as exc:
            exc.witness = tuple(upper_labels)
            raise
        if labels is not None:
            return SolveResult(c, tuple(labels), nodes=clock.nodes, seconds=clock.elapsed)
        c += 1
    return SolveResult(upper, tuple(upper_labels), nodes=clock.nodes, seconds=clock.elapsed)


def phat_coloring(g: Graph, result: SolveResult) -> EdgeColoring:
    return canonical_from_labeling(g, result.witness)


# -- p -------------------------------------------------------------------------


def _edge_order(g: Graph, root: int) -> list[int]:
    order = bfs_order(g, root)
    position = {v: i for i, v in enumerate(order)}
    eids = []
    for v in order:
        for u, eid in g.adjacency[v]:
            if position[u] < position[v]:
                eids.append(eid)
    return eids


def _p_feasible(g: Graph, c: int, eorder: list[int], clock: _Clock, upper: int | None) -> list[int] | None:
    n = g.n
    colors = [0] * g.m
    # colored adjacency: adj[v] = list of (neighbor, color bit)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    at: list[set[int]] = [set() for _ in range(n)]
    on_path = [False] * n

    def parity_path_through(a: int, b: int, bit: int) -> bool:
        # every simple path containing edge ab splits as (path from b avoiding a) + ab + (path from a)
        def from_a(x: int, par: int) -> bool:
            if par == 0:
                return True
            for y, yb in adj[x]:
                if not on_path[y]:
                    on_path[y] = True
                    hit = from_a(y, par ^ yb)
                    on_path[y] = False
                    if hit:
                        return True
            return False

        def from_b(x: int, par: int) -> bool:
            if from_a(a, par ^ bit):
                return True
            for y, yb in adj[x]:
                if not on_path[y]:
                    on_path[y] = True
                    hit = from_b(y, par ^ yb)
                    on_path[y] = False
                    if hit:
                        return True
            return False

        on_path[a] = on_path[b] = True
        try:
            return from_b(b, 0)
        finally:
            on_path[a] = on_path[b] = False

    def assign(i: int, used: int) -> bool:
        if i == len(eorder):
            return True
        clock.tick(c, upper)
        eid = eorder[i]
        a, b = g.edges[eid]
        for col in range(1, min(used + 1, c) + 1):
            if col in at[a] or col in at[b]:
                continue
            bit = 1 << (col - 1)
            if parity_path_through(a, b, bit):
                continue
            colors[eid] = col
            adj[a].append((b, bit))
            adj[b].append((a, bit))
            at[a].add(col)
            at[b].add(col)
            if assign(i + 1, max(used, col)):
                return True
            adj[a].pop()
            adj[b].pop()
            at[a].discard(col)
            at[b].discard(col)
            colors[eid] = 0
        return False

    if assign(0, 0):
        return colors
    return None


def exact_p(g: Graph, time_budget: float | None = DEFAULT_BUDGET, root: int = 0) -> SolveResult:
    """Minimum colors in a parity edge-coloring, with a witness coloring."""
    g.require_connected()
    clock = _Clock(time_budget)
    if g.m == 0:
        return SolveResult(0, EdgeColoring(()), nodes=0)
    eorder = _edge_order(g, root)
    c = trivial_lower_bound(g)
    while True:
        colors = _p_feasible(g, c, eorder, clock, None)
        if colors is not None:
            return SolveResult(c, EdgeColoring(tuple(colors)), nodes=clock.nodes, seconds=clock.elapsed)
        c += 1


# -- hypercubes ---------------------------------------------------------------------


def hypercube_embed(g: Graph, time_budget: float | None = DEFAULT_BUDGET) -> dict[int, tuple[int, ...]] | None:
    """Embed ``g`` into ``Q_k``, ``k = ceil(lg n)``, or return None if impossible.

    An optimal labeling using exactly ``k`` colors has linearly independent
    colors that span every label. Writing each label in the color basis
    gives hypercube coordinates.
    """
    g.require_connected()
    k = ceil_lg(g.n)
    if g.n == 1:
        return {0: ()}
    result = exact_phat(g, time_budget)
    if result.value != k:
        return None
    labels = result.witness
    basis = sorted(set(color_vectors(g, labels)))
    coords = {}
    for v, x in enumerate(labels):
        mask = combination(basis, x)
        if mask is None:
            raise AssertionError(f"label of vertex {v} is outside the color span")
        coords[v] = tuple(mask >> i & 1 for i in range(k))
    if not verify_embedding(g, coords, k):
        raise AssertionError("constructed embedding failed verification")
    return coords


def verify_embedding(g: Graph, coords: dict[int, tuple[int, ...]], k: int) -> bool:
    """Injective, length-``k`` tuples, and adjacent vertices differ in exactly one coordinate."""
    if len(coords) != g.n or any(len(t) != k or set(t) - {0, 1} for t in coords.values()):
        return False
    if len(set(coords.values())) != g.n:
        return False
    for u, v in g.edges:
        if sum(a != b for a, b in zip(coords[u], coords[v])) != 1:
            return False
    return True


def verify_havel_moravek(g: Graph, phi: EdgeColoring, k: int | None = None, **pec_kwargs) -> bool:
    """Whether ``phi`` is a pec under which every cycle sees each color evenly.

    When this holds and ``phi`` has at most ``k`` colors, ``g`` embeds in ``Q_k``.
    With ``k`` given, the color count is checked too.
    """
    g.require_connected()
    ok = cycle_space_image_dim(g, phi) == 0 and is_pec(g, phi, **pec_kwargs)
    if k is not None:
        ok = ok and phi.num_colors <= k
    return ok


__all__ = [
    "SolveResult",
    "exact_p",
    "exact_phat",
    "hypercube_embed",
    "phat_coloring",
    "trivial_lower_bound",
    "verify_embedding",
    "verify_havel_moravek",
]
