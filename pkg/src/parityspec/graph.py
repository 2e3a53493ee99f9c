"""Simple undirected graphs, vertex orderings, and the generator families.

Vertices are ``0..n-1``. Edges are stored as ``(u, v)`` with ``u < v`` and
their position in :attr:`Graph.edges` is the stable edge id that colorings
index into.
"""

from __future__ import annotations

import json
import warnings
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import DisconnectedGraphError, SizeGuardError

VERTEX_CAP = 2**20
# cut-edge graphs from theorem52_graph carry a 2^n path; refuse them well before VERTEX_CAP.
THEOREM52_VERTEX_CAP = 2**16


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        normalized = []
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"repeated edge {e}")
            seen.add(e)
            normalized.append(e)
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """``adjacency[v]`` lists ``(neighbor, edge_id)`` pairs."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adjacency[v]]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(bfs_order(self, 0)) == self.n

    def is_bipartite(self) -> bool:
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y, _ in self.adjacency[x]:
                    if side[y] < 0:
                        side[y] = 1 - side[x]
                        queue.append(y)
                    elif side[y] == side[x]:
                        return False
        return True

    def require_connected(self) -> None:
        if not self.is_connected():
            raise DisconnectedGraphError(f"graph on {self.n} vertices is not connected")

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Graph":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), tuple((int(u), int(v)) for u, v in data["edges"]))

    def to_dot(self, name: str = "G", edge_labels: Sequence | None = None) -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.n):
            lines.append(f"  {v};")
        for eid, (u, v) in enumerate(self.edges):
            attr = f' [label="{edge_labels[eid]}"]' if edge_labels is not None else ""
            lines.append(f"  {u} -- {v}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def bfs_order(g: Graph, root: int) -> list[int]:
    seen = [False] * g.n
    seen[root] = True
    order = [root]
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y, _ in g.adjacency[x]:
            if not seen[y]:
                seen[y] = True
                order.append(y)
                queue.append(y)
    return order


def _check_cap(n: int, cap: int | None) -> None:
    cap = VERTEX_CAP if cap is None else cap
    if n > cap:
        raise SizeGuardError(f"{n} vertices exceeds the vertex cap {cap}")


def _positive(**params: int) -> None:
    for name, value in params.items():
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")


# -- generators ---------------------------------------------------------------


def complete(n: int) -> Graph:
    _positive(n=n)
    _check_cap(n, None)
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(s: int, t: int) -> Graph:
    """Parts ``X = 0..s-1`` and ``Y = s..s+t-1``; edges listed X-major."""
    _positive(s=s, t=t)
    _check_cap(s + t, None)
    return Graph(s + t, tuple((i, s + j) for i in range(s) for j in range(t)))


def path(n: int) -> Graph:
    _positive(n=n)
    _check_cap(n, None)
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    """Edges in cycle order ``01, 12, ..., (n-2)(n-1), 0(n-1)``."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    _check_cap(n, None)
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_power(n: int, ell: int, *, cap: int | None = None) -> Graph:
    """``P_n^ell``: vertices in path order, ``i ~ j`` iff ``|i - j| <= ell``."""
    _positive(n=n, ell=ell)
    if n > 1 and ell > n - 1:
        raise ValueError(f"ell={ell} exceeds n-1={n - 1}")
    _check_cap(n, cap)
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, min(n, i + ell + 1))))


def bip_path_power(n: int, ell: int, *, cap: int | None = None) -> Graph:
    """Bipartite path power: ``i ~ j`` iff ``|i - j| <= 2 ell`` and ``i, j`` differ in parity."""
    _positive(n=n, ell=ell)
    _check_cap(n, cap)
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, min(n, i + 2 * ell + 1), 2)))


def hypercube(k: int, *, cap: int | None = None) -> Graph:
    """``Q_k`` on ``0..2^k-1`` with ``i ~ j`` iff ``i ^ j`` is a power of two."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    _check_cap(1 << k, cap)
    return Graph(1 << k, tuple((i, i | (1 << b)) for i in range(1 << k) for b in range(k) if not i >> b & 1))


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


GENERATORS = {
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "path": path,
    "path_power": path_power,
    "bip_path_power": bip_path_power,
    "cycle": cycle,
    "hypercube": hypercube,
    "star": star,
}


def generate(family: str, *params: int) -> Graph:
    try:
        gen = GENERATORS[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(GENERATORS)}") from None
    return gen(*params)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, g1.edges + tuple((u + shift, v + shift) for u, v in g2.edges))


def cut_edge_join(g1: Graph, g2: Graph, u: int, v: int) -> Graph:
    """Disjoint union plus the edge ``u -- v + |V(g1)|``, which is a cut-edge.

    The joining edge gets the last edge id.
    """
    if g1.n == 0 or g2.n == 0:
        raise ValueError("both graphs must be nonempty")
    if not 0 <= u < g1.n:
        raise IndexError(f"vertex {u} not in first graph")
    if not 0 <= v < g2.n:
        raise IndexError(f"vertex {v} not in second graph")
    union = disjoint_union(g1, g2)
    return Graph(union.n, union.edges + ((u, v + g1.n),))


class Theorem52Graph(NamedTuple):
    graph: Graph
    hypothesis_holds: bool


def is_even_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0 and (n.bit_length() - 1) % 2 == 0


def theorem52_graph(n: int, *, cap: int = THEOREM52_VERTEX_CAP) -> Theorem52Graph:
    """``K_{n,n}`` joined by a cut-edge from ``x_1`` to the end of a ``2^n``-vertex path.

    Layout: ``x_i = i - 1``, ``y_j = n + j - 1``, path vertices ``2n .. 2n + 2^n - 1``
    with the cut-edge ``0 -- 2n``. The counterexample needs ``n`` to be an even
    power of two; other ``n >= 2`` are built with a warning.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if 2 * n + (1 << min(n, 64)) > cap:
        raise SizeGuardError(f"theorem52_graph({n}) would have {2 * n + 2**n} vertices > cap {cap}")
    ok = is_even_power_of_two(n)
    if not ok:
        warnings.warn(f"n={n} is not an even power of 2", stacklevel=2)
    return Theorem52Graph(cut_edge_join(complete_bipartite(n, n), path(1 << n), 0, 0), ok)


def theorem52_ordering(n: int) -> list[int]:
    """``x_1, y_1, x_2, y_2, ..., x_n, y_n`` followed by the path in order."""
    order = []
    for j in range(n):
        order += [j, n + j]
    return order + list(range(2 * n, 2 * n + (1 << n)))


def icbrt(k: int) -> int:
    """``floor(k ** (1/3))`` in exact integer arithmetic."""
    r = round(k ** (1 / 3))
    while r**3 > k:
        r -= 1
    while (r + 1) ** 3 <= k:
        r += 1
    return r


class GkGraph(NamedTuple):
    graph: Graph
    r: int
    component_spans: dict[int, range]


def gk_sizes(k: int) -> dict[int, int]:
    """Vertex count of each component ``Z_ell``, ``ell = 1..floor(k^(1/3))``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    r = icbrt(k)
    return {ell: 1 << -(-k // ell) for ell in range(1, r + 1)}


def gk_graph(k: int, *, cap: int | None = None) -> GkGraph:
    """Union of ``Z'_ell`` sharing the hub ``u``.

    ``Z_ell = bip_path_power(2^ceil(k/ell), ell)``. Vertex 0 is the hub; then
    come ``Z_r, Z_{r-1}, ..., Z_1``, each in natural order, so vertex order
    is the ordering used for the lower bound. The hub is adjacent to the first
    vertex of every component.
    """
    sizes = gk_sizes(k)
    r = len(sizes)
    _check_cap(1 + sum(sizes.values()), cap)
    edges: list[tuple[int, int]] = []
    spans: dict[int, range] = {}
    offset = 1
    for ell in range(r, 0, -1):
        z = bip_path_power(sizes[ell], ell, cap=cap)
        spans[ell] = range(offset, offset + z.n)
        edges.append((0, offset))
        edges.extend((a + offset, b + offset) for a, b in z.edges)
        offset += z.n
    return GkGraph(Graph(offset, tuple(edges)), r, spans)


# -- orderings ------------------------------------------------------------------


@dataclass(frozen=True)
class VertexOrdering:
    order: tuple[int, ...]
    back_degrees: tuple[int, ...]

    def has_earlier_neighbors(self) -> bool:
        return all(d >= 1 for d in self.back_degrees[1:])


def vertex_ordering(g: Graph, order: Iterable[int] | None = None) -> VertexOrdering:
    """Back-degrees of ``g`` along ``order`` (default: ``0..n-1``)."""
    order = tuple(range(g.n)) if order is None else tuple(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    position = [0] * g.n
    for i, v in enumerate(order):
        position[v] = i
    back = tuple(sum(1 for w in g.neighbors(v) if position[w] < i) for i, v in enumerate(order))
    return VertexOrdering(order, back)


def default_ordering(g: Graph, root: int = 0) -> VertexOrdering:
    """BFS order from ``root``; every later vertex has an earlier neighbor."""
    order = bfs_order(g, root)
    if len(order) != g.n:
        raise DisconnectedGraphError(f"graph on {g.n} vertices is not connected")
    return vertex_ordering(g, order)


__all__ = [
    "GENERATORS",
    "Graph",
    "GkGraph",
    "Theorem52Graph",
    "VertexOrdering",
    "bfs_order",
    "bip_path_power",
    "complete",
    "complete_bipartite",
    "cut_edge_join",
    "cycle",
    "default_ordering",
    "disjoint_union",
    "generate",
    "gk_graph",
    "gk_sizes",
    "hypercube",
    "icbrt",
    "is_even_power_of_two",
    "path",
    "path_power",
    "star",
    "theorem52_graph",
    "theorem52_ordering",
    "vertex_ordering",
]
