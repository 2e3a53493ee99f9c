"""Edge-colorings, parity walks and paths, and canonicalization of specs.

A coloring stores one positive integer color id per edge id. For algebra the
ids are read atomically: color ``c`` is the vector ``e_c``. Canonical colorings
come from an injective vertex labeling ``f`` (a sequence of GF(2) vectors
indexed by vertex) via ``phi(uv) = f(u) + f(v)``.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from . import gf2
from .errors import BudgetExceeded, DisconnectedGraphError, NotASpecError, SizeGuardError
from .gf2 import Gf2Basis, Vector
from .graph import Graph, complete, complete_bipartite, cut_edge_join

Labeling = tuple[Vector, ...]

ORACLE_STATE_CAP = 2**26
PEC_VERTEX_CAP = 24


@dataclass(frozen=True)
class EdgeColoring:
    """Color id (``>= 1``) for each edge id.

    ``names`` optionally attaches a display name to each distinct id, e.g. the
    hex vector of a canonical color.
    """

    colors: tuple[int, ...]
    names: tuple[tuple[int, str], ...] | None = None

    def __post_init__(self):
        colors = tuple(int(c) for c in self.colors)
        if any(c < 1 for c in colors):
            raise ValueError("color ids must be >= 1")
        object.__setattr__(self, "colors", colors)

    @classmethod
    def from_values(cls, values: Iterable[Hashable], name=None) -> "EdgeColoring":
        """Number arbitrary color values by first appearance in edge order."""
        ids: dict[Hashable, int] = {}
        colors = []
        for value in values:
            if value not in ids:
                ids[value] = len(ids) + 1
            colors.append(ids[value])
        names = None
        if name is not None:
            names = tuple((i, name(value)) for value, i in ids.items())
        return cls(tuple(colors), names)

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    @property
    def palette(self) -> list[int]:
        return sorted(set(self.colors))

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, eid: int) -> int:
        return self.colors[eid]

    def atomic(self) -> list[Vector]:
        """Per-edge atom ``e_c`` for color ``c``."""
        return [1 << (c - 1) for c in self.colors]

    def normalized(self) -> "EdgeColoring":
        return EdgeColoring.from_values(self.colors)

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for eid, c in enumerate(self.colors):
            out.setdefault(c, []).append(eid)
        return out

    def name_of(self, color: int) -> str:
        if self.names is not None:
            return dict(self.names)[color]
        return str(color)

    def to_json(self) -> dict:
        data: dict = {"colors": list(self.colors)}
        if self.names is not None:
            data["names"] = {str(i): n for i, n in self.names}
        return data

    @classmethod
    def from_json(cls, data: dict) -> "EdgeColoring":
        names = None
        if "names" in data:
            names = tuple(sorted((int(i), n) for i, n in data["names"].items()))
        return cls(tuple(data["colors"]), names)


def parse_colors(text: str) -> EdgeColoring:
    """Parse an inline comma list such as ``"1,2,1,3"``."""
    return EdgeColoring(tuple(int(x) for x in text.replace(" ", "").split(",") if x))


def _check_coloring(g: Graph, phi: EdgeColoring) -> None:
    if len(phi) != g.m:
        raise ValueError(f"coloring has {len(phi)} entries but graph has {g.m} edges")


def is_proper(g: Graph, phi: EdgeColoring) -> bool:
    _check_coloring(g, phi)
    for adj in g.adjacency:
        seen = set()
        for _, eid in adj:
            c = phi.colors[eid]
            if c in seen:
                return False
            seen.add(c)
    return True


# -- canonical colorings --------------------------------------------------------


def check_injective(labels: Sequence[Vector]) -> None:
    seen: dict[Vector, int] = {}
    for v, x in enumerate(labels):
        if x in seen:
            raise ValueError(f"labeling is not injective: vertices {seen[x]} and {v} share {gf2.to_hex(x)}")
        seen[x] = v


def canonical_from_labeling(g: Graph, labels: Sequence[Vector]) -> EdgeColoring:
    """Coloring ``uv -> f(u) + f(v)``; each color is named by its hex vector."""
    if len(labels) != g.n:
        raise ValueError(f"labeling has {len(labels)} entries but graph has {g.n} vertices")
    check_injective(labels)
    return EdgeColoring.from_values((labels[u] ^ labels[v] for u, v in g.edges), gf2.to_hex)


def color_vectors(g: Graph, labels: Sequence[Vector]) -> list[Vector]:
    """Per-edge difference vectors of a labeling."""
    return [labels[u] ^ labels[v] for u, v in g.edges]


# -- exact walk oracle ------------------------------------------------------------


@dataclass(frozen=True)
class WalkWitness:
    vertices: tuple[int, ...]

    @property
    def closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    def edge_ids(self, g: Graph) -> list[int]:
        return [g.edge_id(a, b) for a, b in zip(self.vertices, self.vertices[1:])]

    def color_counts(self, g: Graph, phi: EdgeColoring) -> Counter:
        return Counter(phi.colors[e] for e in self.edge_ids(g))

    def is_parity(self, g: Graph, phi: EdgeColoring) -> bool:
        return all(k % 2 == 0 for k in self.color_counts(g, phi).values())

    def concat(self, other: "WalkWitness") -> "WalkWitness":
        if self.vertices[-1] != other.vertices[0]:
            raise ValueError("walks do not meet")
        return WalkWitness(self.vertices + other.vertices[1:])

    def reversed(self) -> "WalkWitness":
        return WalkWitness(self.vertices[::-1])


def parity_walk_oracle(g: Graph, phi: EdgeColoring, *, state_cap: int = ORACLE_STATE_CAP) -> WalkWitness | None:
    """Search for an open parity walk by BFS over ``(vertex, parity)`` states.

    From each start ``s`` the walk begins in state ``(s, 0)``; reaching
    ``(v, 0)`` with ``v != s`` exhibits an open parity walk. Returns None
    exactly when ``phi`` is a spec. Independent of the algebraic check.
    """
    _check_coloring(g, phi)
    g.require_connected()
    palette = {c: i for i, c in enumerate(phi.palette)}
    if g.n * (1 << len(palette)) > state_cap:
        raise SizeGuardError(f"oracle needs {g.n} * 2^{len(palette)} states > cap {state_cap}")
    bit = [1 << palette[c] for c in phi.colors]
    for s in range(g.n):
        parent: dict[tuple[int, int], tuple[int, int] | None] = {(s, 0): None}
        queue = deque([(s, 0)])
        while queue:
            state = queue.popleft()
            x, par = state
            for y, eid in g.adjacency[x]:
                nxt = (y, par ^ bit[eid])
                if nxt in parent:
                    continue
                parent[nxt] = state
                if nxt[1] == 0 and y != s:
                    walk = [y]
                    cur = state
                    while cur is not None:
                        walk.append(cur[0])
                        cur = parent[cur]
                    return WalkWitness(tuple(reversed(walk)))
                queue.append(nxt)
    return None


# -- algebraic canonicalization ------------------------------------------------------


@dataclass(frozen=True)
class CanonicalizationResult:
    """Outcome of canonicalizing a coloring at a root.

    ``labeling`` holds the reduced coset representative of each vertex; it is
    injective exactly when the input is a spec. For non-specs ``collision``
    names two vertices sharing a coset and the canonical fields are None.
    """

    labeling: Labeling
    s_r_basis: Gf2Basis
    coloring_star: EdgeColoring | None
    refinement_map: dict[int, int] | None
    collision: tuple[int, int] | None

    @property
    def is_spec(self) -> bool:
        return self.collision is None

    @property
    def cycle_space_dim(self) -> int:
        return self.s_r_basis.dim

    def to_json(self) -> dict:
        data = {
            "is_spec": self.is_spec,
            "labeling": [gf2.to_hex(x) for x in self.labeling],
            "dim_c_phi": self.cycle_space_dim,
            "s_r_basis": [gf2.to_hex(x) for x in self.s_r_basis.rows],
        }
        if self.is_spec:
            data["coloring_star"] = self.coloring_star.to_json()
            data["num_colors_star"] = self.coloring_star.num_colors
            data["refinement_map"] = {str(k): v for k, v in sorted(self.refinement_map.items())}
        else:
            data["collision"] = list(self.collision)
        return data


def _tree_sums(g: Graph, atoms: Sequence[Vector], root: int) -> list[Vector]:
    """Sum of edge vectors along the BFS-tree path from ``root`` to each vertex."""
    sums: list[Vector | None] = [None] * g.n
    sums[root] = 0
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y, eid in g.adjacency[x]:
            if sums[y] is None:
                sums[y] = sums[x] ^ atoms[eid]
                queue.append(y)
    if any(s is None for s in sums):
        raise DisconnectedGraphError(f"graph on {g.n} vertices is not connected")
    return sums  # type: ignore[return-value]


def canonicalize(g: Graph, phi: EdgeColoring, root: int = 0) -> CanonicalizationResult:
    """Canonical coloring that ``phi`` refines, if ``phi`` is a spec.

    ``S_r`` is spanned by the cycle images ``t(u) + t(v) + phi(uv)`` where
    ``t`` sums colors along a BFS tree; vertex ``v``'s walk set is the coset
    ``t(v) + S_r`` and its label is the reduced representative. The coloring
    is a spec iff those labels are distinct; the canonical coloring gives edge
    ``uv`` the class of ``phi(uv)``.
    """
    _check_coloring(g, phi)
    if not 0 <= root < g.n:
        raise IndexError(f"root {root} out of range")
    atoms = phi.atomic()
    tree = _tree_sums(g, atoms, root)
    basis = Gf2Basis.of(tree[u] ^ tree[v] ^ atoms[eid] for eid, (u, v) in enumerate(g.edges))
    labels = tuple(basis.reduce(x) for x in tree)

    owner: dict[Vector, int] = {}
    for v, x in enumerate(labels):
        if x in owner:
            return CanonicalizationResult(labels, basis, None, None, (owner[x], v))
        owner[x] = v

    star = canonical_from_labeling(g, labels)
    pi: dict[int, int] = {}
    for c, c_star in zip(phi.colors, star.colors):
        pi.setdefault(c, c_star)
    return CanonicalizationResult(labels, basis, star, pi, None)


def is_spec(g: Graph, phi: EdgeColoring, root: int = 0) -> bool:
    return canonicalize(g, phi, root).is_spec


def cycle_space_image_dim(g: Graph, phi: EdgeColoring) -> int:
    """Dimension of the span of the cycle images under ``phi``."""
    return canonicalize(g, phi, 0).cycle_space_dim


def is_refinement(phi: EdgeColoring, phi_star: EdgeColoring) -> bool:
    """True iff each color class of ``phi`` lies inside one class of ``phi_star``."""
    if len(phi) != len(phi_star):
        raise ValueError("colorings are on different edge sets")
    image: dict[int, int] = {}
    for c, c_star in zip(phi.colors, phi_star.colors):
        if image.setdefault(c, c_star) != c_star:
            return False
    return True


# -- parity paths ---------------------------------------------------------------


def find_parity_path(
    g: Graph, phi: EdgeColoring, *, max_vertices: int = PEC_VERTEX_CAP, node_budget: int | None = None
) -> list[int] | None:
    """A simple path on which every color appears an even number of times, or None.

    Plain backtracking over simple paths; no memoization (simple-path
    constraints make state caching unsound). Raises
    :class:`BudgetExceeded` when the node budget runs out.
    """
    _check_coloring(g, phi)
    if g.n > max_vertices:
        raise SizeGuardError(f"{g.n} vertices exceeds the path-enumeration cap {max_vertices}")
    palette = {c: i for i, c in enumerate(phi.palette)}
    bit = [1 << palette[c] for c in phi.colors]
    adj = [[(y, bit[eid]) for y, eid in a] for a in g.adjacency]
    on_path = [False] * g.n
    stack: list[int] = []
    nodes = 0

    def extend(x: int, par: int) -> bool:
        nonlocal nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise BudgetExceeded(f"parity-path search exceeded {node_budget} nodes")
        for y, b in adj[x]:
            if on_path[y]:
                continue
            p = par ^ b
            stack.append(y)
            if p == 0:
                return True
            on_path[y] = True
            if extend(y, p):
                return True
            on_path[y] = False
            stack.pop()
        return False

    for s in range(g.n):
        on_path[s] = True
        stack[:] = [s]
        if extend(s, 0):
            return list(stack)
        on_path[s] = False
    return None


def is_pec(g: Graph, phi: EdgeColoring, *, max_vertices: int = PEC_VERTEX_CAP, node_budget: int | None = None) -> bool:
    return find_parity_path(g, phi, max_vertices=max_vertices, node_budget=node_budget) is None


# -- constructions ------------------------------------------------------------------


def lift_kn_to_knn(n: int, phi: EdgeColoring) -> EdgeColoring:
    """Spec of ``K_{n,n}`` from a spec of ``K_n`` using one extra color.

    ``x_i y_j`` and ``x_j y_i`` take the color of ``v_i v_j``; every ``x_i y_i``
    takes a fresh color. ``K_{n,n}`` is laid out as :func:`complete_bipartite`.
    """
    kn = complete(n)
    if not is_spec(kn, phi):
        raise NotASpecError("input is not a spec of K_n")
    knn = complete_bipartite(n, n)
    fresh = max(phi.colors, default=0) + 1
    colors = []
    for x, y in knn.edges:
        i, j = x, y - n
        colors.append(fresh if i == j else phi.colors[kn.edge_id(i, j)])
    return EdgeColoring(tuple(colors))


def compose_cut_edge(
    g1: Graph, phi1: EdgeColoring, g2: Graph, phi2: EdgeColoring, u: int, v: int
) -> tuple[Graph, EdgeColoring]:
    """Join two colored graphs by a cut-edge carrying a fresh color.

    Both sides keep their color ids, so the palette is their union plus one.
    If both sides are pecs the result is a pec: a path through the cut-edge
    sees its color once.
    """
    _check_coloring(g1, phi1)
    _check_coloring(g2, phi2)
    g = cut_edge_join(g1, g2, u, v)
    fresh = max(phi1.colors + phi2.colors, default=0) + 1
    return g, EdgeColoring(phi1.colors + phi2.colors + (fresh,))


__all__ = [
    "CanonicalizationResult",
    "EdgeColoring",
    "Labeling",
    "WalkWitness",
    "canonical_from_labeling",
    "canonicalize",
    "check_injective",
    "color_vectors",
    "compose_cut_edge",
    "cycle_space_image_dim",
    "find_parity_path",
    "is_pec",
    "is_proper",
    "is_refinement",
    "is_spec",
    "lift_kn_to_knn",
    "parity_walk_oracle",
    "parse_colors",
]
