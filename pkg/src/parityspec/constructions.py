"""Explicit colorings for the bipartite families: K_{s,t}, the cut-edge graph, and G_k."""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import ceil_lg
from .coloring import EdgeColoring, canonical_from_labeling, compose_cut_edge
from .gf2 import Vector, min_sumset
from .graph import Graph, complete_bipartite, gk_graph, gk_sizes, bip_path_power, path, theorem52_graph
from .gray import gray_label


def kst_labeling(s: int, t: int, a: set[Vector], b: set[Vector], d: int) -> list[Vector]:
    """Label part X with ``A`` and part Y with ``B + e_{d+1}``.

    The extra coordinate keeps the labeling injective; every color then has
    it set, so the color set is ``A + B`` shifted by ``e_{d+1}``.
    """
    if len(a) != s or len(b) != t:
        raise ValueError("set sizes do not match the parts")
    flag = 1 << d
    return sorted(a) + [y ^ flag for y in sorted(b)]


def kst_spec(s: int, t: int, d: int | None = None) -> tuple[Graph, EdgeColoring]:
    """Spec of ``K_{s,t}`` with ``min |A + B|`` colors, from a sumset search in ``F_2^d``."""
    if d is None:
        d = ceil_lg(max(s, t))
    res = min_sumset(s, t, d)
    g = complete_bipartite(s, t)
    return g, canonical_from_labeling(g, kst_labeling(s, t, set(res.a), set(res.b), d))


def gray_path_spec(n: int) -> tuple[Graph, EdgeColoring]:
    """The ``ceil(lg n)``-color Gray spec of ``P_n``."""
    g = path(n)
    return g, canonical_from_labeling(g, [gray_label(i) for i in range(n)])


@dataclass(frozen=True)
class ComposedPec:
    graph: Graph
    coloring: EdgeColoring
    parts: tuple[tuple[Graph, EdgeColoring], ...]

    @property
    def num_colors(self) -> int:
        return self.coloring.num_colors


def theorem52_pec(n: int) -> ComposedPec:
    """``(n + 1)``-color pec of the ``K_{n,n}`` + path graph.

    ``K_{n,n}`` gets an ``n o n``-color spec from a sumset witness, the path
    gets its Gray spec, and the cut-edge gets a fresh color. With ``n`` a
    power of two both sides use ``n`` colors.
    """
    knn, phi_k = kst_spec(n, n)
    p, phi_p = gray_path_spec(1 << n)
    g, phi = compose_cut_edge(knn, phi_k, p, phi_p, 0, 0)
    expected = theorem52_graph(n).graph
    if g != expected:
        raise AssertionError("composed graph differs from theorem52_graph")
    return ComposedPec(g, phi, ((knn, phi_k), (p, phi_p)))


def gk_component_spec(length: int, ell: int) -> tuple[Graph, EdgeColoring]:
    """Spec of ``bip_path_power(length, ell)`` restricted from the Gray spec of ``P_length^(2 ell)``."""
    z = bip_path_power(length, ell)
    return z, canonical_from_labeling(z, [gray_label(i) for i in range(length)])


def gk_pec(k: int) -> ComposedPec:
    """Pec of ``G_k``: component specs share colors, each hub edge gets its own fresh color."""
    gk = gk_graph(k)
    parts = {ell: gk_component_spec(size, ell) for ell, size in gk_sizes(k).items()}
    shared = max(phi.num_colors for _, phi in parts.values())
    colors = [0] * gk.graph.m
    hub_color = shared
    for ell, span in gk.component_spans.items():
        z, phi = parts[ell]
        # component colors are normalized ids 1..|phi|, reused across components
        for eid, (u, v) in enumerate(z.edges):
            colors[gk.graph.edge_id(u + span.start, v + span.start)] = phi.colors[eid]
        hub_color += 1
        colors[gk.graph.edge_id(0, span.start)] = hub_color
    return ComposedPec(gk.graph, EdgeColoring(tuple(colors)), tuple(parts[ell] for ell in sorted(parts)))


__all__ = [
    "ComposedPec",
    "gk_component_spec",
    "gk_pec",
    "gray_path_spec",
    "kst_labeling",
    "kst_spec",
    "theorem52_pec",
]
