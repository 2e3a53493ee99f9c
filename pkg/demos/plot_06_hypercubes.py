"""
Hypercube embeddings
====================

A graph embeds in Q_k, k = ceil(lg n), exactly when phat equals k.
"""

import networkx as nx

from parityspec import Graph, hypercube_embed
from parityspec.graph import complete, cycle, star

for name, g in [("C_6", cycle(6)), ("K_3", complete(3)), ("K_1,4", star(4))]:
    emb = hypercube_embed(g)
    shown = None if emb is None else {v: "".join(map(str, t)) for v, t in emb.items()}
    print(f"{name}: {shown}")

count = 0
for t in nx.nonisomorphic_trees(8):
    g = Graph(8, tuple(sorted(t.edges())))
    count += hypercube_embed(g) is not None
print(f"{count} of 23 trees on 8 vertices embed in Q_3")
