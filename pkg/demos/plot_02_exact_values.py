"""
Exact values on small graphs
============================

The solvers raise the color count until a feasible coloring exists.
"""

from parityspec import exact_p, exact_phat, hopf_stiefel
from parityspec.bounds import ceil_lg
from parityspec.graph import complete, complete_bipartite, cycle, path

print("complete graphs")
for n in range(2, 7):
    print(f"  K_{n}: phat = {exact_phat(complete(n)).value}, 2^ceil(lg n) - 1 = {(1 << ceil_lg(n)) - 1}")

print("complete bipartite graphs against the Hopf-Stiefel function")
for s in range(1, 5):
    row = [f"{exact_phat(complete_bipartite(s, t)).value}/{hopf_stiefel(s, t)}" for t in range(s, 5)]
    print(f"  s={s}:", "  ".join(row))

# Paths need ceil(lg n) colors under both notions.
print("paths:", [exact_p(path(n)).value for n in range(2, 17)])

# Odd cycles need one color more than ceil(lg n), even for the weaker notion.
for n in range(3, 9):
    g = cycle(n)
    print(f"  C_{n}: p = {exact_p(g).value}, phat = {exact_phat(g).value}, ceil(lg n) = {ceil_lg(n)}")
