"""
Checking an edge-coloring
=========================

A coloring of the 4-cycle, verified two ways and then canonicalized.
"""

from parityspec import canonicalize, is_spec, parity_walk_oracle
from parityspec.coloring import parse_colors
from parityspec.graph import cycle

# Edges of cycle(4) in id order are 01, 12, 23, 03.
g = cycle(4)
phi = parse_colors("1,2,1,3")

# The algebraic check and the brute-force walk search must agree.
print("is_spec:", is_spec(g, phi))
print("oracle finds a parity walk:", parity_walk_oracle(g, phi) is not None)

# Canonicalization labels each vertex by a coset representative. Colors 2
# and 3 always appear together around the cycle, so they merge.
res = canonicalize(g, phi, root=0)
print("labels:", [format(x, "b") for x in res.labeling])
print("dim of cycle image:", res.cycle_space_dim)
print("merge map:", res.refinement_map)
print("colors before/after:", phi.num_colors, res.coloring_star.num_colors)

# A coloring that is not a spec reports two vertices with the same label.
bad = parse_colors("1,2,2,1")
print("collision:", canonicalize(g, bad).collision)
