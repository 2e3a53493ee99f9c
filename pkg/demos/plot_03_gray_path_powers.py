"""
Gray-code colorings of path powers
==================================

Vertex i of P_n^ell gets the reflected Gray word i ^ (i >> 1). The induced
coloring is always a spec; the census counts colors by top coordinate.
"""

from parityspec import is_spec
from parityspec.bounds import ceil_lg, pathpower_bounds
from parityspec.gray import color_census, gray_coloring, ruler_sequence, trim_sweep

print("ruler sequence:", ruler_sequence(15))

n = 256
print(f"n = {n}")
print("ell  colors  lower  upper  census")
for ell in range(1, ceil_lg(n) + 1):
    gc = gray_coloring(n, ell)
    assert is_spec(gc.graph, gc.coloring)
    lower, upper = pathpower_bounds(n, ell)
    census = color_census(n, ell)
    print(f"{ell:3d}  {gc.coloring.num_colors:6d}  {lower:5d}  {upper:5d}  {list(census.values())}")

checked, failures = trim_sweep(256)
print(f"trim identity: {checked} triples checked, {len(failures)} failures")
