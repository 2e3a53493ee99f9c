"""
Small sumsets in F_2^d
======================

Minimum |A + B| over s-subsets and t-subsets, and the spec of K_{s,t} it yields.
"""

from parityspec import hopf_stiefel, is_spec
from parityspec.constructions import kst_spec
from parityspec.gf2 import min_sumset

for s, t in [(2, 3), (3, 3), (3, 4), (4, 4)]:
    res = min_sumset(s, t, 4)
    print(f"s={s} t={t}: min |A+B| = {res.size} (Hopf-Stiefel {hopf_stiefel(s, t)}); A={sorted(res.a)} B={sorted(res.b)}")
    g, phi = kst_spec(s, t)
    print(f"    K_{s},{t} spec with {phi.num_colors} colors, verified: {is_spec(g, phi)}")
