"""Strong parity edge-colorings: verification, canonicalization, exact search and bounds."""

from . import bounds, coloring, constructions, gf2, graph, gray, solver
from .bounds import ceil_lg, hopf_stiefel, pathpower_bounds, saturating_bound
from .coloring import (
    EdgeColoring,
    canonical_from_labeling,
    canonicalize,
    is_pec,
    is_spec,
    parity_walk_oracle,
)
from .errors import (
    BudgetExceeded,
    DisconnectedGraphError,
    HypothesisError,
    NotASpecError,
    ParitySpecError,
    SizeGuardError,
)
from .graph import Graph
from .solver import exact_p, exact_phat, hypercube_embed

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "DisconnectedGraphError",
    "EdgeColoring",
    "Graph",
    "HypothesisError",
    "NotASpecError",
    "ParitySpecError",
    "SizeGuardError",
    "bounds",
    "canonical_from_labeling",
    "canonicalize",
    "ceil_lg",
    "coloring",
    "constructions",
    "exact_p",
    "exact_phat",
    "gf2",
    "graph",
    "gray",
    "hopf_stiefel",
    "hypercube_embed",
    "is_pec",
    "is_spec",
    "parity_walk_oracle",
    "pathpower_bounds",
    "saturating_bound",
    "solver",
]
