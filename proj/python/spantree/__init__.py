"""Exact spanning tree enumerators for complete, product, hypercube and threshold graphs."""

from ._spantree import (
    CapExceeded,
    Error,
    NotDivisible,
    NotThresholdSequence,
    ParseError,
    Polynomial,
    Graph,
    cayley_prufer_rhs,
    conjecture_scan,
    count,
    cube_rhs,
    directions_rhs,
    div_exact,
    enumerate,
    is_nonneg,
    merris_count,
    parse_spec,
    threshold_rhs,
    tree_enumerator,
    verify,
)

__all__ = [
    "CapExceeded",
    "Error",
    "Graph",
    "NotDivisible",
    "NotThresholdSequence",
    "ParseError",
    "Polynomial",
    "cayley_prufer_rhs",
    "conjecture_scan",
    "count",
    "cube_rhs",
    "directions_rhs",
    "div_exact",
    "enumerate",
    "is_nonneg",
    "merris_count",
    "parse_spec",
    "threshold_rhs",
    "tree_enumerator",
    "verify",
]
