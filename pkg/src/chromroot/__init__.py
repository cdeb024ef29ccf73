"""Exact chromatic polynomials, two-terminal series-parallel composition, and
the Beraha-number chromatic-root classification."""

from .beraha import (
    beraha_minimal_polynomial,
    beraha_profile,
    classify_beraha,
    forbidden_conjugate_count,
    golden_identity_check,
    is_chromatic_root_of,
)
from .graph import Graph, TerminalPair, chromatic_polynomial, parse_edge_list
from .poly import GoldenInt, IntPoly, falling_factorial
from .search import enumerate_gadgets, run_search
from .twoterminal import (
    PartitionedPoly,
    eval_construction,
    parallel_compose,
    parse_construction,
    partitioned_from_graph,
    realize_graph,
    series_compose,
    total_chromatic,
)

__version__ = "0.1.0"
