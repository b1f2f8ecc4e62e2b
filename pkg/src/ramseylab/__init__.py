"""Exact combinatorics of loose paths in k-uniform hypergraphs.

Core objects: immutable hypergraphs and total edge colorings; pattern
detection for loose paths and stars; the star+clique lower-bound coloring;
exact Ramsey/Turan decision engines with CNF export; proof machinery
(peeling, pruning, tripartition, derandomized splitting) and bit-exact
inequality certificates.
"""

from .errors import InstanceTooLargeError, ParseError
from .hypergraphs import (
    Hypergraph,
    complete_hypergraph,
    parse_hypergraph,
    serialize_hypergraph,
)
from .patterns import (
    Coloring,
    LoosePathWitness,
    find_loose_path,
    find_mono_loose_path,
    is_full_star,
    is_star,
    parse_coloring,
    serialize_coloring,
)
from .constructions import (
    BoundsReport,
    full_star,
    pair_cover,
    ramsey_bounds,
    star_clique_coloring,
)
from .machinery import (
    BipartiteGraph,
    SplitAssignment,
    StabilityReport,
    Tripartition,
    derandomized_split,
    greedy_tripartition,
    peel_min_degree,
    prune_bipartite,
    stability_deficiency,
)
from .exact import (
    Interval,
    integer_nth_root,
    link_support_lower_bound,
    nth_root_interval,
    star_deficiency_bound,
)
from .inequalities import IneqRecord, IneqReport, verify_constant_inequalities
from .search import (
    PATTERN_LOOSE_PATH_2,
    PATTERN_LOOSE_PATH_3,
    STATUS_EXACT,
    STATUS_LOWER_BOUND,
    VERDICT_FAILS,
    VERDICT_HOLDS,
    VERDICT_UNKNOWN,
    CnfInstance,
    SearchOutcome,
    SearchStats,
    TuranResult,
    cnf_satisfiable,
    decide_ramsey,
    enumerate_loose_paths,
    exhaustive_decide,
    export_cnf,
    turan_max_edges,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph",
    "BoundsReport",
    "CnfInstance",
    "Coloring",
    "Hypergraph",
    "IneqRecord",
    "IneqReport",
    "InstanceTooLargeError",
    "Interval",
    "LoosePathWitness",
    "ParseError",
    "PATTERN_LOOSE_PATH_2",
    "PATTERN_LOOSE_PATH_3",
    "STATUS_EXACT",
    "STATUS_LOWER_BOUND",
    "SearchOutcome",
    "SearchStats",
    "SplitAssignment",
    "StabilityReport",
    "Tripartition",
    "TuranResult",
    "VERDICT_FAILS",
    "VERDICT_HOLDS",
    "VERDICT_UNKNOWN",
    "cnf_satisfiable",
    "complete_hypergraph",
    "decide_ramsey",
    "derandomized_split",
    "enumerate_loose_paths",
    "exhaustive_decide",
    "export_cnf",
    "find_loose_path",
    "find_mono_loose_path",
    "full_star",
    "greedy_tripartition",
    "integer_nth_root",
    "is_full_star",
    "is_star",
    "link_support_lower_bound",
    "nth_root_interval",
    "pair_cover",
    "parse_coloring",
    "parse_hypergraph",
    "peel_min_degree",
    "prune_bipartite",
    "ramsey_bounds",
    "serialize_coloring",
    "serialize_hypergraph",
    "stability_deficiency",
    "star_clique_coloring",
    "star_deficiency_bound",
    "turan_max_edges",
    "verify_constant_inequalities",
]
