"""Exact solvers and bound auditing for signed domination in graphs."""

from .audit import (
    BoundReport,
    BoundViolation,
    CorpusSpec,
    audit_corpus,
    audit_graph,
    hunt,
    iter_corpus,
)
from .bounds import (
    BOUND_ORDER,
    Bound,
    lb_degree_leaves,
    lb_degree_parity,
    lb_max_degree_domination,
    parity_tighten,
    tree_lower_bounds,
    ub_packing_min_degree,
)
from .codecs import GraphFormatError, detect_format, parse_graph, serialize_graph
from .constructions import (
    augment_packing,
    greedy_limited_packing,
    sdf_from_limited_packing,
    shrink_tuple_dominating,
)
from .generate import (
    complete_graph,
    cycle_graph,
    derive_seed,
    enumerate_labeled_trees,
    generate,
    path_graph,
    prufer_to_edges,
    random_connected,
    random_tree,
    spider_graph,
    star_graph,
)
from .graphs import Graph, StructuralProfile, structural_profile
from .solvers import (
    PartitionStats,
    SignedFunction,
    SizeCapError,
    VertexSet,
    domination_number,
    limited_packing_number,
    packing_number,
    partition_stats,
    signed_domination,
    tuple_domination_number,
    verify_sdf,
    vertex_set_violations,
)

__all__ = [
    "BOUND_ORDER",
    "Bound",
    "BoundReport",
    "BoundViolation",
    "CorpusSpec",
    "Graph",
    "GraphFormatError",
    "PartitionStats",
    "SignedFunction",
    "SizeCapError",
    "StructuralProfile",
    "VertexSet",
    "audit_corpus",
    "audit_graph",
    "augment_packing",
    "complete_graph",
    "cycle_graph",
    "derive_seed",
    "detect_format",
    "domination_number",
    "enumerate_labeled_trees",
    "generate",
    "greedy_limited_packing",
    "hunt",
    "iter_corpus",
    "lb_degree_leaves",
    "lb_degree_parity",
    "lb_max_degree_domination",
    "limited_packing_number",
    "packing_number",
    "parity_tighten",
    "parse_graph",
    "partition_stats",
    "path_graph",
    "prufer_to_edges",
    "random_connected",
    "random_tree",
    "sdf_from_limited_packing",
    "serialize_graph",
    "shrink_tuple_dominating",
    "signed_domination",
    "spider_graph",
    "star_graph",
    "structural_profile",
    "tree_lower_bounds",
    "tuple_domination_number",
    "ub_packing_min_degree",
    "verify_sdf",
    "vertex_set_violations",
]
