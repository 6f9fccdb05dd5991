"""Level-disjoint partitions of graphs and simultaneous broadcasting."""

from .blocks import BlockDecomposition, block_decomposition
from .broadcast import (
    BroadcastTrace,
    TraceViolation,
    Transmission,
    format_trace,
    ldps_from_trace,
    parse_trace,
    schedule,
    validate,
)
from .construct import (
    ConstructionFailure,
    compose_components,
    construct_two_ldps,
    extend,
    extract_certificate,
    merge_adjust,
    two_ldps_chordal,
    two_ldps_odd_cycle,
)
from .cycles import (
    ChordalCertificate,
    CyclePath,
    cycles_through,
    find_separating_chordal,
    odd_cycle_through,
    validate_certificate,
)
from .formats import LdpDocument, dot_graph, dot_ldp_set, dot_partition, read_ldp_json, write_ldp_json
from .graphs import (
    DisconnectedError,
    DuplicateEdgeError,
    Graph,
    GraphParseError,
    LoopEdgeError,
    MalformedLineError,
    format_edge_list,
    generate,
    metrics,
    parse_graph,
)
from .partitions import (
    Bounds,
    HeightFeasibility,
    LdpSet,
    LevelPartition,
    OptimalityReport,
    Violation,
    bfs_partition,
    bounds,
    is_optimal,
    optimal_height_feasible,
    r_of,
    verify_ldp_set,
    verify_partition,
)
from .search import brute_force

__all__ = [
    "BlockDecomposition",
    "Bounds",
    "BroadcastTrace",
    "ChordalCertificate",
    "ConstructionFailure",
    "CyclePath",
    "DisconnectedError",
    "DuplicateEdgeError",
    "Graph",
    "GraphParseError",
    "HeightFeasibility",
    "LdpDocument",
    "LdpSet",
    "LevelPartition",
    "LoopEdgeError",
    "MalformedLineError",
    "OptimalityReport",
    "TraceViolation",
    "Transmission",
    "Violation",
    "bfs_partition",
    "block_decomposition",
    "bounds",
    "brute_force",
    "compose_components",
    "construct_two_ldps",
    "cycles_through",
    "dot_graph",
    "dot_ldp_set",
    "dot_partition",
    "extend",
    "extract_certificate",
    "find_separating_chordal",
    "format_edge_list",
    "format_trace",
    "generate",
    "is_optimal",
    "ldps_from_trace",
    "merge_adjust",
    "metrics",
    "odd_cycle_through",
    "optimal_height_feasible",
    "parse_graph",
    "parse_trace",
    "r_of",
    "read_ldp_json",
    "schedule",
    "two_ldps_chordal",
    "two_ldps_odd_cycle",
    "validate",
    "validate_certificate",
    "verify_ldp_set",
    "verify_partition",
    "write_ldp_json",
]
