"""Strictly-increasing-path queries compiled into plain reachability.

Pattern matching over property graphs can check orderings on node values
along a path, but not on edge values.  This library closes that gap
constructively: it replicates each node once per distinct incoming edge
value (plus a bottom level for path starts) and wires a leveled edge
``(u, l) -> (v, j)`` exactly when the base graph has ``u -> v`` with value
``j > l``.  Whether a strictly increasing path connects two nodes then
becomes ordinary reachability on the compiled graph -- answerable by BFS
here, or by a plain variable-length pattern in any graph query language.

The package also ships the machinery to check and measure that claim: an
exhaustive oracle, a trail-enumeration baseline mirroring declarative
pattern-then-filter evaluation, a seeded benchmark harness, and Cypher
export for replication against a live Neo4j.
"""

from .baseline import (
    FOUND,
    NOT_FOUND,
    TIMEOUT,
    BaselineResult,
    OracleResult,
    baseline_trail_search,
    oracle_exists,
)
from .bench import (
    BenchConfig,
    BenchRow,
    BenchTable,
    compute_speedup,
    emit_report,
    generate_graph,
    run_benchmark,
)
from .cypher import CypherBundle, export_bundle, write_bundle
from .graph import (
    Diagnostic,
    EdgeRecord,
    GraphFormatError,
    PropertyGraph,
    UnknownNodeError,
    format_value,
    graph_from_edges,
    parse_graph,
    serialize_graph,
    validate,
)
from .leveled import (
    Level,
    LeveledEdge,
    LeveledGraph,
    LeveledInvariantError,
    LeveledNode,
    SizeStats,
    build_leveled,
    compute_levels,
    serialize_leveled,
    size_report,
)
from .reach import (
    BasePath,
    LeveledIndex,
    QueryAnswer,
    increasing_path_exists,
    increasing_path_witness,
)

__version__ = "0.1.0"

__all__ = [
    "BasePath",
    "BaselineResult",
    "BenchConfig",
    "BenchRow",
    "BenchTable",
    "CypherBundle",
    "Diagnostic",
    "EdgeRecord",
    "FOUND",
    "GraphFormatError",
    "Level",
    "LeveledEdge",
    "LeveledGraph",
    "LeveledIndex",
    "LeveledInvariantError",
    "LeveledNode",
    "NOT_FOUND",
    "OracleResult",
    "PropertyGraph",
    "QueryAnswer",
    "SizeStats",
    "TIMEOUT",
    "UnknownNodeError",
    "baseline_trail_search",
    "build_leveled",
    "compute_levels",
    "compute_speedup",
    "emit_report",
    "export_bundle",
    "format_value",
    "generate_graph",
    "graph_from_edges",
    "increasing_path_exists",
    "increasing_path_witness",
    "oracle_exists",
    "parse_graph",
    "run_benchmark",
    "serialize_graph",
    "serialize_leveled",
    "size_report",
    "validate",
    "write_bundle",
]
