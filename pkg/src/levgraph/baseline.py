"""Reference evaluators that never touch the leveled compilation.

Two purposes: an exhaustive oracle used to cross-check the compiled
reachability answers, and a trail-enumeration baseline that mirrors how a
declarative variable-length pattern with an ordering filter actually
evaluates (bind every edge-distinct walk, then filter), including the
blow-up that entails on dense graphs.

Increasing paths may revisit nodes; neither evaluator assumes node
simplicity.  An edge can never repeat within one strictly increasing
sequence (its value is fixed), which is what bounds the oracle's recursion
depth by the number of distinct edge values.
"""

from __future__ import annotations

import math
import time
from bisect import bisect_right
from dataclasses import dataclass

from .graph import PropertyGraph, UnknownNodeError

FOUND = "found"
NOT_FOUND = "not-found"
TIMEOUT = "timeout"

# Cooperative deadline granularity: check the clock every this many
# expansions rather than per step.
_DEADLINE_STRIDE = 1024


@dataclass(frozen=True)
class OracleResult:
    """Outcome of the exhaustive search.

    ``min_witness_len`` is present iff a path exists; ``max_depth`` is the
    longest increasing sequence explored (bounded by the number of distinct
    edge values).
    """

    exists: bool
    paths_explored: int
    min_witness_len: int | None
    max_depth: int


@dataclass(frozen=True)
class BaselineResult:
    outcome: str  # found | not-found | timeout
    elapsed_ms: float
    trails_enumerated: int


def _require_nodes(g: PropertyGraph, s: str, t: str) -> None:
    if s not in g.node_set:
        raise UnknownNodeError(s)
    if t not in g.node_set:
        raise UnknownNodeError(t)


def oracle_exists(g: PropertyGraph, s: str, t: str) -> OracleResult:
    """Exhaustively enumerate every strictly increasing edge sequence from s.

    The first edge is unconstrained; each later edge must strictly exceed
    its predecessor's value.  A sequence counts as a hit when it ends at t
    (length >= 1, so s == t needs a genuine increasing cycle).  Enumeration
    is complete, so ``min_witness_len`` is exact.  Deliberately implemented
    straight over the base graph adjacency -- no level sets anywhere -- to
    stay independent of the construction it cross-checks.
    """
    _require_nodes(g, s, t)
    # Per-node out-edges sorted by value: the strictly-greater extensions
    # of a sequence form a suffix found by binary search.
    vals_by_node: dict[str, list[float]] = {}
    tgts_by_node: dict[str, list[str]] = {}
    for v in g.nodes:
        ordered = sorted(g.out_edges[v], key=lambda e: e.val)
        vals_by_node[v] = [e.val for e in ordered]
        tgts_by_node[v] = [e.tgt for e in ordered]

    explored = 0
    best: int | None = None
    max_depth = 0
    stack: list[tuple[str, float | None, int]] = [(s, None, 0)]
    while stack:
        node, last, depth = stack.pop()
        vals = vals_by_node[node]
        tgts = tgts_by_node[node]
        start = 0 if last is None else bisect_right(vals, last)
        for i in range(start, len(vals)):
            explored += 1
            nd = depth + 1
            if nd > max_depth:
                max_depth = nd
            if tgts[i] == t and (best is None or nd < best):
                best = nd
            stack.append((tgts[i], vals[i], nd))
    return OracleResult(best is not None, explored, best, max_depth)


def _is_increasing(seq: list) -> bool:
    return all(seq[i - 1] < seq[i] for i in range(1, len(seq)))


def baseline_trail_search(
    g: PropertyGraph,
    s: str,
    t: str,
    budget_ms: float,
    pruned: bool = False,
) -> BaselineResult:
    """Depth-first trail enumeration with the increasing check as a filter.

    Enumerates directed trails (edge-distinct walks, nodes may repeat) from
    s in edge-list order.  Whenever the current trail ends at t the whole
    value sequence is tested for strict increase -- a post-filter, matching
    pattern-then-filter query semantics; the search itself never prunes on
    values unless ``pruned`` is set, which instead extends only with
    strictly larger values.

    Returns ``found`` on the first satisfying trail, ``not-found`` after
    exhausting all trails, or ``timeout`` once the cooperative deadline
    (checked every few thousand expansions against a monotonic clock)
    expires.
    """
    _require_nodes(g, s, t)
    if not budget_ms > 0:
        raise ValueError(f"budget must be positive, got {budget_ms!r}")
    start_ns = time.perf_counter_ns()
    deadline_ns = math.inf if math.isinf(budget_ms) else start_ns + budget_ms * 1e6

    adj = g.out_edges
    used: set[str] = set()
    seq: list[float] = []
    # Each frame: iterator over out-edges, plus the edge that entered it.
    frames: list[tuple] = [(iter(adj[s]), None)]
    trails = 0
    steps = 0

    def elapsed() -> float:
        return (time.perf_counter_ns() - start_ns) / 1e6

    while frames:
        it, _ = frames[-1]
        edge = next(it, None)
        if edge is None:
            _, entered = frames.pop()
            if entered is not None:
                used.discard(entered.id)
                seq.pop()
            continue
        if edge.id in used:
            continue
        steps += 1
        if steps % _DEADLINE_STRIDE == 0 and time.perf_counter_ns() >= deadline_ns:
            return BaselineResult(TIMEOUT, elapsed(), trails)
        if pruned and seq and edge.val <= seq[-1]:
            continue
        used.add(edge.id)
        seq.append(edge.val)
        trails += 1
        if edge.tgt == t and _is_increasing(seq):
            return BaselineResult(FOUND, elapsed(), trails)
        frames.append((iter(adj[edge.tgt]), edge))
    return BaselineResult(NOT_FOUND, elapsed(), trails)
