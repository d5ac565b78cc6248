"""Compile a property graph into its leveled form.

Each node ``v`` is replicated once per *level*: a distinguished bottom level
(for paths that start at ``v``) plus one level for every distinct value on
an edge entering ``v``.  A leveled edge ``(u, l) -> (v, j)`` exists exactly
when the base graph has an edge ``u -> v`` of value ``j`` with ``l < j``.
Levels therefore strictly increase along every leveled path, which turns
"is there a path whose edge values strictly increase" on the base graph
into plain reachability on the compiled graph.

Sizes stay polynomial: the leveled graph has at most ``|N| + |E|`` nodes
and ``|E|^2`` edges, and construction is a single pass to collect levels
plus one emission pass over the edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, total_ordering
from typing import ClassVar

from .graph import PropertyGraph, format_value

LevelMap = dict  # NodeId -> tuple[Level, ...], ascending, bottom first


class LeveledInvariantError(RuntimeError):
    """A size bound that must hold by construction was violated (a bug)."""


@total_ordering
@dataclass(frozen=True)
class Level:
    """Bottom or a finite edge value; bottom orders below every value."""

    value: float | None = None

    BOTTOM: ClassVar["Level"]

    @property
    def is_bottom(self) -> bool:
        return self.value is None

    def below(self, j: float) -> bool:
        """True iff this level is strictly less than the value ``j``."""
        return self.value is None or self.value < j

    def __lt__(self, other: "Level") -> bool:
        if not isinstance(other, Level):
            return NotImplemented
        if self.value is None:
            return other.value is not None
        if other.value is None:
            return False
        return self.value < other.value

    def __str__(self) -> str:
        return "BOT" if self.value is None else format_value(self.value)


Level.BOTTOM = Level(None)


@dataclass(frozen=True)
class LeveledNode:
    """A (base node, level) pair; the level is bottom or an incoming value."""

    base: str
    level: Level

    @property
    def id(self) -> str:
        return f"{self.base}@{self.level}"


@dataclass(frozen=True)
class LeveledEdge:
    """Edge between leveled nodes, tagged with the base edge it came from.

    The target level always equals the provenance edge's value and is never
    bottom; the source level is strictly below it.
    """

    src: LeveledNode
    tgt: LeveledNode
    provenance: str


@dataclass(frozen=True)
class LeveledGraph:
    """The compiled graph, canonically ordered for byte-stable output.

    Nodes are sorted by (base id, level) and edges by endpoint pair, so
    identical inputs always serialize identically.
    """

    nodes: tuple[LeveledNode, ...]
    edges: tuple[LeveledEdge, ...]
    source_sizes: tuple[int, int]

    @cached_property
    def base_nodes(self) -> frozenset:
        return frozenset(n.base for n in self.nodes)


@dataclass(frozen=True)
class SizeStats:
    """Leveled node/edge counts next to their guaranteed upper bounds."""

    n_prime: int
    e_prime: int
    bound_n: int
    bound_e: int


def compute_levels(g: PropertyGraph) -> LevelMap:
    """Map every node to its ascending level tuple (bottom always included).

    One pass over the edges; values of parallel incoming edges deduplicate.
    Requires a valid graph.
    """
    incoming: dict[str, set[float]] = {v: set() for v in g.nodes}
    for e in g.edges:
        incoming[e.tgt].add(e.val)
    return {
        v: (Level.BOTTOM, *(Level(x) for x in sorted(vals)))
        for v, vals in incoming.items()
    }


def build_leveled(g: PropertyGraph) -> LeveledGraph:
    """Construct the leveled graph of a valid property graph.

    Parallel base edges sharing (src, tgt, val) would induce the same
    leveled edge; those collapse to one edge whose provenance is the
    lexicographically smallest contributing base edge id, which keeps any
    projected witness valid while shrinking the output.
    """
    levels = compute_levels(g)
    nodes = tuple(
        LeveledNode(v, lvl) for v in sorted(g.nodes) for lvl in levels[v]
    )
    # Levels are ascending, so the l < j candidates form a prefix of L(src).
    best: dict[tuple[LeveledNode, LeveledNode], str] = {}
    for e in g.edges:
        tgt = LeveledNode(e.tgt, Level(e.val))
        for lvl in levels[e.src]:
            if not lvl.below(e.val):
                break
            key = (LeveledNode(e.src, lvl), tgt)
            cur = best.get(key)
            if cur is None or e.id < cur:
                best[key] = e.id
    edges = tuple(
        LeveledEdge(s, t, provenance)
        for (s, t), provenance in sorted(
            best.items(),
            key=lambda kv: (kv[0][0].base, kv[0][0].level, kv[0][1].base, kv[0][1].level),
        )
    )
    return LeveledGraph(nodes, edges, (len(g.nodes), len(g.edges)))


def size_report(lev: LeveledGraph) -> SizeStats:
    """Count leveled nodes/edges and check them against the size bounds.

    A bound violation cannot arise from any input, only from a construction
    bug, so it raises :class:`LeveledInvariantError` rather than passing
    silently.
    """
    n, m = lev.source_sizes
    stats = SizeStats(
        n_prime=len(lev.nodes),
        e_prime=len(lev.edges),
        bound_n=n + m,
        bound_e=m * m,
    )
    if stats.n_prime > stats.bound_n:
        raise LeveledInvariantError(
            f"leveled node count {stats.n_prime} exceeds bound {stats.bound_n}"
        )
    if stats.e_prime > stats.bound_e:
        raise LeveledInvariantError(
            f"leveled edge count {stats.e_prime} exceeds bound {stats.bound_e}"
        )
    return stats


def serialize_leveled(lev: LeveledGraph) -> str:
    """Render the leveled graph in the standard JSON graph format.

    Node ids become ``<base>@BOT`` or ``<base>@<val>`` (shortest round-trip
    decimal); every edge carries the originating base edge id under
    ``provenance`` and its target level as ``val``.
    """
    import json

    doc = {
        "nodes": [{"id": n.id} for n in lev.nodes],
        "edges": [
            {
                "id": f"le{i}",
                "src": e.src.id,
                "tgt": e.tgt.id,
                "label": "LSTEP",
                "val": _level_number(e.tgt.level),
                "provenance": e.provenance,
            }
            for i, e in enumerate(lev.edges)
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def _level_number(lvl: Level):
    v = lvl.value
    if v is None:  # never reached for edge targets; kept for completeness
        raise LeveledInvariantError("edge target level cannot be bottom")
    if v.is_integer() and abs(v) < 2**53:
        return int(v)
    return v
