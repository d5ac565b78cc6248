"""Increasing-path queries answered as reachability over a leveled graph.

A strictly increasing path from ``s`` to ``t`` exists in the base graph iff
some non-bottom copy of ``t`` is reachable from ``(s, bottom)`` in the
leveled graph.  Breadth-first search gives the answer, and walking the BFS
parent pointers back and replacing each leveled edge with its provenance
base edge yields a concrete witness path with the minimum possible number
of edges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import UnknownNodeError
from .leveled import Level, LeveledGraph, LeveledNode


@dataclass(frozen=True)
class BasePath:
    """A concrete strictly increasing path in the base graph.

    ``edges`` lists base edge ids in order; ``nodes`` is the visited node
    sequence (one longer) and ``values`` the strictly ascending value
    sequence (same length as ``edges``).
    """

    edges: tuple[str, ...]
    nodes: tuple[str, ...]
    values: tuple[float, ...]


@dataclass(frozen=True)
class QueryAnswer:
    exists: bool
    witness: BasePath | None = None


class LeveledIndex:
    """Adjacency index over a leveled graph, reusable across queries.

    Building the index counts as part of compile/build time; individual
    queries only traverse it.  Queries are read-only and may run
    concurrently; each owns its visited-set scratch space.
    """

    def __init__(self, lev: LeveledGraph) -> None:
        adj: dict[LeveledNode, list[tuple[LeveledNode, str]]] = {
            n: [] for n in lev.nodes
        }
        for e in lev.edges:
            adj[e.src].append((e.tgt, e.provenance))
        # Deterministic traversal: neighbours ordered by (base id, level).
        for neighbours in adj.values():
            neighbours.sort(key=lambda pair: (pair[0].base, pair[0].level))
        self._adj = adj
        self._bases = lev.base_nodes

    def _check(self, s: str, t: str) -> LeveledNode:
        if s not in self._bases:
            raise UnknownNodeError(s)
        if t not in self._bases:
            raise UnknownNodeError(t)
        return LeveledNode(s, Level.BOTTOM)

    def exists(self, s: str, t: str) -> bool:
        """True iff a non-empty strictly increasing path runs from s to t."""
        start = self._check(s, t)
        seen = {start}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            for nxt, _ in self._adj[node]:
                if nxt in seen:
                    continue
                # Leveled edges never target bottom, so reaching t here
                # always certifies a path of at least one edge.
                if nxt.base == t:
                    return True
                seen.add(nxt)
                queue.append(nxt)
        return False

    def witness(self, s: str, t: str) -> QueryAnswer:
        """Existence plus a minimum-edge-count witness path when one exists."""
        start = self._check(s, t)
        parent: dict[LeveledNode, tuple[LeveledNode, str]] = {}
        seen = {start}
        queue = deque([start])
        goal: LeveledNode | None = None
        while queue and goal is None:
            node = queue.popleft()
            for nxt, provenance in self._adj[node]:
                if nxt in seen:
                    continue
                seen.add(nxt)
                parent[nxt] = (node, provenance)
                if nxt.base == t:
                    goal = nxt
                    break
                queue.append(nxt)
        if goal is None:
            return QueryAnswer(exists=False)

        edges: list[str] = []
        nodes: list[str] = [goal.base]
        values: list[float] = []
        cur = goal
        while cur != start:
            prev, provenance = parent[cur]
            edges.append(provenance)
            assert cur.level.value is not None
            values.append(cur.level.value)
            nodes.append(prev.base)
            cur = prev
        edges.reverse()
        nodes.reverse()
        values.reverse()
        return QueryAnswer(
            exists=True,
            witness=BasePath(tuple(edges), tuple(nodes), tuple(values)),
        )


def increasing_path_exists(lev: LeveledGraph, s: str, t: str) -> bool:
    """One-shot existence query; builds a fresh index each call.

    Use :class:`LeveledIndex` directly when running many queries against
    the same leveled graph.
    """
    return LeveledIndex(lev).exists(s, t)


def increasing_path_witness(lev: LeveledGraph, s: str, t: str) -> QueryAnswer:
    """One-shot existence + witness query; builds a fresh index each call."""
    return LeveledIndex(lev).witness(s, t)
