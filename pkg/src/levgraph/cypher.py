"""Cypher text generation for replicating the comparison on a live Neo4j.

Emits four deterministic, golden-file-testable artifacts: DDL that loads
the base graph as ``(:Account {id})`` nodes with ``[:TRANSFER {amount}]``
edges, DDL that loads the compiled graph as ``(:LNode {base, lvl})`` nodes
with ``[:LSTEP {provenance}]`` edges, and the two query texts.  Levels are
stored as strings ("BOT" or the decimal value) because one property must
hold both the bottom marker and numbers; the leveled query only ever
compares against "BOT" -- the ordering itself was already compiled into
the edge structure, which is the whole point.

The query templates live here as plain constants so replication users can
audit or edit them; both are parameterized only by ``$src`` and ``$dst``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .graph import PropertyGraph, format_value
from .leveled import LeveledGraph

BASELINE_QUERY = """\
MATCH path = (s:Account {id: $src})-[:TRANSFER*1..]->(t:Account {id: $dst})
WITH [r IN relationships(path) | r.amount] AS amounts
WHERE all(i IN range(1, size(amounts) - 1) WHERE amounts[i - 1] < amounts[i])
RETURN true AS result
LIMIT 1
"""

LEVELED_QUERY = """\
MATCH (s:LNode {base: $src, lvl: "BOT"})-[:LSTEP*1..]->(t:LNode {base: $dst})
WHERE t.lvl <> "BOT"
RETURN true AS result
LIMIT 1
"""

BUNDLE_FILES = {
    "base_ddl": "base.cypher",
    "leveled_ddl": "leveled.cypher",
    "baseline_query": "baseline_query.cypher",
    "leveled_query": "leveled_query.cypher",
}


@dataclass(frozen=True)
class CypherBundle:
    base_ddl: str
    leveled_ddl: str
    baseline_query: str
    leveled_query: str


def _quote(s: str) -> str:
    # JSON string escaping is valid Cypher string escaping.
    return json.dumps(s)


def _amount(v: float) -> str:
    return format_value(v)


def export_bundle(g: PropertyGraph, lev: LeveledGraph) -> CypherBundle:
    """Render the four Cypher artifacts for a graph and its compiled form.

    Raises ValueError when ``lev`` does not match ``g`` (sizes or edge
    provenance disagree), which would silently corrupt a replication run.
    """
    _check_provenance(g, lev)

    base_lines = [f"// base graph: {len(g.nodes)} nodes, {len(g.edges)} edges"]
    for v in g.nodes:
        base_lines.append(f"CREATE (:Account {{id: {_quote(v)}}});")
    for e in g.edges:
        base_lines.append(
            f"MATCH (a:Account {{id: {_quote(e.src)}}}) "
            f"MATCH (b:Account {{id: {_quote(e.tgt)}}}) "
            f"CREATE (a)-[:TRANSFER {{amount: {_amount(e.val)}}}]->(b);"
        )

    lev_lines = [f"// leveled graph: {len(lev.nodes)} nodes, {len(lev.edges)} edges"]
    for n in lev.nodes:
        lev_lines.append(
            f"CREATE (:LNode {{base: {_quote(n.base)}, lvl: {_quote(str(n.level))}}});"
        )
    for e in lev.edges:
        lev_lines.append(
            f"MATCH (a:LNode {{base: {_quote(e.src.base)}, lvl: {_quote(str(e.src.level))}}}) "
            f"MATCH (b:LNode {{base: {_quote(e.tgt.base)}, lvl: {_quote(str(e.tgt.level))}}}) "
            f"CREATE (a)-[:LSTEP {{provenance: {_quote(e.provenance)}}}]->(b);"
        )

    return CypherBundle(
        base_ddl="".join(line + "\n" for line in base_lines),
        leveled_ddl="".join(line + "\n" for line in lev_lines),
        baseline_query=BASELINE_QUERY,
        leveled_query=LEVELED_QUERY,
    )


def _check_provenance(g: PropertyGraph, lev: LeveledGraph) -> None:
    if lev.source_sizes != (len(g.nodes), len(g.edges)):
        raise ValueError(
            f"leveled graph records source sizes {lev.source_sizes}, "
            f"but the graph has {(len(g.nodes), len(g.edges))}"
        )
    by_id = g.edges_by_id
    for e in lev.edges:
        base = by_id.get(e.provenance)
        if (
            base is None
            or base.src != e.src.base
            or base.tgt != e.tgt.base
            or base.val != e.tgt.level.value
        ):
            raise ValueError(f"leveled edge provenance {e.provenance!r} does not match the graph")


def write_bundle(bundle: CypherBundle, out_dir) -> list:
    """Write the four bundle files; returns their paths in a fixed order."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for attr, name in BUNDLE_FILES.items():
        path = out / name
        path.write_text(getattr(bundle, attr))
        paths.append(path)
    return paths
