"""Labeled property graph: data model, validation, and the JSON/TSV wire formats.

The graph is a finite directed multigraph.  Nodes are opaque string ids.
Every edge carries a string label (stored, never interpreted) and a finite
real ``val``; the increasing-path machinery downstream orders edges by these
values.  Parallel edges and self-loops are legal.  Ids are compared
bytewise; numeric-looking ids get no special treatment.

Two text formats are supported:

* JSON -- ``{"nodes": [{"id": "1"}, ...], "edges": [{"id": "e0", "src": "1",
  "tgt": "3", "label": "EDGE", "val": 100}, ...]}``.  The node list is
  mandatory; an edge whose endpoint is not declared is rejected.  A missing
  edge ``id`` is auto-assigned ``e<index>`` from its position in the list.
* TSV -- one edge per line, ``src<TAB>tgt<TAB>val[<TAB>label]``.  Lines
  starting with ``#`` are ignored.  There is no node section: endpoints
  become nodes in order of first appearance, and edge ids are auto-assigned
  ``e<line-number>`` (1-based physical line).  Consequently TSV cannot carry
  isolated nodes or custom edge ids; JSON can.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

DEFAULT_EDGE_LABEL = "EDGE"


class GraphFormatError(ValueError):
    """Input text does not describe a well-formed graph."""


class UnknownNodeError(LookupError):
    """A query named a node id that is not present in the graph."""

    def __init__(self, node_id: str) -> None:
        super().__init__(f"unknown node id: {node_id!r}")
        self.node_id = node_id


def format_value(v: float) -> str:
    """Shortest decimal rendering of a finite float that parses back exactly.

    Integral values drop the trailing ``.0`` so rendered ids like ``2@300``
    stay readable; anything else uses ``repr``, which is round-trip exact
    for 64-bit floats.
    """
    if v.is_integer() and abs(v) < 2**53:
        return str(int(v))
    return repr(v)


@dataclass(frozen=True)
class EdgeRecord:
    """One directed edge.  ``val`` must be finite for the graph to validate."""

    id: str
    src: str
    tgt: str
    val: float
    label: str = DEFAULT_EDGE_LABEL


@dataclass(frozen=True)
class Diagnostic:
    """One invariant violation found by :func:`validate`."""

    severity: str
    message: str
    offending_id: str


@dataclass(frozen=True)
class PropertyGraph:
    """Immutable graph value: node ids plus an ordered edge list.

    Construction performs no checking so that :func:`validate` can report
    violations as data; :func:`parse_graph` never produces an invalid graph.
    Instances are safe to share across threads.
    """

    nodes: tuple[str, ...]
    edges: tuple[EdgeRecord, ...]

    @cached_property
    def node_set(self) -> frozenset:
        return frozenset(self.nodes)

    @cached_property
    def edges_by_id(self) -> dict:
        return {e.id: e for e in self.edges}

    @cached_property
    def out_edges(self) -> dict:
        """Adjacency in edge-list order; every declared node has an entry."""
        adj: dict[str, list[EdgeRecord]] = {v: [] for v in self.nodes}
        for e in self.edges:
            adj.setdefault(e.src, []).append(e)
        return {v: tuple(es) for v, es in adj.items()}


def graph_from_edges(
    edge_specs: Iterable[Sequence], extra_nodes: Iterable[str] = ()
) -> PropertyGraph:
    """Build a graph from ``(src, tgt, val[, label])`` tuples.

    Edge ids are auto-assigned ``e<index>``; nodes appear in order of first
    appearance, followed by any ``extra_nodes`` not already present.
    """
    nodes: list[str] = []
    seen: set[str] = set()

    def note(v: str) -> None:
        if v not in seen:
            seen.add(v)
            nodes.append(v)

    edges: list[EdgeRecord] = []
    for i, spec in enumerate(edge_specs):
        src, tgt, val = spec[0], spec[1], float(spec[2])
        label = spec[3] if len(spec) > 3 else DEFAULT_EDGE_LABEL
        note(src)
        note(tgt)
        edges.append(EdgeRecord(f"e{i}", src, tgt, val, label))
    for v in extra_nodes:
        note(v)
    return PropertyGraph(tuple(nodes), tuple(edges))


def validate(g: PropertyGraph) -> list:
    """Report every invariant violation in ``g`` as a list of Diagnostics.

    Never mutates or raises: an empty list means the graph is valid.
    """
    out: list[Diagnostic] = []
    declared: set[str] = set()
    for v in g.nodes:
        if v in declared:
            out.append(Diagnostic("error", f"duplicate node id {v!r}", v))
        declared.add(v)
    edge_ids: set[str] = set()
    for e in g.edges:
        if e.id in edge_ids:
            out.append(Diagnostic("error", f"duplicate edge id {e.id!r}", e.id))
        edge_ids.add(e.id)
        if e.src not in declared:
            out.append(
                Diagnostic("error", f"edge {e.id!r}: src {e.src!r} is not a node", e.src)
            )
        if e.tgt not in declared:
            out.append(
                Diagnostic("error", f"edge {e.id!r}: tgt {e.tgt!r} is not a node", e.tgt)
            )
        if not math.isfinite(e.val):
            out.append(
                Diagnostic("error", f"edge {e.id!r}: non-finite val {e.val!r}", e.id)
            )
    return out


def parse_graph(text: str, format: str = "json") -> PropertyGraph:
    """Parse graph text in the given format (``json`` or ``tsv``).

    Raises :class:`GraphFormatError` (with the offending position or id) on
    syntax errors, non-finite or missing vals, duplicate ids, and -- for
    JSON -- edge endpoints missing from the node list.  The returned graph
    always passes :func:`validate`.
    """
    if format == "json":
        return _parse_json(text)
    if format == "tsv":
        return _parse_tsv(text)
    raise GraphFormatError(f"unknown graph format {format!r} (expected json or tsv)")


def _check_val(raw: object, where: str) -> float:
    if isinstance(raw, bool) or not isinstance(raw, (int, float)):
        raise GraphFormatError(f"{where}: val must be a number, got {raw!r}")
    v = float(raw)
    if not math.isfinite(v):
        raise GraphFormatError(f"{where}: non-finite val {raw!r}")
    return v


def _parse_json(text: str) -> PropertyGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphFormatError(
            f"json syntax error at line {e.lineno}, column {e.colno}: {e.msg}"
        ) from e
    if not isinstance(doc, dict):
        raise GraphFormatError("top-level json value must be an object")
    for key in ("nodes", "edges"):
        if key not in doc or not isinstance(doc[key], list):
            raise GraphFormatError(f"missing or non-list {key!r} entry")

    nodes: list[str] = []
    seen: set[str] = set()
    for i, item in enumerate(doc["nodes"]):
        if not isinstance(item, dict) or not isinstance(item.get("id"), str):
            raise GraphFormatError(f"nodes[{i}]: expected an object with a string id")
        nid = item["id"]
        if nid in seen:
            raise GraphFormatError(f"nodes[{i}]: duplicate node id {nid!r}")
        seen.add(nid)
        nodes.append(nid)

    edges: list[EdgeRecord] = []
    edge_ids: set[str] = set()
    for i, item in enumerate(doc["edges"]):
        where = f"edges[{i}]"
        if not isinstance(item, dict):
            raise GraphFormatError(f"{where}: expected an object")
        eid = item.get("id", f"e{i}")
        if not isinstance(eid, str):
            raise GraphFormatError(f"{where}: edge id must be a string")
        if eid in edge_ids:
            raise GraphFormatError(f"{where}: duplicate edge id {eid!r}")
        edge_ids.add(eid)
        src, tgt = item.get("src"), item.get("tgt")
        if not isinstance(src, str) or not isinstance(tgt, str):
            raise GraphFormatError(f"{where}: src and tgt must be string node ids")
        for endpoint in (src, tgt):
            if endpoint not in seen:
                raise GraphFormatError(
                    f"{where}: endpoint {endpoint!r} is not a declared node"
                )
        label = item.get("label", DEFAULT_EDGE_LABEL)
        if not isinstance(label, str):
            raise GraphFormatError(f"{where}: label must be a string")
        if "val" not in item:
            raise GraphFormatError(f"{where}: missing val")
        val = _check_val(item["val"], where)
        edges.append(EdgeRecord(eid, src, tgt, val, label))
    return PropertyGraph(tuple(nodes), tuple(edges))


def _parse_tsv(text: str) -> PropertyGraph:
    nodes: list[str] = []
    seen: set[str] = set()
    edges: list[EdgeRecord] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) not in (3, 4):
            raise GraphFormatError(
                f"line {lineno}: expected 3 or 4 tab-separated fields, got {len(parts)}"
            )
        src, tgt = parts[0], parts[1]
        if not src or not tgt:
            raise GraphFormatError(f"line {lineno}: empty node id")
        try:
            raw = float(parts[2])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: invalid val {parts[2]!r}") from None
        if not math.isfinite(raw):
            raise GraphFormatError(f"line {lineno}: non-finite val {parts[2]!r}")
        label = parts[3] if len(parts) == 4 else DEFAULT_EDGE_LABEL
        for endpoint in (src, tgt):
            if endpoint not in seen:
                seen.add(endpoint)
                nodes.append(endpoint)
        edges.append(EdgeRecord(f"e{lineno}", src, tgt, raw, label))
    return PropertyGraph(tuple(nodes), tuple(edges))


def _json_number(v: float):
    # Integral floats are emitted as JSON integers for readability; parsing
    # converts back to float, so round-trips are exact either way.
    if v.is_integer() and abs(v) < 2**53:
        return int(v)
    return v


def serialize_graph(g: PropertyGraph, format: str = "json") -> str:
    """Render ``g`` back to text; ``parse_graph`` inverts this exactly.

    The edge list keeps its order in both formats.  TSV output only carries
    what the format can express: edges (with labels omitted when they equal
    the default), no isolated nodes, ids implied by line position.
    """
    if format == "json":
        doc = {
            "nodes": [{"id": v} for v in g.nodes],
            "edges": [
                {
                    "id": e.id,
                    "src": e.src,
                    "tgt": e.tgt,
                    "label": e.label,
                    "val": _json_number(e.val),
                }
                for e in g.edges
            ],
        }
        return json.dumps(doc, indent=2) + "\n"
    if format == "tsv":
        lines = []
        for e in g.edges:
            fields = [e.src, e.tgt, format_value(e.val)]
            if e.label != DEFAULT_EDGE_LABEL:
                fields.append(e.label)
            lines.append("\t".join(fields))
        return "".join(line + "\n" for line in lines)
    raise GraphFormatError(f"unknown graph format {format!r} (expected json or tsv)")
