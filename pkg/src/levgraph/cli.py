"""Command-line entry point.

Subcommands: parse, compile, query, oracle, baseline, gen, bench,
export-cypher.  Exit codes: 0 success, 1 domain error (bad input file,
unknown node) with a one-line message on stderr, 2 usage error.  Every
subcommand accepts ``--json-output`` to wrap its result in a machine-
readable ``{"ok": bool, "result": ...}`` envelope for downstream tooling.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .baseline import FOUND, baseline_trail_search, oracle_exists
from .bench import BenchConfig, emit_report, generate_graph, run_benchmark
from .cypher import export_bundle, write_bundle
from .graph import (
    GraphFormatError,
    UnknownNodeError,
    format_value,
    parse_graph,
    serialize_graph,
    validate,
)
from .leveled import LeveledInvariantError, build_leveled, serialize_leveled, size_report
from .reach import LeveledIndex


def _load_graph(args):
    path = Path(args.graph)
    fmt = args.format or ("tsv" if path.suffix == ".tsv" else "json")
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise GraphFormatError(f"cannot read {path}: {e}") from e
    return parse_graph(text, fmt)


def _emit(args, result, plain: str | None) -> None:
    if args.json_output:
        print(json.dumps({"ok": True, "result": result}))
    elif plain is not None and not args.quiet:
        print(plain)


def cmd_parse(args) -> int:
    g = _load_graph(args)
    diags = validate(g)
    if args.out:
        Path(args.out).write_text(serialize_graph(g, "json"))
    _emit(
        args,
        {"nodes": len(g.nodes), "edges": len(g.edges), "diagnostics": len(diags)},
        f"parsed {len(g.nodes)} nodes, {len(g.edges)} edges",
    )
    return 0


def cmd_compile(args) -> int:
    g = _load_graph(args)
    lev = build_leveled(g)
    stats = size_report(lev)
    text = serialize_leveled(lev)
    if args.out:
        Path(args.out).write_text(text)
    elif not args.json_output:
        sys.stdout.write(text)
    _emit(
        args,
        {
            "n_prime": stats.n_prime,
            "e_prime": stats.e_prime,
            "bound_n": stats.bound_n,
            "bound_e": stats.bound_e,
            "out": args.out,
        },
        f"n_prime={stats.n_prime} bound_n={stats.bound_n} "
        f"e_prime={stats.e_prime} bound_e={stats.bound_e}",
    )
    return 0


def cmd_query(args) -> int:
    g = _load_graph(args)
    index = LeveledIndex(build_leveled(g))
    if args.witness:
        answer = index.witness(args.source, args.target)
        witness_rows = []
        if answer.witness is not None:
            for eid in answer.witness.edges:
                e = g.edges_by_id[eid]
                witness_rows.append(
                    {"id": e.id, "src": e.src, "tgt": e.tgt, "val": e.val}
                )
        if args.json_output:
            print(json.dumps({"ok": True, "result": {"exists": answer.exists, "witness": witness_rows}}))
        else:
            print("true" if answer.exists else "false")
            for row in witness_rows:
                print(f"{row['src']}\t{row['tgt']}\t{format_value(row['val'])}")
    else:
        exists = index.exists(args.source, args.target)
        if args.json_output:
            print(json.dumps({"ok": True, "result": {"exists": exists}}))
        else:
            print("true" if exists else "false")
    return 0


def cmd_oracle(args) -> int:
    g = _load_graph(args)
    res = oracle_exists(g, args.source, args.target)
    if args.json_output:
        print(
            json.dumps(
                {
                    "ok": True,
                    "result": {
                        "exists": res.exists,
                        "paths_explored": res.paths_explored,
                        "min_witness_len": res.min_witness_len,
                    },
                }
            )
        )
    else:
        print("true" if res.exists else "false")
    return 0


def cmd_baseline(args) -> int:
    g = _load_graph(args)
    res = baseline_trail_search(g, args.source, args.target, args.timeout_ms, args.pruned)
    if args.json_output:
        print(
            json.dumps(
                {
                    "ok": True,
                    "result": {
                        "outcome": res.outcome,
                        "elapsed_ms": res.elapsed_ms,
                        "trails_enumerated": res.trails_enumerated,
                        "exists": res.outcome == FOUND,
                    },
                }
            )
        )
    else:
        print(res.outcome)
    return 0


def cmd_gen(args) -> int:
    g = generate_graph(args.nodes, args.edges, (args.val_min, args.val_max), args.seed)
    Path(args.out).write_text(serialize_graph(g, "json"))
    _emit(
        args,
        {"nodes": args.nodes, "edges": args.edges, "out": args.out},
        f"wrote {args.out}",
    )
    return 0


def _parse_edge_counts(spec: str) -> tuple:
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise ValueError(f"edge range must be start:stop:step, got {spec!r}")
        start, stop, step = (int(p) for p in parts)
        if step <= 0:
            raise ValueError("edge range step must be positive")
        return tuple(range(start, stop + 1, step))
    return tuple(int(p) for p in spec.split(","))


def cmd_bench(args) -> int:
    cfg = BenchConfig(
        n_nodes=args.nodes,
        edge_counts=_parse_edge_counts(args.edges),
        runs_per_size=args.runs,
        timeout_ms=args.timeout_ms,
        seed=args.seed,
        pair=(args.source, args.target) if args.source and args.target else None,
    )

    def progress(row) -> None:
        if not args.quiet and not args.json_output:
            base = "TIMEOUT" if row.baseline_query_ms is None else f"{row.baseline_query_ms:10.2f}"
            speedup = "" if row.speedup is None else f"{row.speedup:8.2f}x"
            print(
                f"|E|={row.e_count:4d}  build={row.leveled_build_ms:8.2f}ms  "
                f"query={row.leveled_query_ms:8.3f}ms  baseline={base}ms  {speedup}"
            )

    table = run_benchmark(cfg, progress=progress)
    csv_path, svg_path = emit_report(table, args.out)
    _emit(
        args,
        {"csv": str(csv_path), "svg": str(svg_path), "rows": len(table.rows)},
        f"wrote {csv_path} and {svg_path}",
    )
    return 0


def cmd_export_cypher(args) -> int:
    g = _load_graph(args)
    bundle = export_bundle(g, build_leveled(g))
    paths = write_bundle(bundle, args.out)
    _emit(
        args,
        {"files": [str(p) for p in paths]},
        "\n".join(f"wrote {p}" for p in paths),
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default=None,
                        help="graph file format (default: by extension)")
    common.add_argument("--quiet", action="store_true", help="suppress chatter")
    common.add_argument("--json-output", action="store_true",
                        help='wrap results in {"ok": bool, "result": ...}')

    parser = argparse.ArgumentParser(prog="levgraph", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="parse and validate a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--out", help="write the normalized JSON form here")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("compile", parents=[common],
                       help="compile to the leveled graph and report sizes")
    p.add_argument("--graph", required=True)
    p.add_argument("--out", help="leveled graph JSON output path (default stdout)")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("query", parents=[common],
                       help="strictly-increasing path existence via the leveled graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--witness", action="store_true", help="also print a witness path")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("oracle", parents=[common],
                       help="exhaustive-enumeration answer, independent of compilation")
    p.add_argument("--graph", required=True)
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("baseline", parents=[common],
                       help="trail-enumeration baseline with a time budget")
    p.add_argument("--graph", required=True)
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--timeout-ms", type=float, default=10_000.0)
    p.add_argument("--pruned", action="store_true",
                   help="extend only with strictly larger values instead of post-filtering")
    p.set_defaults(func=cmd_baseline)

    p = sub.add_parser("gen", parents=[common], help="generate a seeded random graph")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--val-min", type=int, default=1)
    p.add_argument("--val-max", type=int, default=1000)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", parents=[common], help="baseline-vs-leveled timing sweep")
    p.add_argument("--nodes", type=int, default=100)
    p.add_argument("--edges", default="20:300:20",
                   help="edge counts: start:stop:step or comma list")
    p.add_argument("--runs", type=int, default=10)
    p.add_argument("--timeout-ms", type=float, default=10_000.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--source", help="fix the query source (default: seeded draw)")
    p.add_argument("--target", help="fix the query target (default: seeded draw)")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("export-cypher", parents=[common],
                       help="write base/leveled DDL and query texts")
    p.add_argument("--graph", required=True)
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_export_cypher)

    return parser


def dispatch(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code else 0
    try:
        return args.func(args)
    except (GraphFormatError, UnknownNodeError, LeveledInvariantError, ValueError, OSError) as e:
        if getattr(args, "json_output", False):
            print(json.dumps({"ok": False, "error": str(e)}))
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
