"""Seeded random workloads and the baseline-vs-leveled timing harness.

The workload fixes a node count, sweeps edge counts, and for each size
times (a) compiling the leveled graph plus its adjacency index and (b)
repeated existence queries by both methods under a per-run budget.  Every
doubly-completed run doubles as a correctness check: the two methods must
agree on existence.  Results land in a CSV table and a log-scale latency
chart.

All timing uses a monotonic clock captured at nanosecond resolution and
reported in milliseconds.  Runs are sequential; nothing shares mutable
state with a timed region.
"""

from __future__ import annotations

import csv
import random
import statistics
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .baseline import FOUND, TIMEOUT, baseline_trail_search
from .graph import EdgeRecord, PropertyGraph
from .leveled import build_leveled, size_report
from .reach import LeveledIndex

CSV_HEADER = ("e_count", "leveled_build_ms", "leveled_query_ms", "baseline_query_ms", "speedup")

DEFAULT_EDGE_COUNTS = tuple(range(20, 301, 20))


@dataclass(frozen=True)
class BenchConfig:
    n_nodes: int = 100
    edge_counts: tuple = DEFAULT_EDGE_COUNTS
    val_range: tuple = (1, 1000)
    runs_per_size: int = 10
    timeout_ms: float = 10_000.0
    seed: int = 0
    # None draws one (s, t) pair per graph from the seeded stream; a fixed
    # pair overrides that policy.
    pair: tuple | None = None

    def __post_init__(self) -> None:
        if not self.edge_counts:
            raise ValueError("edge_counts must be non-empty")
        if not self.timeout_ms > 0:
            raise ValueError("timeout must be positive")
        lo, hi = self.val_range
        if lo > hi:
            raise ValueError("val_range must be non-empty")


@dataclass(frozen=True)
class BenchRow:
    """One edge-count row.  Averages cover successful runs only; a None
    baseline time means every baseline run hit the budget, and speedup is
    present exactly when at least one baseline run completed."""

    e_count: int
    leveled_build_ms: float
    leveled_query_ms: float
    baseline_query_ms: float | None
    speedup: float | None
    # Context beyond the CSV schema:
    source: str = ""
    target: str = ""
    leveled_exists: bool = False
    baseline_completed: int = 0
    baseline_timeouts: int = 0
    agreement: bool | None = None  # None when no baseline run completed


@dataclass(frozen=True)
class BenchTable:
    config: BenchConfig
    rows: tuple = field(default_factory=tuple)


def generate_graph(
    n: int, m: int, val_range: tuple = (1, 1000), seed: int = 0
) -> PropertyGraph:
    """Random multigraph: n nodes "0".."n-1", m edges with uniform endpoints
    (src != tgt, parallel edges allowed) and uniform integer values drawn
    from val_range.  Fully determined by the seed.
    """
    if n < 1:
        raise ValueError("need at least one node")
    if m > 0 and n < 2:
        raise ValueError("edges need two distinct endpoints")
    lo, hi = val_range
    rng = random.Random(seed)
    nodes = tuple(str(i) for i in range(n))
    edges = []
    for i in range(m):
        src = rng.randrange(n)
        tgt = rng.randrange(n - 1)
        if tgt >= src:
            tgt += 1
        edges.append(EdgeRecord(f"e{i}", str(src), str(tgt), float(rng.randint(lo, hi))))
    return PropertyGraph(nodes, tuple(edges))


def compute_speedup(baseline_avg_ms: float, build_ms: float, leveled_avg_ms: float) -> float:
    """Baseline average query time over leveled build+query, 2-decimal rounded."""
    denom = build_ms + leveled_avg_ms
    if denom <= 0:
        raise ValueError("leveled build+query time must be positive")
    return round(baseline_avg_ms / denom, 2)


def _graph_seed(seed: int, e_count: int) -> int:
    return seed * 1_000_003 + e_count


def _draw_pair(cfg: BenchConfig, graph_seed: int) -> tuple:
    if cfg.pair is not None:
        return cfg.pair
    rng = random.Random(graph_seed ^ 0x9E3779B1)
    s = rng.randrange(cfg.n_nodes)
    t = rng.randrange(cfg.n_nodes - 1)
    if t >= s:
        t += 1
    return str(s), str(t)


def run_benchmark(
    cfg: BenchConfig, progress: Callable[[BenchRow], None] | None = None
) -> BenchTable:
    """Run the full sweep; timeouts become row data, never failures."""
    rows = []
    for m in cfg.edge_counts:
        gseed = _graph_seed(cfg.seed, m)
        g = generate_graph(cfg.n_nodes, m, cfg.val_range, gseed)

        t0 = time.perf_counter_ns()
        lev = build_leveled(g)
        index = LeveledIndex(lev)  # index construction belongs to build time
        build_ms = (time.perf_counter_ns() - t0) / 1e6
        size_report(lev)  # bound check rides along on every benchmark build

        s, t = _draw_pair(cfg, gseed)

        leveled_times = []
        exists = False
        for _ in range(cfg.runs_per_size):
            t0 = time.perf_counter_ns()
            exists = index.exists(s, t)
            dt = (time.perf_counter_ns() - t0) / 1e6
            if dt <= cfg.timeout_ms:
                leveled_times.append(dt)

        base_times = []
        timeouts = 0
        agree = True
        for _ in range(cfg.runs_per_size):
            res = baseline_trail_search(g, s, t, cfg.timeout_ms)
            if res.outcome == TIMEOUT:
                timeouts += 1
                continue
            base_times.append(res.elapsed_ms)
            if (res.outcome == FOUND) != exists:
                agree = False

        leveled_avg = statistics.fmean(leveled_times) if leveled_times else 0.0
        base_avg = statistics.fmean(base_times) if base_times else None
        speedup = (
            compute_speedup(base_avg, build_ms, leveled_avg)
            if base_avg is not None
            else None
        )
        row = BenchRow(
            e_count=m,
            leveled_build_ms=build_ms,
            leveled_query_ms=leveled_avg,
            baseline_query_ms=base_avg,
            speedup=speedup,
            source=s,
            target=t,
            leveled_exists=exists,
            baseline_completed=len(base_times),
            baseline_timeouts=timeouts,
            agreement=agree if base_times else None,
        )
        rows.append(row)
        if progress is not None:
            progress(row)
    return BenchTable(cfg, tuple(rows))


def emit_report(table: BenchTable, out_dir) -> tuple:
    """Write ``bench.csv`` and ``latency.svg`` under out_dir; returns paths.

    CSV cells use two fraction digits; a fully timed-out baseline renders as
    the literal ``TIMEOUT`` with the speedup cell left empty.  The chart
    plots all three latency series on a log y-axis and pins timed-out
    baseline points at the budget ceiling.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / "bench.csv"
    svg_path = out / "latency.svg"

    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for row in table.rows:
            writer.writerow(
                [
                    row.e_count,
                    f"{row.leveled_build_ms:.2f}",
                    f"{row.leveled_query_ms:.2f}",
                    "TIMEOUT" if row.baseline_query_ms is None else f"{row.baseline_query_ms:.2f}",
                    "" if row.speedup is None else f"{row.speedup:.2f}",
                ]
            )

    _plot_latency(table, svg_path)
    return csv_path, svg_path


def _plot_latency(table: BenchTable, svg_path: Path) -> None:
    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 4.5))
    rows = table.rows
    ceiling = table.config.timeout_ms
    if rows:
        xs = [r.e_count for r in rows]
        ax.plot(xs, [r.leveled_build_ms for r in rows], "o-", label="leveled build")
        ax.plot(xs, [r.leveled_query_ms for r in rows], "s-", label="leveled query")
        done = [(r.e_count, r.baseline_query_ms) for r in rows if r.baseline_query_ms is not None]
        if done:
            ax.plot(*zip(*done), "^-", label="baseline query")
        timed_out = [r.e_count for r in rows if r.baseline_query_ms is None]
        if timed_out:
            ax.plot(
                timed_out,
                [ceiling] * len(timed_out),
                "x",
                color="firebrick",
                label=f"baseline timeout ({ceiling:.0f} ms)",
            )
        ax.legend()
    ax.set_yscale("log")
    if not rows:
        ax.set_ylim(0.1, max(ceiling * 2, 1.0))
    ax.set_xlabel("edge count")
    ax.set_ylabel("per-run average latency (ms)")
    ax.set_title(f"baseline vs leveled, {table.config.n_nodes} nodes")
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(svg_path)
    plt.close(fig)
