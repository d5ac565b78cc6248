"""Exhaustive oracle and the trail-enumeration baseline."""

import math
import random

import pytest

import levgraph as lg
from conftest import random_graph


class TestOracle:
    def test_fig_1_to_2(self, fig_graph):
        res = lg.oracle_exists(fig_graph, "1", "2")
        assert res.exists is True
        assert res.min_witness_len == 1
        # Complete enumeration from 1: [600], [100], [100,300], [100,300,400].
        assert res.paths_explored == 4

    def test_decreasing_chain(self):
        g = lg.graph_from_edges([("a", "b", 5), ("b", "c", 3)])
        res = lg.oracle_exists(g, "a", "c")
        assert res.exists is False
        assert res.min_witness_len is None

    def test_source_without_out_edges(self, fig_graph):
        g = lg.graph_from_edges([("a", "b", 1)], extra_nodes=["c"])
        res = lg.oracle_exists(g, "c", "a")
        assert res.exists is False
        assert res.paths_explored == 0

    def test_node_repetition_allowed(self):
        # a -> b -> a -> b climbing 1 < 2 < 3 revisits both nodes.
        g = lg.graph_from_edges([("a", "b", 1), ("b", "a", 2), ("a", "b", 3)])
        res = lg.oracle_exists(g, "a", "b")
        assert res.exists and res.min_witness_len == 1
        assert res.max_depth == 3

    def test_depth_bounded_by_distinct_values(self):
        rng = random.Random(61)
        for _ in range(40):
            g = random_graph(rng)
            distinct = len({e.val for e in g.edges})
            for s in g.nodes:
                res = lg.oracle_exists(g, s, g.nodes[0])
                assert res.max_depth <= distinct

    def test_deterministic_counts(self):
        rng = random.Random(67)
        g = random_graph(rng)
        a = lg.oracle_exists(g, g.nodes[0], g.nodes[-1])
        b = lg.oracle_exists(g, g.nodes[0], g.nodes[-1])
        assert a == b

    def test_unknown_node(self, fig_graph):
        with pytest.raises(lg.UnknownNodeError):
            lg.oracle_exists(fig_graph, "1", "missing")


class TestBaseline:
    def test_fig_found(self, fig_graph):
        res = lg.baseline_trail_search(fig_graph, "1", "2", 10_000)
        assert res.outcome == lg.FOUND

    def test_two_node_reverse_not_found(self):
        g = lg.graph_from_edges([("a", "b", 1)])
        res = lg.baseline_trail_search(g, "b", "a", 10_000)
        assert res.outcome == lg.NOT_FOUND
        assert res.trails_enumerated == 0

    def test_dense_graph_times_out(self):
        # 12 nodes, all 132 ordered pairs, every value equal: the increasing
        # filter can never pass beyond one edge and the target is isolated,
        # so the search must grind through a super-exponential trail space.
        edges = [(str(i), str(j), 1.0) for i in range(12) for j in range(12) if i != j]
        g = lg.graph_from_edges(edges, extra_nodes=["t"])
        res = lg.baseline_trail_search(g, "0", "t", 100)
        assert res.outcome == lg.TIMEOUT
        assert res.elapsed_ms >= 100

    def test_unlimited_budget_agrees_with_oracle(self):
        rng = random.Random(71)
        for _ in range(40):
            g = random_graph(rng, max_nodes=6, max_edges=14)
            for s in g.nodes:
                for t in g.nodes:
                    res = lg.baseline_trail_search(g, s, t, math.inf)
                    assert res.outcome in (lg.FOUND, lg.NOT_FOUND)
                    assert (res.outcome == lg.FOUND) == lg.oracle_exists(g, s, t).exists

    def test_pruned_variant_agrees_on_existence(self):
        rng = random.Random(73)
        for _ in range(25):
            g = random_graph(rng, max_nodes=6, max_edges=12)
            for s in g.nodes:
                for t in g.nodes:
                    plain = lg.baseline_trail_search(g, s, t, math.inf)
                    pruned = lg.baseline_trail_search(g, s, t, math.inf, pruned=True)
                    assert plain.outcome == pruned.outcome

    def test_post_filter_enumerates_more_than_pruned(self):
        g = lg.graph_from_edges(
            [("a", "b", 9), ("b", "c", 1), ("c", "b", 2), ("b", "a", 3)],
            extra_nodes=["z"],
        )
        plain = lg.baseline_trail_search(g, "a", "z", math.inf)
        pruned = lg.baseline_trail_search(g, "a", "z", math.inf, pruned=True)
        assert plain.outcome == pruned.outcome == lg.NOT_FOUND
        assert plain.trails_enumerated > pruned.trails_enumerated

    def test_deterministic_trail_count(self, fig_graph):
        a = lg.baseline_trail_search(fig_graph, "1", "2", math.inf)
        b = lg.baseline_trail_search(fig_graph, "1", "2", math.inf)
        assert a.trails_enumerated == b.trails_enumerated

    def test_zero_budget_rejected(self, fig_graph):
        with pytest.raises(ValueError):
            lg.baseline_trail_search(fig_graph, "1", "2", 0)

    def test_unknown_node(self, fig_graph):
        with pytest.raises(lg.UnknownNodeError):
            lg.baseline_trail_search(fig_graph, "nope", "2", 10)
