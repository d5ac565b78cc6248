"""Reachability queries and witness extraction over leveled graphs."""

import random

import pytest

import levgraph as lg
from conftest import random_graph


class TestExists:
    def test_fig_1_to_2(self, fig_leveled):
        assert lg.increasing_path_exists(fig_leveled, "1", "2") is True

    def test_fig_3_to_1(self, fig_leveled):
        # Node 1 has no incoming edges, so no non-bottom copy of it exists.
        assert lg.increasing_path_exists(fig_leveled, "3", "1") is False

    def test_fig_2_to_2(self, fig_leveled):
        # The only cycle through 2 runs 2 ->400 3 ->300 2, a decreasing pair.
        assert lg.increasing_path_exists(fig_leveled, "2", "2") is False

    def test_self_query_with_increasing_cycle(self):
        g = lg.graph_from_edges([("a", "b", 1), ("b", "a", 2)])
        lev = lg.build_leveled(g)
        assert lg.increasing_path_exists(lev, "a", "a") is True
        assert lg.increasing_path_exists(lev, "b", "b") is False

    def test_unknown_source(self, fig_leveled):
        with pytest.raises(lg.UnknownNodeError, match="'9'"):
            lg.increasing_path_exists(fig_leveled, "9", "2")

    def test_unknown_target(self, fig_leveled):
        with pytest.raises(lg.UnknownNodeError, match="'9'"):
            lg.increasing_path_exists(fig_leveled, "1", "9")


class TestWitness:
    def test_fig_prefers_single_hop(self, fig_leveled):
        answer = lg.increasing_path_witness(fig_leveled, "1", "2")
        assert answer.exists
        w = answer.witness
        assert w.nodes == ("1", "2")
        assert w.values == (600.0,)

    def test_fig_without_direct_edge(self):
        g = lg.graph_from_edges([("1", "3", 100), ("3", "2", 300), ("2", "3", 400)])
        answer = lg.increasing_path_witness(lg.build_leveled(g), "1", "2")
        assert answer.witness.nodes == ("1", "3", "2")
        assert answer.witness.values == (100.0, 300.0)

    def test_absent_when_no_path(self, fig_leveled):
        answer = lg.increasing_path_witness(fig_leveled, "3", "1")
        assert answer == lg.QueryAnswer(exists=False, witness=None)

    def test_self_pair_without_cycle_has_no_witness(self):
        g = lg.graph_from_edges([("a", "b", 1)])
        answer = lg.increasing_path_witness(lg.build_leveled(g), "a", "a")
        assert not answer.exists and answer.witness is None

    def test_witness_soundness_random(self):
        rng = random.Random(43)
        for _ in range(40):
            g = random_graph(rng)
            lev = lg.build_leveled(g)
            index = lg.LeveledIndex(lev)
            by_id = g.edges_by_id
            for s in g.nodes:
                for t in g.nodes:
                    answer = index.witness(s, t)
                    assert answer.exists == index.exists(s, t)
                    if not answer.exists:
                        assert answer.witness is None
                        continue
                    w = answer.witness
                    assert len(w.edges) >= 1
                    assert len(w.nodes) == len(w.edges) + 1
                    assert w.nodes[0] == s and w.nodes[-1] == t
                    assert all(a < b for a, b in zip(w.values, w.values[1:]))
                    for i, eid in enumerate(w.edges):
                        edge = by_id[eid]
                        assert edge.src == w.nodes[i]
                        assert edge.tgt == w.nodes[i + 1]
                        assert edge.val == w.values[i]

    def test_witness_minimality_vs_oracle(self):
        rng = random.Random(47)
        for _ in range(30):
            g = random_graph(rng, max_nodes=7, max_edges=14)
            index = lg.LeveledIndex(lg.build_leveled(g))
            for s in g.nodes:
                for t in g.nodes:
                    oracle = lg.oracle_exists(g, s, t)
                    answer = index.witness(s, t)
                    assert answer.exists == oracle.exists
                    if oracle.exists:
                        assert len(answer.witness.edges) == oracle.min_witness_len

    def test_deterministic_witness(self, fig_graph):
        a = lg.increasing_path_witness(lg.build_leveled(fig_graph), "1", "2")
        b = lg.increasing_path_witness(lg.build_leveled(fig_graph), "1", "2")
        assert a == b


class TestAgainstOracle:
    def test_equivalence_random_suite(self):
        rng = random.Random(53)
        for _ in range(80):
            g = random_graph(rng)
            index = lg.LeveledIndex(lg.build_leveled(g))
            for s in g.nodes:
                for t in g.nodes:
                    assert index.exists(s, t) == lg.oracle_exists(g, s, t).exists

    def test_edge_monotonicity(self):
        # Adding an edge can only create increasing paths, never destroy one.
        rng = random.Random(59)
        for _ in range(30):
            g = random_graph(rng, max_nodes=6, max_edges=10)
            index = lg.LeveledIndex(lg.build_leveled(g))
            before = {
                (s, t): index.exists(s, t) for s in g.nodes for t in g.nodes
            }
            src = rng.choice(g.nodes)
            tgt = rng.choice(g.nodes)
            extra = lg.EdgeRecord("extra", src, tgt, float(rng.randint(1, 20)))
            g2 = lg.PropertyGraph(g.nodes, g.edges + (extra,))
            index2 = lg.LeveledIndex(lg.build_leveled(g2))
            for (s, t), existed in before.items():
                if existed:
                    assert index2.exists(s, t)


class TestIndexReuse:
    def test_many_queries_one_index(self, fig_leveled):
        index = lg.LeveledIndex(fig_leveled)
        assert index.exists("1", "2") and not index.exists("3", "1")
        assert index.exists("1", "3") and not index.exists("2", "2")
