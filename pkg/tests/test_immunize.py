"""Adaptive engine: fixtures, exclusion audit, regression to static order."""

from __future__ import annotations

import math

import pytest

from conftest import (complete_graph, path_graph, random_graph, star_graph)
from netimmune import (CentralityMethod, Graph, StrategyConfig, full_ordering,
                       lcc_curve, run_strategy, svid_adaptive_select)

DA = CentralityMethod.DEGREE
BWA = CentralityMethod.BETWEENNESS
EVA = CentralityMethod.EIGENVECTOR
CNA = CentralityMethod.CORENESS
SVIDA = CentralityMethod.SVID


class TestConfig:
    def test_q_bounds(self):
        with pytest.raises(ValueError):
            StrategyConfig(method=DA, q=0.0)
        with pytest.raises(ValueError):
            StrategyConfig(method=DA, q=1.2)

    def test_batch_bounds(self):
        with pytest.raises(ValueError):
            StrategyConfig(method=DA, batch_fraction=0.0)

    def test_defaults(self):
        cfg = StrategyConfig(method=SVIDA)
        assert cfg.q == 1.0
        assert cfg.batch_fraction == 0.05
        assert cfg.neighbor_exclusion is True
        assert cfg.svid.hops == 1


class TestFixtures:
    def test_star_degree_full(self):
        plan = full_ordering(star_graph(4), StrategyConfig(method=DA))
        assert plan.order[0] == 0
        assert plan.s_curve == (0.2, 0.2, 0.2, 0.2, 0.0)

    def test_path5_betweenness_center_first(self):
        plan = full_ordering(path_graph(5), StrategyConfig(method=BWA))
        assert plan.order[0] == 2
        assert plan.s_curve[0] == pytest.approx(0.4)

    def test_triangle_any_method(self):
        for method in (DA, BWA, EVA, CNA, SVIDA):
            plan = full_ordering(complete_graph(3),
                                 StrategyConfig(method=method))
            assert plan.s_curve == (2 / 3, 1 / 3, 0.0)

    def test_edgeless_graph_singleton_curve(self):
        plan = full_ordering(Graph(3, []), StrategyConfig(method=DA))
        assert plan.s_curve == (1 / 3, 1 / 3, 0.0)

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            run_strategy(Graph(0, []), StrategyConfig(method=DA))


class TestEngineMechanics:
    def test_partial_q_length(self):
        g = random_graph(5, max_n=20)
        n = g.node_count
        plan = run_strategy(g, StrategyConfig(method=DA, q=0.4))
        assert len(plan.order) == math.ceil(0.4 * n)
        assert len(plan.s_curve) == len(plan.order)

    def test_static_degree_regression(self):
        # one batch, no exclusion: classic static high-degree targeting
        g = random_graph(21, max_n=25)
        cfg = StrategyConfig(method=DA, batch_fraction=1.0,
                             neighbor_exclusion=False)
        plan = full_ordering(g, cfg)
        expected = sorted(g.nodes(), key=lambda v: (-g.degree(v), v))
        assert list(plan.order) == expected
        assert plan.fallback_count == 0

    def test_fallbacks_on_complete_graph_single_batch(self):
        # after the first pick every candidate is a neighbor
        cfg = StrategyConfig(method=DA, batch_fraction=1.0)
        plan = full_ordering(complete_graph(4), cfg)
        assert plan.fallback_steps == (1, 2, 3)
        assert plan.fallback_count == 3

    def test_no_fallbacks_with_batch_one(self):
        cfg = StrategyConfig(method=DA, batch_fraction=0.01)
        plan = full_ordering(complete_graph(4), cfg)
        assert plan.fallback_count == 0

    def test_order_is_permutation(self):
        for method in (DA, BWA, EVA, CNA, SVIDA):
            g = random_graph(33, max_n=18)
            plan = full_ordering(g, StrategyConfig(method=method))
            assert sorted(plan.order) == list(g.nodes())

    def test_s_curve_matches_lcc_curve(self):
        g = random_graph(8, max_n=20)
        plan = full_ordering(g, StrategyConfig(method=CNA))
        sizes = lcc_curve(g, list(plan.order))
        n = g.node_count
        assert plan.s_curve == tuple(sz / n for sz in sizes)

    def test_batch_size_recorded(self):
        g = random_graph(9, max_n=40)
        plan = run_strategy(g, StrategyConfig(method=DA, q=0.5,
                                              batch_fraction=0.1))
        assert plan.batch_size == max(1, math.ceil(0.1 * g.node_count))

    def test_svid_matches_standalone_select_in_one_batch(self):
        g = random_graph(14, max_n=16)
        cfg = StrategyConfig(method=SVIDA, batch_fraction=1.0)
        plan = full_ordering(g, cfg)
        assert list(plan.order) == svid_adaptive_select(g, g.node_count)

    def test_coreness_ties_break_by_lowest_id(self):
        # K4 with a pendant on node 3: all of K4 ties at core 3, so the
        # first pick is the lowest id in the 3-core, not the degree-4 node
        g = Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
        plan = run_strategy(g, StrategyConfig(method=CNA, q=0.2))
        assert plan.order[0] == 0


class TestExclusionAudit:
    def _audit(self, g, plan):
        batch = plan.batch_size
        fallback = set(plan.fallback_steps)
        for start in range(0, len(plan.order), batch):
            window = plan.order[start:start + batch]
            residual = g.without_nodes(plan.order[:start])
            for j in range(1, len(window)):
                if start + j in fallback:
                    continue
                for i in range(j):
                    assert not residual.has_edge(window[i], window[j]), (
                        f"batch pick {window[j]} adjacent to {window[i]} "
                        f"without fallback")

    def test_no_adjacent_picks_within_batch(self):
        for seed in (1, 4, 7, 11):
            g = random_graph(seed, max_n=25)
            for method in (DA, SVIDA, CNA):
                plan = full_ordering(
                    g, StrategyConfig(method=method, batch_fraction=0.3))
                self._audit(g, plan)

    def test_exclusion_off_allows_adjacent_picks(self):
        cfg = StrategyConfig(method=DA, batch_fraction=1.0,
                             neighbor_exclusion=False)
        plan = full_ordering(complete_graph(4), cfg)
        assert plan.fallback_count == 0
