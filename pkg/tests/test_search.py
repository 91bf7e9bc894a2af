"""Bounded exhaustive and randomized weight-space search."""

import math
from itertools import product

import pytest

from starpcg import (
    Feasible,
    Graph,
    MODE_RANDOM,
    SearchConfig,
    format_search_report,
    make_cycle,
    make_grid,
    make_path,
    min_intervals_for_weights,
    search_min_k,
    search_report,
    verify,
)


def best_or_inf(result):
    return math.inf if result.best_k is None else result.best_k


class TestExhaustive:
    def test_triangle_is_star1(self):
        res = search_min_k(make_cycle(3), SearchConfig(max_weight=4))
        assert res.best_k == 1
        assert res.exhaustive_within_bound
        assert res.explored == 5**3

    def test_square_is_star1(self):
        res = search_min_k(make_cycle(4), SearchConfig(max_weight=6))
        assert res.best_k == 1

    def test_c5_needs_two(self):
        res = search_min_k(make_cycle(5), SearchConfig(max_weight=6))
        assert res.best_k == 2
        assert res.k_histogram.get(1, 0) == 0
        assert res.k_histogram.get(0, 0) == 0

    def test_path_is_star1(self):
        res = search_min_k(make_path(3), SearchConfig(max_weight=4))
        assert res.best_k == 1

    def test_edgeless(self):
        res = search_min_k(Graph(3), SearchConfig(max_weight=1))
        assert res.best_k == 0
        assert res.best_witness.intervals == ()

    def test_single_edge(self):
        res = search_min_k(Graph(2, [(0, 1)]), SearchConfig(max_weight=1))
        assert res.best_k == 1
        assert verify(res.best_witness, Graph(2, [(0, 1)])).equal

    def test_best_witness_always_verifies(self):
        for graph in (make_cycle(4), make_path(4), make_grid([2, 2])):
            res = search_min_k(graph, SearchConfig(max_weight=4))
            assert res.best_witness.k == res.best_k
            assert verify(res.best_witness, graph).equal

    def test_monotone_in_weight_bound(self):
        for n in (3, 4, 5):
            g = make_cycle(n)
            ks = [
                best_or_inf(search_min_k(g, SearchConfig(max_weight=w)))
                for w in (2, 4, 6)
            ]
            assert ks == sorted(ks, reverse=True)

    def test_matches_direct_enumeration(self):
        # the search must agree with folding the oracle over the whole space
        g = make_cycle(5)
        bound = 1
        best = None
        for vec in product(range(bound + 1), repeat=5):
            res = min_intervals_for_weights(g, vec)
            if isinstance(res, Feasible) and (best is None or res.k < best):
                best = res.k
        out = search_min_k(g, SearchConfig(max_weight=bound))
        assert out.best_k == best
        assert out.explored == (bound + 1) ** 5

    def test_histogram_accounts_for_everything(self):
        res = search_min_k(make_cycle(4), SearchConfig(max_weight=3))
        assert sum(res.k_histogram.values()) + res.infeasible_count == res.explored


class TestDeterminismAndJobs:
    def test_identical_configs_identical_results(self):
        cfg = SearchConfig(max_weight=4)
        assert search_min_k(make_cycle(4), cfg) == search_min_k(make_cycle(4), cfg)

    def test_worker_count_does_not_change_output(self):
        g = make_cycle(4)
        serial = search_min_k(g, SearchConfig(max_weight=4, jobs=1))
        parallel = search_min_k(g, SearchConfig(max_weight=4, jobs=2))
        assert serial == parallel

    def test_worker_count_with_early_exit(self):
        g = make_cycle(5)
        serial = search_min_k(g, SearchConfig(max_weight=6, target_k=2, jobs=1))
        parallel = search_min_k(g, SearchConfig(max_weight=6, target_k=2, jobs=3))
        assert serial == parallel
        assert serial.best_k == 2
        assert serial.explored < 7**5
        assert not serial.exhaustive_within_bound

    def test_target_k_zero_stops_immediately(self):
        res = search_min_k(Graph(3), SearchConfig(max_weight=2, target_k=0))
        assert res.best_k == 0
        assert res.explored == 1


class TestRandomMode:
    def test_seeded_reproducibility(self):
        g = make_cycle(5)
        cfg = SearchConfig(max_weight=8, mode=MODE_RANDOM, trials=400, rng_seed=11)
        assert search_min_k(g, cfg) == search_min_k(g, cfg)

    def test_explores_exactly_trials(self):
        g = make_cycle(5)
        res = search_min_k(g, SearchConfig(max_weight=8, mode=MODE_RANDOM, trials=250, rng_seed=0))
        assert res.explored == 250
        assert not res.exhaustive_within_bound
        assert sum(res.k_histogram.values()) + res.infeasible_count == 250

    def test_never_beats_known_cycle_minimum(self):
        # random probing at the default bound never undercuts two intervals
        for n in (6, 7, 8):
            g = make_cycle(n)
            res = search_min_k(g, SearchConfig(mode=MODE_RANDOM, trials=100_000, rng_seed=n))
            assert res.best_k is None or res.best_k >= 2, n


class TestSymmetryPruning:
    def test_same_minimum_with_and_without(self):
        for graph in (make_cycle(5), make_path(3), make_grid([2, 2])):
            plain = search_min_k(graph, SearchConfig(max_weight=4))
            pruned = search_min_k(graph, SearchConfig(max_weight=4, prune_symmetry=True))
            assert plain.best_k == pruned.best_k
            assert pruned.explored < plain.explored
            assert verify(pruned.best_witness, graph).equal

    def test_asymmetric_graph_prunes_nothing(self):
        # a pendant triangle has no automorphism moving vertex 0
        g = Graph(4, [(0, 1), (1, 2), (2, 3), (1, 3)])
        plain = search_min_k(g, SearchConfig(max_weight=3))
        pruned = search_min_k(g, SearchConfig(max_weight=3, prune_symmetry=True))
        assert plain == pruned


class TestValidation:
    def test_rejects_empty_graph(self):
        with pytest.raises(ValueError, match="at least one vertex"):
            search_min_k(Graph(0), SearchConfig(max_weight=2))

    def test_rejects_unknown_mode(self):
        with pytest.raises(ValueError, match="mode"):
            search_min_k(make_cycle(3), SearchConfig(max_weight=2, mode="guess"))

    def test_rejects_bad_jobs(self):
        with pytest.raises(ValueError, match="jobs"):
            search_min_k(make_cycle(3), SearchConfig(max_weight=2, jobs=0))

    def test_rejects_bad_trials(self):
        with pytest.raises(ValueError, match="trials"):
            search_min_k(make_cycle(3), SearchConfig(max_weight=2, mode=MODE_RANDOM, trials=0))

    def test_rejects_bad_bound(self):
        with pytest.raises(ValueError, match="max weight"):
            search_min_k(make_cycle(3), SearchConfig(max_weight=0))

    def test_rejects_bad_target(self):
        with pytest.raises(ValueError, match="target_k"):
            search_min_k(make_cycle(3), SearchConfig(max_weight=2, target_k=-1))

    def test_rejects_oversized_space(self):
        with pytest.raises(ValueError, match="exceeds"):
            search_min_k(make_cycle(3), SearchConfig(max_weight=1000))


class TestReporting:
    def test_report_shape(self):
        report = search_report(make_cycle(3), SearchConfig(max_weight=4))
        assert report["best_k"] == 1
        assert report["exhaustive_within_bound"] is True
        assert report["config"]["max_weight"] == 4
        assert report["config"]["trials"] is None  # exhaustive mode
        assert set(report["k_histogram"]) <= {"1", "2", "3"}
        wit = report["best_witness"]
        assert isinstance(wit["weights"], list) and isinstance(wit["intervals"], list)

    def test_report_default_bound_is_twice_n(self):
        report = search_report(Graph(2, [(0, 1)]))
        assert report["config"]["max_weight"] == 4

    def test_human_rendering_exhaustive(self):
        text = format_search_report(search_report(make_cycle(3), SearchConfig(max_weight=4)))
        assert "best: 1 interval(s)" in text
        assert "covered all vectors" in text

    def test_human_rendering_partial(self):
        text = format_search_report(
            search_report(make_cycle(5), SearchConfig(max_weight=6, mode=MODE_RANDOM, trials=50))
        )
        assert "partial scan" in text

    def test_human_rendering_no_feasible(self):
        text = format_search_report(
            {
                "best_k": None,
                "best_witness": None,
                "explored": 4,
                "infeasible_count": 4,
                "k_histogram": {},
                "exhaustive_within_bound": False,
                "config": {"max_weight": 1},
            }
        )
        assert "no feasible weighting" in text
        assert "(empty)" in text
