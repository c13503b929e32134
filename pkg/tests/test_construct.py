"""
Unit tests for the randomized and derandomized constructions.
"""

import pytest
import sys
import os
import math

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.core.bounds import BoundInputs, optimal_p, optimal_p_closed, thm2_bound, thm3_bound
from src.core.construct import (
    ConstructionError,
    ConstructionParams,
    PRule,
    best_of_trials,
    construct_alpha,
    construct_alpha_rate,
    derandomize_alpha,
    expected_alpha_size,
    selection_probability,
    trial_seed
)
from src.core.corpus import construction_corpus
from src.core.domination import Alpha, Mode, ModeKind, verify
from src.core.generators import (
    gen_circulant,
    gen_complete,
    gen_cycle,
    gen_empty,
    gen_gnp,
    gen_petersen,
    gen_random_regular
)


class TestParams:
    """Tests for construction settings and seeds."""

    def test_defaults(self):
        params = ConstructionParams()
        assert params.trials == 1
        assert params.p_rule == PRule.THEOREM

    def test_validation(self):
        with pytest.raises(ValueError):
            ConstructionParams(trials=0)
        with pytest.raises(ValueError):
            ConstructionParams(p_override=1.5)
        with pytest.raises(ValueError):
            ConstructionParams(master_seed=-1)
        with pytest.raises(ValueError):
            ConstructionParams(workers=0)

    def test_trial_seeds(self):
        assert trial_seed(5, 3) == trial_seed(5, 3)
        seeds = {trial_seed(5, i) for i in range(100)}
        assert len(seeds) == 100
        assert trial_seed(5, 0) != trial_seed(6, 0)

    def test_selection_probability_rules(self):
        g = gen_petersen()
        a = Alpha(1, 2)
        inputs = BoundInputs.from_graph(g, a)
        assert selection_probability(g, a, ConstructionParams()) == optimal_p(inputs)
        assert selection_probability(g, a, ConstructionParams(), closed=True) == optimal_p_closed(inputs)
        cor = selection_probability(g, a, ConstructionParams(p_rule=PRule.COROLLARY))
        assert 0.0 < cor < 1.0
        assert selection_probability(g, a, ConstructionParams(p_override=0.25)) == 0.25

    def test_edgeless_needs_override(self):
        with pytest.raises(ConstructionError):
            construct_alpha(gen_empty(4), Alpha(1, 2), ConstructionParams())
        outcome = construct_alpha(gen_empty(4), Alpha(1, 2), ConstructionParams(p_override=0.5))
        assert outcome.B == ()


class TestConstructAlpha:
    """Tests for the α-dominating set construction."""

    def test_valid_and_partitioned(self):
        g = gen_petersen()
        outcome = construct_alpha(g, Alpha(1, 2), ConstructionParams(master_seed=3))
        assert verify(g, outcome.D, Mode.alpha_mode(Alpha(1, 2))).valid
        assert set(outcome.A).isdisjoint(outcome.B)
        assert set(outcome.D) == set(outcome.A) | set(outcome.B)
        assert list(outcome.D) == sorted(outcome.D)

    def test_p_zero_takes_everything(self):
        g = gen_cycle(5)
        outcome = construct_alpha(g, Alpha(1, 2), ConstructionParams(p_override=0.0))
        assert outcome.A == ()
        assert outcome.D == (0, 1, 2, 3, 4)

    def test_p_one(self):
        outcome = construct_alpha(gen_cycle(5), Alpha(1, 2), ConstructionParams(p_override=1.0))
        assert outcome.A == (0, 1, 2, 3, 4)
        assert outcome.B == ()

    def test_replay(self):
        g = gen_random_regular(30, 3, 5)
        params = ConstructionParams(master_seed=99)
        first = construct_alpha(g, Alpha(1, 2), params, trial_index=4)
        again = construct_alpha(g, Alpha(1, 2), params, trial_index=4)
        assert first.D == again.D
        assert first.seed == trial_seed(99, 4)

    def test_greedy_repair_never_larger(self):
        g = gen_gnp(40, 0.2, 3)
        for i in range(20):
            plain = construct_alpha(g, Alpha(1, 2), ConstructionParams(master_seed=1), i)
            greedy = construct_alpha(g, Alpha(1, 2),
                                     ConstructionParams(master_seed=1, greedy_repair=True), i)
            assert greedy.A == plain.A
            assert greedy.size <= plain.size
            assert verify(g, greedy.D, Mode.alpha_mode(Alpha(1, 2))).valid

    def test_to_dict(self):
        data = construct_alpha(gen_cycle(5), Alpha(1, 2), ConstructionParams()).to_dict()
        assert data['mode'] == "alpha(1/2)"
        assert data['size'] == len(data['D'])


class TestConstructAlphaRate:
    """Tests for the α-rate dominating set construction."""

    def test_complete_alpha_one(self):
        g = gen_complete(4)
        outcome = construct_alpha_rate(g, Alpha(1, 1), ConstructionParams(p_override=0.0))
        assert outcome.D == (0, 1, 2, 3)

    def test_cycle_prefers_existing_repairs(self):
        outcome = construct_alpha_rate(gen_cycle(5), Alpha(1, 2), ConstructionParams(p_override=0.0))
        assert outcome.D == (0, 1, 2)
        assert verify(gen_cycle(5), outcome.D, Mode.alpha_rate(Alpha(1, 2))).valid

    def test_petersen(self):
        g = gen_petersen()
        outcome = best_of_trials(g, Alpha(1, 2), ModeKind.ALPHA_RATE,
                                 ConstructionParams(trials=100, master_seed=1))
        assert verify(g, outcome.D, Mode.alpha_rate(Alpha(1, 2))).valid

    def test_greedy_repair_valid(self):
        g = gen_gnp(40, 0.2, 3)
        params = ConstructionParams(master_seed=2, greedy_repair=True)
        for i in range(20):
            outcome = construct_alpha_rate(g, Alpha(3, 4), params, i)
            assert verify(g, outcome.D, Mode.alpha_rate(Alpha(3, 4))).valid


class TestBestOfTrials:
    """Tests for the best-of-trials driver."""

    def test_corpus_validity(self):
        for g in construction_corpus().values():
            for kind in (ModeKind.ALPHA, ModeKind.ALPHA_RATE):
                for a in (Alpha(1, 4), Alpha(3, 4)):
                    params = ConstructionParams(trials=50, master_seed=17)
                    outcome = best_of_trials(g, a, kind, params)
                    mode = Mode.alpha_mode(a) if kind == ModeKind.ALPHA else Mode.alpha_rate(a)
                    assert verify(g, outcome.D, mode).valid

    def test_minimum_over_trials(self):
        g = gen_petersen()
        a = Alpha(1, 2)
        params = ConstructionParams(trials=30, master_seed=8)
        best = best_of_trials(g, a, ModeKind.ALPHA, params)
        sizes = [construct_alpha(g, a, params, i).size for i in range(30)]
        assert best.size == min(sizes)
        assert best.trial_index == sizes.index(min(sizes))

    def test_cycle_small_set(self):
        best = best_of_trials(gen_cycle(5), Alpha(1, 2), ModeKind.ALPHA,
                              ConstructionParams(trials=200, master_seed=7))
        assert best.size <= 3

    def test_workers_do_not_change_result(self):
        g = gen_random_regular(50, 4, 11)
        a = Alpha(1, 2)
        serial = best_of_trials(g, a, ModeKind.ALPHA, ConstructionParams(trials=16, master_seed=4))
        parallel = best_of_trials(g, a, ModeKind.ALPHA,
                                  ConstructionParams(trials=16, master_seed=4, workers=2))
        assert serial.D == parallel.D
        assert serial.trial_index == parallel.trial_index

    def test_no_construction_for_other_modes(self):
        with pytest.raises(ConstructionError):
            best_of_trials(gen_cycle(5), Alpha(1, 2), ModeKind.DOM, ConstructionParams())


class TestExpectation:
    """Statistical checks of the mean construction size against the bounds."""

    TRIALS = 2000

    def graphs(self):
        return [gen_petersen(), gen_random_regular(50, 4, 11), gen_circulant(101, range(1, 11))]

    def sample_sizes(self, g, a, construct, p):
        params = ConstructionParams(master_seed=2024, p_override=p)
        return np.array([construct(g, a, params, i).size for i in range(self.TRIALS)])

    def test_alpha_mean_below_bound(self):
        for g in self.graphs():
            for a in (Alpha(1, 4), Alpha(1, 2)):
                inputs = BoundInputs.from_graph(g, a)
                sizes = self.sample_sizes(g, a, construct_alpha, optimal_p(inputs))
                se = sizes.std(ddof=1) / math.sqrt(sizes.size)
                assert sizes.mean() <= thm2_bound(inputs).absolute + 3 * se

    def test_rate_mean_below_bound(self):
        for g in self.graphs():
            for a in (Alpha(1, 4), Alpha(1, 2)):
                inputs = BoundInputs.from_graph(g, a)
                sizes = self.sample_sizes(g, a, construct_alpha_rate, optimal_p_closed(inputs))
                se = sizes.std(ddof=1) / math.sqrt(sizes.size)
                assert sizes.mean() <= thm3_bound(inputs).absolute + 3 * se


class TestExpectedSize:
    """Tests for the exact expected construction size."""

    def test_extremes(self):
        g = gen_petersen()
        assert expected_alpha_size(g, Alpha(1, 2), 0.0) == pytest.approx(10.0)
        assert expected_alpha_size(g, Alpha(1, 2), 1.0) == pytest.approx(10.0)

    def test_cycle_closed_form(self):
        # t = 1 on C_5: E = 5·(p + (1-p)^3)
        p = 0.4
        expected = 5 * (p + (1 - p) ** 3)
        assert expected_alpha_size(gen_cycle(5), Alpha(1, 2), p) == pytest.approx(expected, rel=1e-12)

    def test_below_theorem_bound(self):
        for g in construction_corpus().values():
            for a in (Alpha(1, 4), Alpha(1, 2), Alpha(3, 4)):
                inputs = BoundInputs.from_graph(g, a)
                size = expected_alpha_size(g, a, optimal_p(inputs))
                assert size <= thm2_bound(inputs).absolute + 1e-9


class TestDerandomize:
    """Tests for the conditional-expectation derandomization."""

    def test_cycle(self):
        g = gen_cycle(5)
        members = derandomize_alpha(g, Alpha(1, 2))
        assert len(members) <= 3
        assert verify(g, members, Mode.alpha_mode(Alpha(1, 2))).valid
        assert derandomize_alpha(g, Alpha(1, 2)) == members

    def test_edgeless(self):
        assert derandomize_alpha(gen_empty(5), Alpha(1, 2)) == ()

    def test_hard_bound_on_random_graphs(self):
        checked = 0
        seed = 0
        while checked < 100:
            n = 10 + (seed * 13) % 91
            g = gen_gnp(n, 0.2, 500 + seed)
            seed += 1
            if g.min_degree < 1:
                continue
            a = (Alpha(1, 4), Alpha(1, 2), Alpha(3, 4))[checked % 3]
            members = derandomize_alpha(g, a)
            assert verify(g, members, Mode.alpha_mode(a)).valid
            bound = thm2_bound(BoundInputs.from_graph(g, a)).absolute
            assert len(members) <= bound
            checked += 1

    def test_no_worse_than_expectation(self):
        for g in construction_corpus().values():
            a = Alpha(1, 2)
            p = optimal_p(BoundInputs.from_graph(g, a))
            assert len(derandomize_alpha(g, a)) <= expected_alpha_size(g, a, p) + 1e-9


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
