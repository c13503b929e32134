"""
Unit tests for the closed-form bounds.
"""

import pytest
import sys
import os
import math
from decimal import Decimal, localcontext
from fractions import Fraction

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.core.bounds import (
    BoundInputs,
    bound_report,
    caro_roditty,
    classical_bound,
    cor1_bound,
    cor1_p,
    cor2_bound,
    dunbar_degree_bounds,
    dunbar_degree_bounds_exact,
    dunbar_edge_bounds,
    dunbar_edge_bounds_exact,
    estimator,
    optimal_p,
    report_from_inputs,
    thm2_bound,
    thm3_bound
)
from src.core.corpus import construction_corpus
from src.core.domination import Alpha
from src.core.generators import (
    gen_complete,
    gen_cycle,
    gen_empty,
    gen_gnp,
    gen_path,
    gen_petersen
)
from src.core.graph import build_graph


ALPHA_GRID = [Alpha(1, 10), Alpha(1, 4), Alpha(1, 2), Alpha(3, 4), Alpha(1, 1)]


def regular_inputs(n, d, alpha):
    return BoundInputs.for_regular(n, d, alpha)


def decimal_thm2_regular(d, alpha, prec=60):
    """High-precision oracle for thm2 on a d-regular graph, from exact math.comb."""
    dh = (d * (alpha.q - alpha.p)) // alpha.q + 1
    top = -(-alpha.p * d // alpha.q) - 1
    with localcontext() as ctx:
        ctx.prec = prec
        log_deg = Decimal(math.comb(d, top)).ln()
        dh_dec = Decimal(dh)
        log_ratio = dh_dec.ln() - (1 + 1 / dh_dec) * (dh_dec + 1).ln() - log_deg / dh_dec
        return float(1 - log_ratio.exp())


class TestPaperExample:
    """Tests for the 1000-regular graph at α = 1/10."""

    def setup_method(self):
        self.inputs = regular_inputs(2001, 1000, Alpha(1, 10))

    def test_delta_hat(self):
        assert self.inputs.delta_hat == 901

    def test_log_degree(self):
        expected = math.log(math.comb(1000, 99))
        assert self.inputs.log_open == pytest.approx(expected, rel=1e-12)

    def test_thm2_range(self):
        value = thm2_bound(self.inputs).value
        assert 0.30 < value < 0.305

    def test_thm2_matches_decimal_oracle(self):
        oracle = decimal_thm2_regular(1000, Alpha(1, 10))
        assert thm2_bound(self.inputs).value == pytest.approx(oracle, rel=1e-9)

    def test_dunbar_degree(self):
        lower, upper = dunbar_degree_bounds_exact(self.inputs)
        assert upper == Fraction(1000, 1900)
        assert lower == Fraction(100, 1100)
        assert 0.5263 < float(upper) < 0.527

    def test_cor1_formula(self):
        log_deg = math.log(math.comb(1000, 99))
        expected = (math.log(902) + log_deg + 1) / 902
        assert cor1_bound(self.inputs).value == pytest.approx(expected, rel=1e-12)

    def test_optimal_p(self):
        log_deg = math.log(math.comb(1000, 99))
        expected = 1 - math.exp(-(math.log(902) + log_deg) / 901)
        assert optimal_p(self.inputs) == pytest.approx(expected, rel=1e-12)

    def test_report_prefers_thm2(self):
        report = report_from_inputs(self.inputs)
        thm2 = report.bounds['thm2']
        assert thm2.value < report.bounds['dunbar_degree_upper'].value
        assert report.best_upper == pytest.approx(thm2.absolute)


class TestDunbarBounds:
    """Tests for the degree and edge bounds."""

    def test_k2_alpha_one(self):
        inputs = BoundInputs.from_graph(gen_path(2), Alpha(1, 1))
        lower, upper = dunbar_degree_bounds(inputs)
        assert lower.value == 0.5
        assert upper.value == 1.0

    def test_cycle_edges(self):
        inputs = BoundInputs.from_graph(gen_cycle(5), Alpha(1, 2))
        assert dunbar_edge_bounds_exact(inputs) == (Fraction(5, 3), Fraction(10, 3))
        lower, upper = dunbar_edge_bounds(inputs)
        assert lower.absolute == pytest.approx(5 / 3)
        assert upper.absolute == pytest.approx(10 / 3)
        assert lower.value == pytest.approx(1 / 3)

    def test_complete_edge_lower(self):
        inputs = BoundInputs.from_graph(gen_complete(4), Alpha(1, 1))
        assert dunbar_edge_bounds_exact(inputs)[0] == 2

    def test_integral_absolute_stays_integral(self):
        inputs = BoundInputs.from_graph(gen_path(2), Alpha(1, 1))
        assert dunbar_degree_bounds(inputs)[1].absolute == 2.0

    def test_edgeless_inapplicable(self):
        inputs = BoundInputs.from_graph(gen_empty(4), Alpha(1, 2))
        assert dunbar_degree_bounds_exact(inputs) is None
        for bound in dunbar_degree_bounds(inputs) + dunbar_edge_bounds(inputs):
            assert not bound.applicable
            assert bound.value is None
            assert bound.reason


class TestClassicalBounds:
    """Tests for the Caro–Roditty and logarithmic bounds on γ."""

    def test_caro_roditty(self):
        assert caro_roditty(regular_inputs(4, 1, Alpha(1, 2))).value == pytest.approx(0.75)
        expected = 1 - 2 / 3 ** 1.5
        assert caro_roditty(regular_inputs(5, 2, Alpha(1, 2))).value == pytest.approx(expected)

    def test_caro_roditty_needs_edges(self):
        assert not caro_roditty(regular_inputs(3, 0, Alpha(1, 2))).applicable

    def test_classical(self):
        assert classical_bound(regular_inputs(3, 0, Alpha(1, 2))).value == 1.0
        expected = (math.log(2) + 1) / 2
        assert classical_bound(regular_inputs(4, 1, Alpha(1, 2))).value == pytest.approx(expected)
        expected = (math.log(1001) + 1) / 1001
        assert classical_bound(regular_inputs(1002, 1000, Alpha(1, 2))).value == pytest.approx(expected)


class TestProbabilisticBounds:
    """Tests for the log-space probabilistic bounds."""

    def test_cycle_thm2(self):
        report = bound_report(gen_cycle(5), Alpha(1, 2))
        thm2 = report.bounds['thm2']
        assert thm2.value == pytest.approx(1 - 2 / 3 ** 1.5, rel=1e-12)
        assert thm2.absolute == pytest.approx(3.0755, abs=1e-4)

    def test_cycle_optimal_p(self):
        inputs = BoundInputs.from_graph(gen_cycle(5), Alpha(1, 2))
        assert optimal_p(inputs) == pytest.approx(1 - 3 ** -0.5, rel=1e-12)

    def test_cycle_thm3(self):
        inputs = BoundInputs.from_graph(gen_cycle(5), Alpha(1, 2))
        assert thm3_bound(inputs).value == pytest.approx(1 - 2 / 3 ** 1.5, rel=1e-12)

    def test_complete_thm3(self):
        inputs = BoundInputs.from_graph(gen_complete(4), Alpha(1, 1))
        assert thm3_bound(inputs).value == pytest.approx(23 / 24, rel=1e-12)

    def test_unit_case(self):
        inputs = BoundInputs.from_graph(gen_path(2), Alpha(1, 1))
        assert optimal_p(inputs) == pytest.approx(0.5)
        assert cor1_bound(inputs).value == pytest.approx((math.log(2) + 1) / 2)

    def test_edgeless_inapplicable(self):
        report = bound_report(gen_empty(5), Alpha(1, 2))
        for name in ('thm2', 'cor1', 'thm3', 'cor2'):
            assert not report.bounds[name].applicable
            assert "edgeless" in report.bounds[name].reason
        assert report.bounds['classical'].applicable
        assert report.best_upper is None
        assert report.best_lower is None
        assert report.edgeless
        assert report.to_dict()['note']

    def test_negative_p_clamped(self):
        # One edge among ten vertices: (1 + δ̂)·d̂ = 2 · 0.2 < 1
        g = build_graph(10, [(0, 1)])
        inputs = BoundInputs.from_graph(g, Alpha(1, 1))
        assert optimal_p(inputs) == 0.0
        assert cor1_p(inputs) == 0.0
        assert thm2_bound(inputs).value == pytest.approx(0.2)
        assert cor1_bound(inputs).value == pytest.approx(0.2)
        assert thm2_bound(inputs).absolute >= 1

    def test_corollary_p_capped(self):
        # Large α-degree with δ̂ = 1 drives the raw corollary p above 1
        inputs = BoundInputs.from_graph(gen_complete(12), Alpha(1, 1))
        assert cor1_p(inputs) == 1.0
        assert cor1_bound(inputs).value == 1.0

    def test_corollary_value_capped_inside_range(self):
        # C_5 at α = 1: δ̂ = 1, d̂ = 2, so p = ln 4 / 2 lies in (0, 1)
        # while p + 1/2 > 1
        inputs = BoundInputs.from_graph(gen_cycle(5), Alpha(1, 1))
        assert 0.0 < cor1_p(inputs) < 1.0
        assert cor1_bound(inputs).value == 1.0
        assert cor1_bound(inputs).absolute == 5.0
        assert cor2_bound(inputs).value == 1.0

        inputs = BoundInputs.from_graph(gen_complete(4), Alpha(1, 1))
        assert 0.0 < cor1_p(inputs) < 1.0
        assert cor1_bound(inputs).value == 1.0
        assert cor1_bound(inputs).absolute <= 4.0

    def test_corollary_bounds_at_most_n(self):
        for g in list(construction_corpus().values()) + [gen_cycle(5), gen_complete(4)]:
            for a in ALPHA_GRID:
                inputs = BoundInputs.from_graph(g, a)
                for bound in (cor1_bound(inputs), cor2_bound(inputs)):
                    assert bound.absolute <= g.n

    def test_estimator_minimum(self):
        inputs = BoundInputs.from_graph(gen_petersen(), Alpha(1, 2))
        p = optimal_p(inputs)
        best = thm2_bound(inputs).value
        assert estimator(inputs, p) == pytest.approx(best, rel=1e-12)
        for q in (0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0):
            assert estimator(inputs, q) >= best - 1e-12

    def test_corollary_relaxes_estimator(self):
        for g in (gen_cycle(5), gen_petersen(), gen_gnp(30, 0.3, 4)):
            for a in ALPHA_GRID:
                inputs = BoundInputs.from_graph(g, a)
                p = cor1_p(inputs)
                assert estimator(inputs, p) <= cor1_bound(inputs).value + 1e-12

    def test_estimator_edgeless(self):
        inputs = BoundInputs.from_graph(gen_empty(3), Alpha(1, 2))
        assert estimator(inputs, 0.3) is None


class TestGeneralization:
    """Tests for the reductions to the classical bounds when α <= 1/Δ."""

    def graphs(self):
        found = []
        seed = 0
        while len(found) < 50:
            n = 20 + (seed * 37) % 181
            g = gen_gnp(n, 0.15, seed)
            seed += 1
            if g.min_degree >= 1:
                found.append(g)
        return found

    def test_identities(self):
        for g in self.graphs():
            inputs = BoundInputs.from_graph(g, Alpha(1, g.max_degree + 1))
            assert inputs.delta_hat == g.min_degree
            assert thm2_bound(inputs).value == pytest.approx(caro_roditty(inputs).value, rel=1e-12)
            assert cor1_bound(inputs).value == pytest.approx(classical_bound(inputs).value, rel=1e-12)
            assert cor2_bound(inputs).value == pytest.approx(classical_bound(inputs).value, rel=1e-12)


class TestBoundProperties:
    """Tests for properties that hold on every graph."""

    def test_values_in_unit_interval(self):
        for g in construction_corpus().values():
            for a in ALPHA_GRID:
                for bound in bound_report(g, a).bounds.values():
                    if bound.applicable:
                        assert -1e-12 <= bound.value <= 1 + 1e-12

    def test_rate_bound_dominates(self):
        for g in construction_corpus().values():
            for a in ALPHA_GRID:
                inputs = BoundInputs.from_graph(g, a)
                assert thm3_bound(inputs).value >= thm2_bound(inputs).value - 1e-12

    def test_thm2_monotone_on_fixed_graphs(self):
        for g in (gen_cycle(5), gen_petersen()):
            values = [thm2_bound(BoundInputs.from_graph(g, a)).value for a in ALPHA_GRID]
            assert values == sorted(values)

    def test_petersen_values(self):
        g = gen_petersen()
        assert thm2_bound(BoundInputs.from_graph(g, Alpha(1, 2))).value == pytest.approx(7 / 9)
        assert thm2_bound(BoundInputs.from_graph(g, Alpha(1, 1))).value == pytest.approx(11 / 12)

    def test_regular_shortcut_matches_graph(self):
        for g, d in ((gen_petersen(), 3), (gen_cycle(9), 2), (gen_complete(6), 5)):
            for a in ALPHA_GRID:
                direct = BoundInputs.from_graph(g, a)
                shortcut = BoundInputs.for_regular(g.n, d, a)
                assert shortcut.m == direct.m
                assert shortcut.delta_hat == direct.delta_hat
                assert shortcut.log_open == pytest.approx(direct.log_open, abs=1e-12)
                assert shortcut.log_closed == pytest.approx(direct.log_closed, abs=1e-12)


class TestBoundReport:
    """Tests for the aggregate report."""

    def test_cycle_best(self):
        report = bound_report(gen_cycle(5), Alpha(1, 2), label="cycle:5")
        assert report.best_lower == pytest.approx(5 / 3)
        assert report.best_upper == pytest.approx(5 * (1 - 2 / 3 ** 1.5))
        assert report.best_lower <= 2 <= report.best_upper

    def test_classical_not_mixed_into_alpha_targets(self):
        report = bound_report(gen_cycle(5), Alpha(1, 2))
        names = {b.name for b in report.applicable('gamma_alpha', 'upper')}
        assert names == {'dunbar_degree_upper', 'dunbar_edge_upper', 'thm2', 'cor1'}
        names = {b.name for b in report.applicable('gamma_rate', 'upper')}
        assert names == {'thm3', 'cor2'}

    def test_to_dict(self):
        data = bound_report(gen_cycle(5), Alpha(1, 2), label="cycle:5").to_dict()
        assert data['graph'] == "cycle:5"
        assert data['alpha'] == "1/2"
        assert data['delta_hat'] == 2
        assert set(data['bounds']) == {
            'dunbar_degree_lower', 'dunbar_degree_upper', 'dunbar_edge_lower',
            'dunbar_edge_upper', 'caro_roditty', 'classical', 'thm2', 'cor1',
            'thm3', 'cor2',
        }

    def test_to_row_flat(self):
        row = bound_report(gen_petersen(), Alpha(1, 4)).to_row()
        assert all(not isinstance(v, dict) for v in row.values())
        assert row['thm2'] == pytest.approx(thm2_bound(BoundInputs.from_graph(gen_petersen(), Alpha(1, 4))).value)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
