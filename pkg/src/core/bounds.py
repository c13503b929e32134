"""
Closed-form bounds on the α-domination and α-rate domination numbers.

All probabilistic bounds are evaluated in log space: the α-degree of a
1000-regular graph at α = 1/10 is C(1000, 99) ≈ e^319.7, which no float
can hold, but its logarithm combines safely with rational exponents.
The degree/edge bounds are exact rationals converted to float last.

Values are fractions of n unless a bound is documented as absolute.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .domination import (
    Alpha,
    alpha_degrees,
    ceil_alpha_times,
    delta_hat,
    delta_hat_from_min_degree,
    log_binomial,
)
from .graph import Graph


@dataclass(frozen=True)
class BoundInputs:
    """Graph invariants every bound is a function of."""
    n: int
    m: int
    min_degree: int
    max_degree: int
    delta_hat: int
    log_open: float
    log_closed: float
    alpha: Alpha

    @classmethod
    def from_graph(cls, graph: Graph, alpha: Alpha) -> 'BoundInputs':
        degrees = alpha_degrees(graph, alpha)
        return cls(
            n=graph.n,
            m=graph.edge_count,
            min_degree=graph.min_degree,
            max_degree=graph.max_degree,
            delta_hat=delta_hat(graph, alpha),
            log_open=degrees.log_open,
            log_closed=degrees.log_closed,
            alpha=alpha,
        )

    @classmethod
    def for_regular(cls, n: int, d: int, alpha: Alpha) -> 'BoundInputs':
        """
        Inputs for any d-regular graph on n vertices, without building it.

        Every vertex contributes the same binomial, so d̂_α and d̃_α are
        single binomial coefficients.
        """
        top = ceil_alpha_times(alpha, d) - 1
        return cls(
            n=n,
            m=n * d // 2,
            min_degree=d,
            max_degree=d,
            delta_hat=delta_hat_from_min_degree(d, alpha),
            log_open=log_binomial(d, top),
            log_closed=log_binomial(d + 1, top),
            alpha=alpha,
        )


@dataclass
class BoundValue:
    """
    One bound evaluated on one graph.

    Attributes:
        name: Stable identifier (CSV column stem)
        target: Parameter bounded: 'gamma', 'gamma_alpha' or 'gamma_rate'
        side: 'lower' or 'upper'
        value: Fraction of n (None when inapplicable)
        absolute: value·n (None when inapplicable)
        applicable: Whether the bound's hypotheses hold
        reason: Why it is inapplicable
    """
    name: str
    target: str
    side: str
    value: Optional[float]
    absolute: Optional[float]
    applicable: bool = True
    reason: str = ""

    def to_dict(self) -> Dict[str, object]:
        return {
            'target': self.target,
            'side': self.side,
            'applicable': self.applicable,
            'value': self.value,
            'absolute': self.absolute,
            'reason': self.reason,
        }


def _fraction_value(name: str, target: str, side: str, n: int,
                    fraction, reason: str = "") -> BoundValue:
    if fraction is None:
        return BoundValue(name, target, side, None, None, applicable=False, reason=reason)
    # Scale before converting so integral counts stay integral
    return BoundValue(name, target, side, float(fraction), float(fraction * n))


# ============================================
# Degree and edge bounds (exact rationals)
# ============================================

def dunbar_degree_bounds_exact(inputs: BoundInputs) -> Optional[Tuple[Fraction, Fraction]]:
    """
    αδn/(Δ+αδ) <= γ_α <= Δn/(Δ+(1-α)δ) as exact fractions of n.

    None for edgeless graphs (Δ = 0).
    """
    if inputs.max_degree < 1:
        return None
    a = inputs.alpha.as_fraction()
    delta, big_delta = inputs.min_degree, inputs.max_degree
    lower = a * delta / (big_delta + a * delta)
    upper = Fraction(big_delta) / (big_delta + (1 - a) * delta)
    return lower, upper


def dunbar_degree_bounds(inputs: BoundInputs) -> Tuple[BoundValue, BoundValue]:
    """Degree bounds on γ_α as (lower, upper), fractions of n."""
    exact = dunbar_degree_bounds_exact(inputs)
    reason = "edgeless graph (max degree 0)"
    if exact is None:
        return (_fraction_value('dunbar_degree_lower', 'gamma_alpha', 'lower', inputs.n, None, reason),
                _fraction_value('dunbar_degree_upper', 'gamma_alpha', 'upper', inputs.n, None, reason))
    lower, upper = exact
    return (_fraction_value('dunbar_degree_lower', 'gamma_alpha', 'lower', inputs.n, lower),
            _fraction_value('dunbar_degree_upper', 'gamma_alpha', 'upper', inputs.n, upper))


def dunbar_edge_bounds_exact(inputs: BoundInputs) -> Optional[Tuple[Fraction, Fraction]]:
    """
    2αm/((1+α)Δ) <= γ_α <= ((2-α)Δn - (2-2α)m)/((2-α)Δ) as absolute counts.

    None for edgeless graphs.
    """
    if inputs.max_degree < 1:
        return None
    a = inputs.alpha.as_fraction()
    m, n, big_delta = inputs.m, inputs.n, inputs.max_degree
    lower = 2 * a * m / ((1 + a) * big_delta)
    upper = ((2 - a) * big_delta * n - (2 - 2 * a) * m) / ((2 - a) * big_delta)
    return lower, upper


def dunbar_edge_bounds(inputs: BoundInputs) -> Tuple[BoundValue, BoundValue]:
    """Edge bounds on γ_α as (lower, upper); absolute counts converted to fractions."""
    exact = dunbar_edge_bounds_exact(inputs)
    reason = "edgeless graph (max degree 0)"
    if exact is None:
        return (_fraction_value('dunbar_edge_lower', 'gamma_alpha', 'lower', inputs.n, None, reason),
                _fraction_value('dunbar_edge_upper', 'gamma_alpha', 'upper', inputs.n, None, reason))
    lower, upper = exact
    return (BoundValue('dunbar_edge_lower', 'gamma_alpha', 'lower',
                       float(lower / inputs.n), float(lower)),
            BoundValue('dunbar_edge_upper', 'gamma_alpha', 'upper',
                       float(upper / inputs.n), float(upper)))


# ============================================
# Classical domination bounds
# ============================================

def caro_roditty(inputs: BoundInputs) -> BoundValue:
    """γ <= (1 - δ/(1+δ)^(1+1/δ))·n, for δ >= 1."""
    delta = inputs.min_degree
    if delta < 1:
        return _fraction_value('caro_roditty', 'gamma', 'upper', inputs.n, None,
                               "needs min degree >= 1")
    log_ratio = math.log(delta) - (1 + 1 / delta) * math.log1p(delta)
    return _fraction_value('caro_roditty', 'gamma', 'upper', inputs.n, -math.expm1(log_ratio))


def classical_bound(inputs: BoundInputs) -> BoundValue:
    """γ <= (ln(δ+1) + 1)/(δ+1)·n; equals n when δ = 0."""
    delta = inputs.min_degree
    value = (math.log1p(delta) + 1) / (delta + 1)
    return _fraction_value('classical', 'gamma', 'upper', inputs.n, value)


# ============================================
# Probabilistic bounds
# ============================================

def estimator(inputs: BoundInputs, p: float, closed: bool = False) -> Optional[float]:
    """
    Expectation estimate p + (1-p)^(δ̂+1)·d̂ as a fraction of n.

    With closed=True the closed α-degree d̃_α replaces d̂_α. Every p in
    [0, 1] gives a valid upper bound on the expected construction size.

    Returns:
        Estimate, or None when the α-degree is zero
    """
    log_deg = inputs.log_closed if closed else inputs.log_open
    if math.isinf(log_deg):
        return None
    if p >= 1.0:
        return 1.0
    return p + math.exp((inputs.delta_hat + 1) * math.log1p(-p) + log_deg)


def _log_scale(inputs: BoundInputs, log_deg: float) -> float:
    # ln((1+δ̂)·d)
    return math.log1p(inputs.delta_hat) + log_deg


def _optimal_p(inputs: BoundInputs, log_deg: float) -> Optional[float]:
    if math.isinf(log_deg):
        return None
    scale = _log_scale(inputs, log_deg)
    if scale <= 0:
        return 0.0
    return -math.expm1(-scale / inputs.delta_hat)


def _theorem_value(inputs: BoundInputs, log_deg: float) -> Optional[float]:
    if math.isinf(log_deg):
        return None
    dh = inputs.delta_hat
    if _log_scale(inputs, log_deg) <= 0:
        # Unconstrained optimum p would be negative; p = 0 leaves d itself
        return math.exp(log_deg)
    log_ratio = math.log(dh) - (1 + 1 / dh) * math.log1p(dh) - log_deg / dh
    return -math.expm1(log_ratio)


def _corollary_p(inputs: BoundInputs, log_deg: float) -> Optional[float]:
    if math.isinf(log_deg):
        return None
    raw = _log_scale(inputs, log_deg) / (inputs.delta_hat + 1)
    return min(1.0, max(0.0, raw))


def _corollary_value(inputs: BoundInputs, log_deg: float) -> Optional[float]:
    p = _corollary_p(inputs, log_deg)
    if p is None:
        return None
    if p <= 0.0:
        return math.exp(log_deg)
    if p >= 1.0:
        return 1.0
    # Equals p + 1/(δ̂+1), which passes 1 once p > δ̂/(δ̂+1)
    return min(1.0, (_log_scale(inputs, log_deg) + 1) / (inputs.delta_hat + 1))


_EDGELESS = "γ_α = 0 for edgeless graphs (α-degree is 0)"


def optimal_p(inputs: BoundInputs) -> Optional[float]:
    """
    Selection probability p = 1 - (1/((1+δ̂)·d̂_α))^(1/δ̂), clamped at 0.

    Returns None when d̂_α = 0.
    """
    return _optimal_p(inputs, inputs.log_open)


def optimal_p_closed(inputs: BoundInputs) -> Optional[float]:
    """As optimal_p with the closed α-degree d̃_α."""
    return _optimal_p(inputs, inputs.log_closed)


def thm2_bound(inputs: BoundInputs) -> BoundValue:
    """γ_α <= (1 - δ̂/((1+δ̂)^(1+1/δ̂)·d̂_α^(1/δ̂)))·n."""
    return _fraction_value('thm2', 'gamma_alpha', 'upper', inputs.n,
                           _theorem_value(inputs, inputs.log_open), _EDGELESS)


def cor1_p(inputs: BoundInputs) -> Optional[float]:
    """p = min{1, (ln(δ̂+1) + ln d̂_α)/(δ̂+1)}, clamped at 0."""
    return _corollary_p(inputs, inputs.log_open)


def cor1_bound(inputs: BoundInputs) -> BoundValue:
    """γ_α <= (ln(δ̂+1) + ln d̂_α + 1)/(δ̂+1)·n."""
    return _fraction_value('cor1', 'gamma_alpha', 'upper', inputs.n,
                           _corollary_value(inputs, inputs.log_open), _EDGELESS)


def thm3_bound(inputs: BoundInputs) -> BoundValue:
    """γ_×α <= (1 - δ̂/((1+δ̂)^(1+1/δ̂)·d̃_α^(1/δ̂)))·n."""
    return _fraction_value('thm3', 'gamma_rate', 'upper', inputs.n,
                           _theorem_value(inputs, inputs.log_closed), _EDGELESS)


def cor2_p(inputs: BoundInputs) -> Optional[float]:
    """p = min{1, (ln(δ̂+1) + ln d̃_α)/(δ̂+1)}, clamped at 0."""
    return _corollary_p(inputs, inputs.log_closed)


def cor2_bound(inputs: BoundInputs) -> BoundValue:
    """γ_×α <= (ln(δ̂+1) + ln d̃_α + 1)/(δ̂+1)·n."""
    return _fraction_value('cor2', 'gamma_rate', 'upper', inputs.n,
                           _corollary_value(inputs, inputs.log_closed), _EDGELESS)


# ============================================
# Aggregate report
# ============================================

@dataclass
class BoundReport:
    """Every bound for one (graph, α) pair plus the best of each side."""
    inputs: BoundInputs
    label: str = ""
    bounds: Dict[str, BoundValue] = field(default_factory=dict)

    def applicable(self, target: str, side: str) -> List[BoundValue]:
        return [b for b in self.bounds.values()
                if b.applicable and b.target == target and b.side == side]

    @property
    def best_lower(self) -> Optional[float]:
        """Largest applicable lower bound on γ_α, absolute."""
        values = [b.absolute for b in self.applicable('gamma_alpha', 'lower')]
        return max(values) if values else None

    @property
    def best_upper(self) -> Optional[float]:
        """Smallest applicable upper bound on γ_α, absolute."""
        values = [b.absolute for b in self.applicable('gamma_alpha', 'upper')]
        return min(values) if values else None

    @property
    def best_rate_upper(self) -> Optional[float]:
        """Smallest applicable upper bound on γ_×α, absolute."""
        values = [b.absolute for b in self.applicable('gamma_rate', 'upper')]
        return min(values) if values else None

    @property
    def edgeless(self) -> bool:
        return math.isinf(self.inputs.log_open)

    def to_dict(self) -> Dict[str, object]:
        inputs = self.inputs
        return {
            'graph': self.label,
            'n': inputs.n,
            'm': inputs.m,
            'min_degree': inputs.min_degree,
            'max_degree': inputs.max_degree,
            'alpha': str(inputs.alpha),
            'delta_hat': inputs.delta_hat,
            'log_open_degree': None if math.isinf(inputs.log_open) else inputs.log_open,
            'log_closed_degree': None if math.isinf(inputs.log_closed) else inputs.log_closed,
            'optimal_p': optimal_p(inputs),
            'bounds': {name: b.to_dict() for name, b in self.bounds.items()},
            'best_lower': self.best_lower,
            'best_upper': self.best_upper,
            'best_rate_upper': self.best_rate_upper,
            'note': _EDGELESS if self.edgeless else "",
        }

    def to_row(self) -> Dict[str, object]:
        """Flat record for CSV/text tables: one row per (graph, α)."""
        inputs = self.inputs
        row: Dict[str, object] = {
            'graph': self.label,
            'n': inputs.n,
            'm': inputs.m,
            'min_degree': inputs.min_degree,
            'max_degree': inputs.max_degree,
            'alpha': str(inputs.alpha),
            'delta_hat': inputs.delta_hat,
        }
        for name, b in self.bounds.items():
            row[name] = b.value
        row['best_lower'] = self.best_lower
        row['best_upper'] = self.best_upper
        row['best_rate_upper'] = self.best_rate_upper
        return row


def report_from_inputs(inputs: BoundInputs, label: str = "") -> BoundReport:
    report = BoundReport(inputs=inputs, label=label)
    degree_lower, degree_upper = dunbar_degree_bounds(inputs)
    edge_lower, edge_upper = dunbar_edge_bounds(inputs)

    for value in (degree_lower, degree_upper, edge_lower, edge_upper,
                  caro_roditty(inputs), classical_bound(inputs),
                  thm2_bound(inputs), cor1_bound(inputs),
                  thm3_bound(inputs), cor2_bound(inputs)):
        report.bounds[value.name] = value

    return report


def bound_report(graph: Graph, alpha: Alpha, label: str = "") -> BoundReport:
    """
    Evaluate every bound for a graph and α.

    Never raises for a valid graph: bounds whose hypotheses fail are
    flagged inapplicable with a reason.
    """
    return report_from_inputs(BoundInputs.from_graph(graph, alpha), label=label)
