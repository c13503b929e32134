"""
Experiment tables comparing the bounds with constructions and exact values.

- paper-example: the 1000-regular graph at α = 1/10, where the
  probabilistic bound beats the degree bound by a wide margin
- alpha-sweep: every bound across the α grid for one graph, with exact
  γ, γ_α and γ_×α when the graph is small enough
- family-sweep: a fixed family of generated graphs at one α, with the
  best-of-trials and derandomized construction sizes beside the bounds
"""

import logging
import math
from typing import Callable, Dict, List, Optional, Tuple

from ..core.bounds import BoundInputs, BoundReport, bound_report, report_from_inputs
from ..core.construct import best_of_trials, derandomize_alpha
from ..core.domination import Alpha, Mode, ModeKind
from ..core.exact import exact_number
from ..core.graph import Graph
from .config import DEFAULTS, ConfigError, RunConfig, graph_from_spec, parse_alpha

logger = logging.getLogger(__name__)

Rows = List[Dict[str, object]]

# Tolerance when rounding float bounds to integers
ROUNDING_SLACK = 1e-9

PAPER_EXAMPLE = {
    'n': 2001,
    'degree': 1000,
    'alpha': '1/10',
    'thm2_claim': 0.305,
    'dunbar_claim': 0.527,
}


def integral_lower(value: Optional[float]) -> int:
    """Smallest integer a lower bound allows (0 when there is none)."""
    if value is None:
        return 0
    return max(0, math.ceil(value - ROUNDING_SLACK))


def integral_upper(value: Optional[float]) -> Optional[int]:
    """Largest integer an upper bound allows (None when there is none)."""
    if value is None:
        return None
    return math.floor(value + ROUNDING_SLACK)


def sandwich_holds(report: BoundReport, gamma: int, gamma_alpha: int, gamma_rate: int) -> bool:
    """
    Check exact values against a bound report.

    Requires ceil(best lower) <= γ_α <= floor(best upper),
    γ_α <= γ_×α and γ_×α <= floor(best rate upper). γ <= γ_α is only
    required without isolated vertices, which need no neighbor under α.
    """
    if not integral_lower(report.best_lower) <= gamma_alpha:
        return False
    upper = integral_upper(report.best_upper)
    if upper is not None and gamma_alpha > upper:
        return False
    rate_upper = integral_upper(report.best_rate_upper)
    if rate_upper is not None and gamma_rate > rate_upper:
        return False
    if report.inputs.min_degree >= 1 and gamma > gamma_alpha:
        return False
    return gamma_alpha <= gamma_rate


def paper_example(config: RunConfig) -> Tuple[Dict[str, object], Rows]:
    """Bounds for a 1000-regular graph on 2001 vertices at α = 1/10."""
    alpha = parse_alpha(PAPER_EXAMPLE['alpha'])
    inputs = BoundInputs.for_regular(PAPER_EXAMPLE['n'], PAPER_EXAMPLE['degree'], alpha)
    report = report_from_inputs(inputs, label="1000-regular")

    thm2 = report.bounds['thm2'].value
    dunbar = report.bounds['dunbar_degree_upper'].value
    row = {
        'graph': report.label,
        'n': inputs.n,
        'degree': inputs.max_degree,
        'alpha': str(alpha),
        'delta_hat': inputs.delta_hat,
        'log_alpha_degree': inputs.log_open,
        'thm2': thm2,
        'cor1': report.bounds['cor1'].value,
        'dunbar_degree_upper': dunbar,
        'thm2_below_claim': thm2 < PAPER_EXAMPLE['thm2_claim'],
        'dunbar_below_claim': dunbar < PAPER_EXAMPLE['dunbar_claim'],
    }
    return {'experiment': 'paper-example', 'report': report.to_dict(), 'rows': [row]}, [row]


def _exact_columns(graph: Graph, alpha: Alpha) -> Dict[str, int]:
    return {
        'gamma': exact_number(graph, Mode.dom()).value,
        'gamma_alpha': exact_number(graph, Mode.alpha_mode(alpha)).value,
        'gamma_rate': exact_number(graph, Mode.alpha_rate(alpha)).value,
    }


def sweep_alpha(graph: Graph, label: str, alphas: List[Alpha],
                exact_max_n: int = DEFAULTS['exact_sweep_max_n']) -> Rows:
    """
    One row per α: every bound, plus exact values and the sandwich check
    when graph.n <= exact_max_n.
    """
    rows = []
    with_exact = graph.n <= exact_max_n
    for alpha in alphas:
        report = bound_report(graph, alpha, label=label)
        row = report.to_row()
        if with_exact:
            exact = _exact_columns(graph, alpha)
            row.update(exact)
            row['sandwich_ok'] = sandwich_holds(report, exact['gamma'],
                                                exact['gamma_alpha'], exact['gamma_rate'])
        rows.append(row)
        logger.debug("alpha-sweep %s at α=%s done", label, alpha)
    return rows


def alpha_sweep(config: RunConfig) -> Tuple[Dict[str, object], Rows]:
    if not config.has_graph_source:
        raise ConfigError("alpha-sweep needs a graph: --in <path> or --gen <spec>")
    graph = config.load_graph()
    alphas = [parse_alpha(text) for text in DEFAULTS['alpha_grid']]
    rows = sweep_alpha(graph, config.graph_label, alphas)
    return {'experiment': 'alpha-sweep', 'graph': graph.to_dict(), 'rows': rows}, rows


def family_row(spec: str, graph: Graph, alpha: Alpha, config: RunConfig) -> Dict[str, object]:
    report = bound_report(graph, alpha, label=spec)
    row: Dict[str, object] = {
        'graph': spec,
        'n': graph.n,
        'm': graph.edge_count,
        'min_degree': graph.min_degree,
        'max_degree': graph.max_degree,
        'alpha': str(alpha),
        'thm2_abs': report.bounds['thm2'].absolute,
        'cor1_abs': report.bounds['cor1'].absolute,
        'dunbar_degree_upper_abs': report.bounds['dunbar_degree_upper'].absolute,
        'thm3_abs': report.bounds['thm3'].absolute,
    }

    if report.edgeless:
        row['best_trial_size'] = 0
        row['best_rate_trial_size'] = 0
    else:
        params = config.construction_params()
        row['best_trial_size'] = best_of_trials(graph, alpha, ModeKind.ALPHA, params).size
        row['best_rate_trial_size'] = best_of_trials(graph, alpha, ModeKind.ALPHA_RATE, params).size
    row['derandomized_size'] = len(derandomize_alpha(graph, alpha))

    if graph.n <= DEFAULTS['exact_sweep_max_n']:
        row['gamma_alpha'] = exact_number(graph, Mode.alpha_mode(alpha)).value
    else:
        row['gamma_alpha'] = None
    return row


def family_sweep(config: RunConfig) -> Tuple[Dict[str, object], Rows]:
    alpha = config.alpha or parse_alpha(DEFAULTS['alpha'])
    rows = []
    for spec in DEFAULTS['family']:
        rows.append(family_row(spec, graph_from_spec(spec), alpha, config))
        logger.info("family-sweep %s done", spec)
    document = {
        'experiment': 'family-sweep',
        'alpha': str(alpha),
        'seed': config.seed,
        'trials': config.trials,
        'rows': rows,
    }
    return document, rows


EXPERIMENTS: Dict[str, Callable[[RunConfig], Tuple[Dict[str, object], Rows]]] = {
    'paper-example': paper_example,
    'alpha-sweep': alpha_sweep,
    'family-sweep': family_sweep,
}


def run_experiment(name: str, config: RunConfig) -> Tuple[Dict[str, object], Rows]:
    """
    Run a named experiment.

    Raises:
        ConfigError: If the experiment name is unknown
    """
    if name not in EXPERIMENTS:
        raise ConfigError(f"unknown experiment '{name}'; choose from {', '.join(EXPERIMENTS)}")
    return EXPERIMENTS[name](config)
