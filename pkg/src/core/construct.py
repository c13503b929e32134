"""
Randomized constructions of small α-dominating and α-rate dominating sets.

Both constructions draw a random set A (each vertex independently with
probability p, coins flipped in ascending vertex order) and then add a
repair set B:

- α-domination: B is every vertex outside A with fewer than ceil(α·d_v)
  neighbors in A.
- α-rate domination: for each vertex v with m = |N[v] ∩ A| < ceil(α·d_v),
  ceil(α·d_v) - m neighbors of v outside A are added to B, preferring
  neighbors already in B, then the lowest index. Deficits are measured
  against A only.

A best-of-trials driver repeats a construction with per-trial seeds, and
derandomize_alpha replaces the coins by the method of conditional
expectations.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import Decimal, localcontext
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np

from .bounds import BoundInputs, cor1_p, cor2_p, optimal_p, optimal_p_closed
from .domination import Alpha, Mode, ModeKind, ceil_alpha_times, verify
from .graph import Graph

logger = logging.getLogger(__name__)

# Working precision (decimal digits) for conditional expectations
EXPECTATION_PRECISION = 50


class ConstructionError(ValueError):
    """Exception raised when a construction cannot run or produced an invalid set."""
    pass


class PRule(Enum):
    THEOREM = 'thm'
    COROLLARY = 'cor'


@dataclass(frozen=True)
class ConstructionParams:
    """
    Settings shared by every trial of a construction.

    Attributes:
        trials: Number of independent trials for best_of_trials
        master_seed: Non-negative 64-bit seed all trial seeds derive from
        p_override: Fixed selection probability instead of the rule
        p_rule: THEOREM (minimizing p) or COROLLARY (min{1, ...} rule)
        greedy_repair: Measure deficits against the growing set instead of A
        workers: Worker processes for best_of_trials (1 = in-process)
    """
    trials: int = 1
    master_seed: int = 0
    p_override: Optional[float] = None
    p_rule: PRule = PRule.THEOREM
    greedy_repair: bool = False
    workers: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trials must be at least 1, got {self.trials}")
        if not 0 <= self.master_seed < 2 ** 64:
            raise ValueError(f"master_seed must be a 64-bit unsigned integer, got {self.master_seed}")
        if self.p_override is not None and not 0.0 <= self.p_override <= 1.0:
            raise ValueError(f"p_override must be in [0, 1], got {self.p_override}")
        if self.workers < 1:
            raise ValueError(f"workers must be at least 1, got {self.workers}")


@dataclass
class TrialOutcome:
    """A constructed set D = A ∪ B with everything needed to replay it."""
    mode: Mode
    D: Tuple[int, ...]
    A: Tuple[int, ...]
    B: Tuple[int, ...]
    p_used: float
    seed: int
    trial_index: int = 0

    @property
    def size(self) -> int:
        return len(self.D)

    def to_dict(self) -> Dict[str, object]:
        return {
            'mode': str(self.mode),
            'size': self.size,
            'D': list(self.D),
            'A': list(self.A),
            'B': list(self.B),
            'p_used': self.p_used,
            'seed': self.seed,
            'trial_index': self.trial_index,
        }


def trial_seed(master_seed: int, trial_index: int) -> int:
    """Derive the 64-bit seed of one trial from the master seed."""
    sequence = np.random.SeedSequence([master_seed, trial_index])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def selection_probability(graph: Graph, alpha: Alpha, params: ConstructionParams,
                          closed: bool = False) -> float:
    """
    Probability p with which vertices are drawn into A.

    Raises:
        ConstructionError: If the graph is edgeless and no override is
            given; the empty set is then optimal
    """
    if params.p_override is not None:
        return params.p_override

    inputs = BoundInputs.from_graph(graph, alpha)
    if params.p_rule == PRule.COROLLARY:
        p = cor2_p(inputs) if closed else cor1_p(inputs)
    else:
        p = optimal_p_closed(inputs) if closed else optimal_p(inputs)

    if p is None:
        raise ConstructionError(
            "α-degree is 0 (edgeless graph): the empty set is optimal, "
            "pass an explicit p to sample anyway"
        )
    return p


def _sample(graph: Graph, p: float, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.random(graph.n) < p


def _neighbor_counts(graph: Graph, mask: np.ndarray) -> np.ndarray:
    rows, cols = graph.csr
    counts = np.bincount(rows, weights=mask[cols].astype(np.float64), minlength=graph.n)
    return counts.astype(np.int64)


def _alpha_trial(graph: Graph, alpha: Alpha, p: float, seed: int,
                 greedy_repair: bool) -> Tuple[np.ndarray, np.ndarray]:
    thresholds = np.array([ceil_alpha_times(alpha, d) for d in graph.degrees], dtype=np.int64)
    in_a = _sample(graph, p, seed)

    if not greedy_repair:
        in_b = ~in_a & (_neighbor_counts(graph, in_a) < thresholds)
        return in_a, in_b

    in_b = np.zeros(graph.n, dtype=bool)
    in_d = in_a.copy()
    for v in range(graph.n):
        if in_d[v]:
            continue
        if sum(1 for u in graph.neighbors(v) if in_d[u]) < thresholds[v]:
            in_b[v] = in_d[v] = True
    return in_a, in_b


def _rate_trial(graph: Graph, alpha: Alpha, p: float, seed: int,
                greedy_repair: bool) -> Tuple[np.ndarray, np.ndarray]:
    thresholds = [ceil_alpha_times(alpha, d) for d in graph.degrees]
    in_a = _sample(graph, p, seed)
    closed_counts = _neighbor_counts(graph, in_a) + in_a
    in_b = np.zeros(graph.n, dtype=bool)

    for v in range(graph.n):
        if greedy_repair:
            have = sum(1 for u in graph.neighbors(v) if in_a[u] or in_b[u])
            have += int(in_a[v] or in_b[v])
        else:
            have = int(closed_counts[v])
        deficit = thresholds[v] - have
        if deficit <= 0:
            continue

        outside = [u for u in graph.neighbors(v) if not in_a[u]]
        if greedy_repair:
            ranked = [u for u in outside if not in_b[u]]
        else:
            ranked = [u for u in outside if in_b[u]] + [u for u in outside if not in_b[u]]

        if len(ranked) < deficit:
            raise ConstructionError(
                f"vertex {v} needs {deficit} more neighbor(s) but only "
                f"{len(ranked)} candidate(s) remain"
            )
        for u in ranked[:deficit]:
            in_b[u] = True

    return in_a, in_b


def _run_trial(graph: Graph, alpha: Alpha, kind: ModeKind, p: float, seed: int,
               trial_index: int, greedy_repair: bool) -> TrialOutcome:
    if kind == ModeKind.ALPHA:
        mode = Mode.alpha_mode(alpha)
        in_a, in_b = _alpha_trial(graph, alpha, p, seed, greedy_repair)
    elif kind == ModeKind.ALPHA_RATE:
        mode = Mode.alpha_rate(alpha)
        in_a, in_b = _rate_trial(graph, alpha, p, seed, greedy_repair)
    else:
        raise ConstructionError(f"no randomized construction for mode '{kind.value}'")

    in_b &= ~in_a
    members = np.flatnonzero(in_a | in_b).tolist()
    report = verify(graph, members, mode)
    if not report.valid:
        raise ConstructionError(
            f"trial {trial_index} produced an invalid {mode} set: {report.deficiencies}"
        )

    outcome = TrialOutcome(
        mode=mode,
        D=tuple(members),
        A=tuple(np.flatnonzero(in_a).tolist()),
        B=tuple(np.flatnonzero(in_b).tolist()),
        p_used=p,
        seed=seed,
        trial_index=trial_index,
    )
    logger.debug("trial %d (%s): |A|=%d |B|=%d", trial_index, mode,
                 len(outcome.A), len(outcome.B))
    return outcome


def construct_alpha(graph: Graph, alpha: Alpha, params: ConstructionParams,
                    trial_index: int = 0) -> TrialOutcome:
    """
    One trial of the random α-dominating set construction.

    Args:
        graph: The graph
        alpha: Domination parameter
        params: Probability rule / override and master seed
        trial_index: Which trial of the master seed to replay

    Returns:
        TrialOutcome whose D passes verify(graph, D, ALPHA(alpha))

    Raises:
        ConstructionError: If p is unavailable (edgeless graph, no override)
    """
    p = selection_probability(graph, alpha, params)
    return _run_trial(graph, alpha, ModeKind.ALPHA, p,
                      trial_seed(params.master_seed, trial_index),
                      trial_index, params.greedy_repair)


def construct_alpha_rate(graph: Graph, alpha: Alpha, params: ConstructionParams,
                         trial_index: int = 0) -> TrialOutcome:
    """
    One trial of the random α-rate dominating set construction.

    Returns:
        TrialOutcome whose D passes verify(graph, D, ALPHA_RATE(alpha))
    """
    p = selection_probability(graph, alpha, params, closed=True)
    return _run_trial(graph, alpha, ModeKind.ALPHA_RATE, p,
                      trial_seed(params.master_seed, trial_index),
                      trial_index, params.greedy_repair)


def _trial_worker(args) -> TrialOutcome:
    return _run_trial(*args)


def best_of_trials(graph: Graph, alpha: Alpha, kind: ModeKind,
                   params: ConstructionParams) -> TrialOutcome:
    """
    Run params.trials independent trials and keep the smallest set.

    Ties go to the lowest trial index, so the result does not depend on
    params.workers.
    """
    if kind not in (ModeKind.ALPHA, ModeKind.ALPHA_RATE):
        raise ConstructionError(f"no randomized construction for mode '{kind.value}'")

    p = selection_probability(graph, alpha, params, closed=kind == ModeKind.ALPHA_RATE)
    jobs = [
        (graph, alpha, kind, p, trial_seed(params.master_seed, i), i, params.greedy_repair)
        for i in range(params.trials)
    ]

    if params.workers > 1 and params.trials > 1:
        with ProcessPoolExecutor(max_workers=params.workers) as pool:
            outcomes = list(pool.map(_trial_worker, jobs))
    else:
        outcomes = [_trial_worker(job) for job in jobs]

    best = min(outcomes, key=lambda o: (o.size, o.trial_index))
    logger.info("best of %d %s trial(s): |D|=%d at trial %d (p=%.6f)",
                params.trials, kind.value, best.size, best.trial_index, p)
    return best


# ============================================
# Conditional-expectation derandomization
# ============================================

class _TailTable:
    """Memoized P(Bin(trials, p) <= k) in Decimal."""

    def __init__(self, p: Decimal):
        self.p = p
        self.q = 1 - p
        self._cache: Dict[Tuple[int, int], Decimal] = {}

    def cdf(self, k: int, trials: int) -> Decimal:
        if k < 0:
            return Decimal(0)
        if k >= trials or self.p == 0:
            return Decimal(1)
        if self.q == 0:
            return Decimal(0)
        key = (k, trials)
        if key not in self._cache:
            self._cache[key] = sum(
                (math.comb(trials, r) * self.p ** r * self.q ** (trials - r)
                 for r in range(k + 1)),
                Decimal(0),
            )
        return self._cache[key]


def expected_alpha_size(graph: Graph, alpha: Alpha, p: float) -> float:
    """
    Exact E(|A| + |B|) of the α-domination construction at bias p.

    A vertex lands in B when it is outside A and at most ceil(α·d_v) - 1
    of its d_v neighbors are in A.
    """
    with localcontext() as ctx:
        ctx.prec = EXPECTATION_PRECISION
        tails = _TailTable(Decimal(p))
        total = Decimal(0)
        for d in graph.degrees:
            t = ceil_alpha_times(alpha, d)
            total += tails.p + tails.q * tails.cdf(t - 1, d)
        return float(total)


def derandomize_alpha(graph: Graph, alpha: Alpha) -> Tuple[int, ...]:
    """
    Deterministic α-dominating set no larger than thm2_bound predicts.

    Vertices are decided in ascending order. For each, the conditional
    expectation of |A| + |B| given all decisions so far is evaluated
    with the vertex in A and out of A, and the smaller branch is kept
    (ties keep the vertex out). Only the vertex and its neighbors change
    their contribution, so each step costs O(d·Δ) tail lookups.

    Returns:
        Sorted vertex tuple D; empty when the α-degree is 0
    """
    inputs = BoundInputs.from_graph(graph, alpha)
    p = optimal_p(inputs)
    if p is None:
        return ()

    thresholds = [ceil_alpha_times(alpha, d) for d in graph.degrees]
    decided: List[Optional[bool]] = [None] * graph.n
    chosen_nbrs = [0] * graph.n
    open_nbrs = list(graph.degrees)

    with localcontext() as ctx:
        ctx.prec = EXPECTATION_PRECISION
        tails = _TailTable(Decimal(p))

        def term(v: int, state: Optional[bool], chosen: int, undecided: int) -> Decimal:
            if state is True:
                return Decimal(1)
            tail = tails.cdf(thresholds[v] - 1 - chosen, undecided)
            if state is False:
                return tail
            return tails.p + tails.q * tail

        for w in range(graph.n):
            branch = {}
            for choice in (True, False):
                total = term(w, choice, chosen_nbrs[w], open_nbrs[w])
                for x in graph.neighbors(w):
                    total += term(x, decided[x], chosen_nbrs[x] + choice, open_nbrs[x] - 1)
                branch[choice] = total

            keep = branch[True] < branch[False]
            decided[w] = keep
            for x in graph.neighbors(w):
                open_nbrs[x] -= 1
                chosen_nbrs[x] += keep

    members = [v for v in range(graph.n)
               if decided[v] or chosen_nbrs[v] < thresholds[v]]

    report = verify(graph, members, Mode.alpha_mode(alpha))
    if not report.valid:
        raise ConstructionError(f"derandomized set is invalid: {report.deficiencies}")

    logger.info("derandomized α-dominating set: |D|=%d (p=%.6f)", len(members), p)
    return tuple(members)
