"""
Brute-force optimal solver for the five domination numbers.

Candidate sizes are tried in ascending order starting from a sound lower
bound; within a size, subsets are enumerated in lexicographic order by a
depth-first search over bitmasks. The first valid subset found is
therefore the lexicographically least set of minimum size.

A branch is cut when some vertex that can no longer join the set (open
modes) or any vertex at all (closed modes) is short of more neighbors
than there are free slots or undecided candidates around it.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .bounds import BoundInputs, dunbar_degree_bounds_exact, dunbar_edge_bounds_exact
from .domination import Mode, ModeKind
from .graph import Graph

logger = logging.getLogger(__name__)

# Largest graph the solver accepts
MAX_EXACT_VERTICES = 24


class SizeLimitError(ValueError):
    """Exception raised when a graph is too large for exhaustive search."""
    pass


@dataclass
class ExactResult:
    """Minimum size, its lexicographically least witness, and search effort."""
    value: int
    witness: Tuple[int, ...]
    mode: Mode
    nodes_explored: int

    def to_dict(self) -> Dict[str, object]:
        return {
            'mode': str(self.mode),
            'value': self.value,
            'witness': list(self.witness),
            'nodes_explored': self.nodes_explored,
        }


def _ceil(value: Fraction) -> int:
    return max(0, math.ceil(value))


def lower_bound(graph: Graph, mode: Mode) -> int:
    """
    Sound floor for the search: never exceeds the true optimum.

    α modes use the degree and edge lower bounds on γ_α (which also bound
    γ_×α from below). The other modes use edge-counting floors.
    """
    n, big_delta = graph.n, graph.max_degree
    thresholds = mode.thresholds(graph)

    if mode.kind == ModeKind.DOM:
        return _ceil(Fraction(n, big_delta + 1))
    if mode.kind == ModeKind.K_DOM:
        return _ceil(Fraction(mode.k * n, big_delta + mode.k))
    if mode.kind == ModeKind.K_TUPLE:
        return _ceil(Fraction(mode.k * n, big_delta + 1))

    floors = [0]
    if mode.kind == ModeKind.ALPHA_RATE:
        floors.append(_ceil(Fraction(sum(thresholds), big_delta + 1)))

    inputs = BoundInputs.from_graph(graph, mode.alpha)
    degree = dunbar_degree_bounds_exact(inputs)
    if degree is not None:
        floors.append(_ceil(degree[0] * n))
    edge = dunbar_edge_bounds_exact(inputs)
    if edge is not None:
        floors.append(_ceil(edge[0]))
    return max(floors)


class _Search:
    """Depth-first lexicographic subset search for one mode."""

    def __init__(self, graph: Graph, mode: Mode):
        self.n = graph.n
        self.closed = mode.closed
        self.thresholds = mode.thresholds(graph)
        masks = graph.neighbor_masks
        if self.closed:
            masks = tuple(mask | (1 << v) for v, mask in enumerate(masks))
        self.masks = masks
        self.demanding = [v for v in range(self.n) if self.thresholds[v] > 0]
        self.nodes = 0

    def _feasible(self, chosen: int, pos: int, slots: int) -> bool:
        undecided = ((1 << self.n) - 1) >> pos << pos
        for v in self.demanding:
            bit = 1 << v
            if not self.closed and (chosen & bit or undecided & bit):
                continue
            deficit = self.thresholds[v] - (self.masks[v] & chosen).bit_count()
            if deficit <= 0:
                continue
            if deficit > slots or deficit > (self.masks[v] & undecided).bit_count():
                return False
        return True

    def _valid(self, chosen: int) -> bool:
        for v in self.demanding:
            if not self.closed and chosen >> v & 1:
                continue
            if (self.masks[v] & chosen).bit_count() < self.thresholds[v]:
                return False
        return True

    def find(self, size: int) -> Optional[int]:
        """Lexicographically least valid set of exactly this size, as a bitmask."""
        return self._extend(0, 0, size)

    def _extend(self, chosen: int, pos: int, slots: int) -> Optional[int]:
        self.nodes += 1
        if slots == 0:
            return chosen if self._valid(chosen) else None
        if not self._feasible(chosen, pos, slots):
            return None
        for v in range(pos, self.n - slots + 1):
            found = self._extend(chosen | (1 << v), v + 1, slots - 1)
            if found is not None:
                return found
        return None


def exact_number(graph: Graph, mode: Mode) -> ExactResult:
    """
    Compute a domination number exactly.

    Args:
        graph: Graph with at most MAX_EXACT_VERTICES vertices
        mode: Domination condition

    Returns:
        ExactResult with the lexicographically least minimum witness

    Raises:
        SizeLimitError: If the graph is larger than MAX_EXACT_VERTICES
        ModeUndefinedError: For K_TUPLE(k) on a graph with δ < k-1
    """
    if graph.n > MAX_EXACT_VERTICES:
        raise SizeLimitError(
            f"exact search is capped at {MAX_EXACT_VERTICES} vertices, graph has {graph.n}; "
            f"use the bounds or construct commands instead"
        )

    search = _Search(graph, mode)
    start = lower_bound(graph, mode)

    for size in range(start, graph.n + 1):
        found = search.find(size)
        logger.debug("%s size %d: %s after %d node(s)", mode, size,
                     "found" if found is not None else "none", search.nodes)
        if found is not None:
            witness = tuple(v for v in range(graph.n) if found >> v & 1)
            return ExactResult(value=size, witness=witness, mode=mode,
                               nodes_explored=search.nodes)

    # V(G) satisfies every defined mode, so the loop always returns
    raise AssertionError(f"no valid {mode} set found on {graph.n} vertices")
