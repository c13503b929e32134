"""
Deterministic and seeded random graph generators.

Random generators are pure functions of (parameters, seed): each builds
its own numpy Generator from the seed and never touches global state.
"""

import logging
from typing import Iterable, Optional, Set, Tuple

import numpy as np

from .graph import Graph, GraphError, _from_edge_set

logger = logging.getLogger(__name__)

# Resampling cap for the configuration model
MAX_REGULAR_ATTEMPTS = 10_000


def gen_empty(n: int) -> Graph:
    """Edgeless graph on n vertices."""
    if n < 1:
        raise GraphError(f"empty graph needs n >= 1, got {n}")
    return _from_edge_set(n, ())


def gen_path(n: int) -> Graph:
    """Path P_n: 0-1-...-(n-1)."""
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return _from_edge_set(n, ((i, i + 1) for i in range(n - 1)))


def gen_cycle(n: int) -> Graph:
    """Cycle C_n: 0-1-...-(n-1)-0."""
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    edges = {(i, i + 1) for i in range(n - 1)}
    edges.add((0, n - 1))
    return _from_edge_set(n, edges)


def gen_complete(n: int) -> Graph:
    """Complete graph K_n."""
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return _from_edge_set(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def gen_petersen() -> Graph:
    """
    Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9,
    spokes i -- i+5.
    """
    pairs = []
    for i in range(5):
        pairs.append((i, (i + 1) % 5))
        pairs.append((5 + i, 5 + (i + 2) % 5))
        pairs.append((i, i + 5))
    return _from_edge_set(10, {(min(u, v), max(u, v)) for u, v in pairs})


def gen_circulant(n: int, offsets: Iterable[int]) -> Graph:
    """
    Circulant graph: vertex i is adjacent to i ± s (mod n) for each offset s.

    Args:
        n: Number of vertices, at least 3
        offsets: Distinct integers in [1, n/2]

    Returns:
        Circulant graph; every vertex has degree 2·|offsets|, minus one
        for the antipodal offset n/2 when n is even

    Raises:
        GraphError: If n < 3, offsets repeat, or an offset is out of range
    """
    if n < 3:
        raise GraphError(f"circulant needs n >= 3, got {n}")

    offsets = list(offsets)
    if len(set(offsets)) != len(offsets):
        raise GraphError(f"circulant offsets must be distinct: {offsets}")

    edges: Set[Tuple[int, int]] = set()
    for s in offsets:
        if not 1 <= s <= n // 2:
            raise GraphError(f"circulant offset {s} outside [1, {n // 2}]")
        for i in range(n):
            j = (i + s) % n
            edges.add((i, j) if i < j else (j, i))

    return _from_edge_set(n, edges)


def gen_gnp(n: int, prob: float, seed: int) -> Graph:
    """
    Erdős–Rényi G(n, p): one independent coin per vertex pair.

    Pairs are visited in lexicographic order (0,1), (0,2), ..., (n-2,n-1),
    so the graph is a deterministic function of (n, prob, seed).
    """
    if n < 1:
        raise GraphError(f"G(n,p) needs n >= 1, got {n}")
    if not 0.0 <= prob <= 1.0:
        raise GraphError(f"edge probability must be in [0, 1], got {prob}")

    rng = np.random.default_rng(seed)
    rows, cols = np.triu_indices(n, k=1)
    keep = rng.random(rows.size) < prob

    return _from_edge_set(n, zip(rows[keep].tolist(), cols[keep].tolist()))


def gen_random_regular(n: int, d: int, seed: int) -> Graph:
    """
    Random d-regular graph by the configuration model.

    Stubs are shuffled and paired; a pairing with a self-loop or a repeated
    edge is discarded and the shuffle repeated.

    Args:
        n: Number of vertices
        d: Common degree, 0 <= d < n with n·d even
        seed: Seed for the numpy Generator

    Returns:
        A simple d-regular graph

    Raises:
        GraphError: If the parameters are infeasible or no simple pairing
            was found within MAX_REGULAR_ATTEMPTS shuffles
    """
    if n < 1:
        raise GraphError(f"regular graph needs n >= 1, got {n}")
    if not 0 <= d < n:
        raise GraphError(f"degree must satisfy 0 <= d < n, got d={d}, n={n}")
    if (n * d) % 2 != 0:
        raise GraphError(f"n * d must be even, got n={n}, d={d}")

    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n), d)

    for attempt in range(1, MAX_REGULAR_ATTEMPTS + 1):
        edges = _try_pairing(rng.permutation(stubs))
        if edges is not None:
            logger.debug("regular(%d, %d) simple after %d attempt(s)", n, d, attempt)
            return _from_edge_set(n, edges)

    raise GraphError(
        f"no simple {d}-regular pairing on {n} vertices after {MAX_REGULAR_ATTEMPTS} attempts"
    )


def _try_pairing(stubs: np.ndarray) -> Optional[Set[Tuple[int, int]]]:
    edges = set()
    stub_iter = iter(stubs.tolist())
    for s1, s2 in zip(stub_iter, stub_iter):
        if s1 > s2:
            s1, s2 = s2, s1
        if s1 == s2 or (s1, s2) in edges:
            return None
        edges.add((s1, s2))
    return edges
