"""
Graph representation for the domination toolkit.

A Graph is an immutable, canonical simple undirected graph on vertices
0..n-1. Every downstream module (verification, bounds, constructions,
exact search) iterates adjacency in the sorted order stored here, which
keeps tie-breaking reproducible.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Tuple

import numpy as np

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class GraphError(ValueError):
    """Exception raised when a graph cannot be built from the given input."""
    pass


@dataclass(frozen=True)
class Graph:
    """
    Immutable simple undirected graph.

    Attributes:
        n: Number of vertices (identified 0..n-1)
        edges: Sorted tuple of (u, v) pairs with u < v
        adjacency: Per-vertex ascending neighbor tuples
        duplicate_edges: How many repeated edges were collapsed on build
    """
    n: int
    edges: Tuple[Edge, ...]
    adjacency: Tuple[Tuple[int, ...], ...]
    duplicate_edges: int = field(default=0, compare=False)

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        """Degree sequence d_0..d_{n-1}."""
        return tuple(len(nbrs) for nbrs in self.adjacency)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        """Open neighborhood N(v), ascending."""
        return self.adjacency[v]

    def closed_neighbors(self, v: int) -> Tuple[int, ...]:
        """Closed neighborhood N[v], ascending."""
        return tuple(sorted(self.adjacency[v] + (v,)))

    @cached_property
    def degree_array(self) -> np.ndarray:
        return np.fromiter(self.degrees, dtype=np.int64, count=self.n)

    @cached_property
    def csr(self) -> Tuple[np.ndarray, np.ndarray]:
        """
        Adjacency in compressed sparse row form.

        Returns:
            Tuple of (rows, cols) arrays listing every directed arc, so that
            np.bincount(rows, weights=mask[cols]) counts neighbors in a set.
        """
        degrees = self.degree_array
        rows = np.repeat(np.arange(self.n, dtype=np.int64), degrees)
        cols = np.fromiter(
            (u for nbrs in self.adjacency for u in nbrs),
            dtype=np.int64,
            count=int(degrees.sum()),
        )
        return rows, cols

    @cached_property
    def neighbor_masks(self) -> Tuple[int, ...]:
        """Open neighborhoods as integer bitmasks (bit u set for u in N(v))."""
        masks = []
        for nbrs in self.adjacency:
            mask = 0
            for u in nbrs:
                mask |= 1 << u
            masks.append(mask)
        return tuple(masks)

    def to_dict(self) -> Dict[str, object]:
        """Convert to a JSON-friendly dictionary."""
        return {
            'n': self.n,
            'm': self.edge_count,
            'min_degree': self.min_degree,
            'max_degree': self.max_degree,
            'edges': [list(e) for e in self.edges],
        }


def build_graph(n: int, edges: Iterable[Edge]) -> Graph:
    """
    Build a canonical Graph from a vertex count and an edge list.

    Duplicate edges (in either orientation) are collapsed to one and
    counted in Graph.duplicate_edges.

    Args:
        n: Number of vertices, at least 1
        edges: Iterable of (u, v) pairs with endpoints in [0, n)

    Returns:
        Canonical Graph

    Raises:
        GraphError: If n < 1, an endpoint is out of range, or an edge
            is a self-loop
    """
    if n < 1:
        raise GraphError(f"Graph must have at least one vertex, got n={n}")

    seen = set()
    duplicates = 0

    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"Edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"Self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            duplicates += 1
        else:
            seen.add(key)

    if duplicates:
        logger.warning("Collapsed %d duplicate edge(s)", duplicates)

    return _from_edge_set(n, seen, duplicates)


def _from_edge_set(n: int, edge_set: Iterable[Edge], duplicates: int = 0) -> Graph:
    """Assemble a Graph from already-validated (u < v) pairs."""
    sorted_edges = tuple(sorted(edge_set))
    neighbor_lists: List[List[int]] = [[] for _ in range(n)]

    for u, v in sorted_edges:
        neighbor_lists[u].append(v)
        neighbor_lists[v].append(u)

    adjacency = tuple(tuple(sorted(nbrs)) for nbrs in neighbor_lists)
    return Graph(n=n, edges=sorted_edges, adjacency=adjacency,
                 duplicate_edges=duplicates)
