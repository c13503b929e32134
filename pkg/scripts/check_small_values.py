#!/usr/bin/env python3
"""
Independent exhaustive check of small domination numbers.

Builds the graphs with networkx and tries every vertex subset in order
of size. Shares no code with src.core, so its answers can be compared
with the branch-and-bound solver.

Usage:
    python scripts/check_small_values.py
"""

import argparse
import math
import sys
from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, List, Tuple

import networkx as nx


# (graph name, condition name) -> known minimum size
KNOWN_VALUES: Dict[Tuple[str, str], int] = {
    ('C5', 'dom'): 2,
    ('C5', 'alpha=1'): 3,
    ('C5', 'rate=1/2'): 2,
    ('K4', 'alpha=1'): 3,
    ('K4', 'tuple=2'): 2,
}

GRAPHS: Dict[str, Callable[[], nx.Graph]] = {
    'C5': lambda: nx.cycle_graph(5),
    'K4': lambda: nx.complete_graph(4),
}


def _needed(alpha: Fraction, degree: int) -> int:
    return math.ceil(alpha * degree)


def satisfies(graph: nx.Graph, chosen: set, condition: str) -> bool:
    """Check one domination condition by direct neighbor counting."""
    name, _, arg = condition.partition('=')
    for v in graph.nodes:
        hits = sum(1 for u in graph.neighbors(v) if u in chosen)
        if name == 'dom':
            if v not in chosen and hits < 1:
                return False
        elif name == 'alpha':
            if v not in chosen and hits < _needed(Fraction(arg), graph.degree(v)):
                return False
        elif name == 'rate':
            closed_hits = hits + (v in chosen)
            if closed_hits < _needed(Fraction(arg), graph.degree(v)):
                return False
        elif name == 'tuple':
            if hits + (v in chosen) < int(arg):
                return False
        else:
            raise ValueError(f"unknown condition '{condition}'")
    return True


def minimum_size(graph: nx.Graph, condition: str) -> int:
    nodes = sorted(graph.nodes)
    for size in range(len(nodes) + 1):
        for subset in combinations(nodes, size):
            if satisfies(graph, set(subset), condition):
                return size
    raise ValueError(f"no set satisfies '{condition}'")


def check_all() -> List[Tuple[str, str, int, int]]:
    """Return (graph, condition, expected, found) for every known value."""
    results = []
    for (graph_name, condition), expected in KNOWN_VALUES.items():
        found = minimum_size(GRAPHS[graph_name](), condition)
        results.append((graph_name, condition, expected, found))
    return results


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    parser.parse_args(argv)

    failures = 0
    for graph_name, condition, expected, found in check_all():
        status = "ok" if expected == found else "MISMATCH"
        failures += expected != found
        print(f"{graph_name:4} {condition:10} expected {expected}  found {found}  {status}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
