"""
Graph corpora used to cross-check bounds, constructions and the exact solver.
"""

from typing import Dict, List

import networkx as nx

from .generators import (
    gen_circulant,
    gen_complete,
    gen_cycle,
    gen_gnp,
    gen_path,
    gen_petersen,
    gen_random_regular,
)
from .graph import Graph, build_graph


def from_networkx(nx_graph: nx.Graph) -> Graph:
    """Convert a networkx graph with integer-labelled nodes to a Graph."""
    mapping = {node: i for i, node in enumerate(sorted(nx_graph.nodes()))}
    edges = [(mapping[u], mapping[v]) for u, v in nx_graph.edges()]
    return build_graph(len(mapping), edges)


def connected_small_graphs(max_n: int = 7) -> List[Graph]:
    """
    Every connected graph on 1..max_n vertices, one per isomorphism class.

    Drawn from the networkx graph atlas, which catalogues all graphs with
    up to seven vertices.
    """
    if not 1 <= max_n <= 7:
        raise ValueError(f"the graph atlas covers 1..7 vertices, got max_n={max_n}")

    graphs = []
    for nx_graph in nx.graph_atlas_g():
        order = nx_graph.number_of_nodes()
        if 1 <= order <= max_n and nx.is_connected(nx_graph):
            graphs.append(from_networkx(nx_graph))
    return graphs


def construction_corpus() -> Dict[str, Graph]:
    """Ten fixed graphs exercising regular, sparse, dense and uneven degrees."""
    return {
        'cycle:5': gen_cycle(5),
        'path:8': gen_path(8),
        'complete:6': gen_complete(6),
        'petersen': gen_petersen(),
        'circulant:20:1,3': gen_circulant(20, [1, 3]),
        'circulant:101:1-10': gen_circulant(101, range(1, 11)),
        'regular:50:4:11': gen_random_regular(50, 4, 11),
        'regular:30:3:5': gen_random_regular(30, 3, 5),
        'gnp:40:0.2:3': gen_gnp(40, 0.2, 3),
        'gnp:25:0.5:9': gen_gnp(25, 0.5, 9),
    }
