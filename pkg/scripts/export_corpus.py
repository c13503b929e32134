#!/usr/bin/env python3
"""
Write every connected graph on at most N vertices as edge-list files.

Each graph goes to <out>/atlas_<index>_n<order>.txt in the canonical
edge-list format (an 'n <count>' header, then sorted 0-based edges).

Usage:
    python scripts/export_corpus.py --out corpus/ --max-n 7
"""

import argparse
import logging
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.core.corpus import connected_small_graphs
from src.core.graph_io import write_graph_file

logger = logging.getLogger("export_corpus")


def export(out_dir: str, max_n: int) -> int:
    """Write the corpus to out_dir and return the number of files."""
    os.makedirs(out_dir, exist_ok=True)
    graphs = connected_small_graphs(max_n)
    for index, graph in enumerate(graphs):
        path = os.path.join(out_dir, f"atlas_{index:04d}_n{graph.n}.txt")
        write_graph_file(graph, path, fmt='edgelist')
    logger.info("wrote %d graphs to %s", len(graphs), out_dir)
    return len(graphs)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Export the small connected-graph corpus.")
    parser.add_argument('--out', required=True, help="output directory")
    parser.add_argument('--max-n', type=int, default=7, help="largest order (at most 7)")
    args = parser.parse_args(argv)

    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    try:
        export(args.out, args.max_n)
    except (ValueError, OSError) as exc:
        logger.error("%s", exc)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
