"""
Graph File Operations Module.

This module reads and writes graphs in two plain-text formats:

- Edge list: one "u v" pair per line, '#' comment lines, and an optional
  leading "n <count>" line. Vertices may be 0- or 1-based.
- DIMACS: 'c' comment lines, one "p edge n m" line, then m lines
  "e u v" with 1-based vertices.

Serialization always emits sorted edges so output is byte-stable.
"""

import os
from typing import List, Optional, Tuple

from .graph import Graph, build_graph


class GraphParseError(ValueError):
    """Exception raised when graph text cannot be parsed."""

    def __init__(self, message: str, line_num: Optional[int] = None):
        self.line_num = line_num
        if line_num is not None:
            message = f"line {line_num}: {message}"
        super().__init__(message)


def _parse_int(token: str, line_num: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"expected an integer, got '{token}'", line_num) from None


def parse_edge_list(text: str, base: int = 0) -> Graph:
    """
    Parse an edge-list document.

    Args:
        text: Document text
        base: Index of the first vertex in the file (0 or 1)

    Returns:
        Graph built with build_graph semantics

    Raises:
        GraphParseError: If a token is not an integer, a line has the
            wrong number of fields, or no vertex count can be determined
        GraphError: If an edge is invalid for the graph
    """
    if base not in (0, 1):
        raise GraphParseError(f"base must be 0 or 1, got {base}")

    declared_n = None
    edges: List[Tuple[int, int]] = []
    seen_content = False

    for line_num, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()

        if not line or line.startswith('#'):
            continue

        tokens = line.split()

        # The vertex-count header is only honoured as the first content line
        if not seen_content and tokens[0] == 'n':
            if len(tokens) != 2:
                raise GraphParseError("header must be 'n <count>'", line_num)
            declared_n = _parse_int(tokens[1], line_num)
            seen_content = True
            continue

        seen_content = True
        if len(tokens) != 2:
            raise GraphParseError(
                f"expected 'u v', got {len(tokens)} field(s)", line_num
            )

        u = _parse_int(tokens[0], line_num) - base
        v = _parse_int(tokens[1], line_num) - base
        if u < 0 or v < 0:
            raise GraphParseError(f"vertex below base {base}", line_num)
        edges.append((u, v))

    if declared_n is None:
        if not edges:
            raise GraphParseError("empty edge list without an 'n <count>' header")
        declared_n = max(max(u, v) for u, v in edges) + 1

    return build_graph(declared_n, edges)


def parse_dimacs(text: str) -> Graph:
    """
    Parse a DIMACS "edge" document.

    Args:
        text: Document text

    Returns:
        Graph whose distinct edge count equals the declared m

    Raises:
        GraphParseError: On a missing or repeated p-line, an edge before the
            p-line, malformed lines, or an edge-count mismatch
    """
    declared: Optional[Tuple[int, int]] = None
    edges: List[Tuple[int, int]] = []

    for line_num, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()

        if not line or line.startswith('c'):
            continue

        tokens = line.split()

        if tokens[0] == 'p':
            if declared is not None:
                raise GraphParseError("duplicate p-line", line_num)
            if len(tokens) != 4 or tokens[1] != 'edge':
                raise GraphParseError("p-line must be 'p edge <n> <m>'", line_num)
            declared = (_parse_int(tokens[2], line_num), _parse_int(tokens[3], line_num))
        elif tokens[0] == 'e':
            if declared is None:
                raise GraphParseError("edge line before p-line", line_num)
            if len(tokens) != 3:
                raise GraphParseError("edge line must be 'e <u> <v>'", line_num)
            u = _parse_int(tokens[1], line_num) - 1
            v = _parse_int(tokens[2], line_num) - 1
            if u < 0 or v < 0:
                raise GraphParseError("DIMACS vertices are 1-based", line_num)
            edges.append((u, v))
        else:
            raise GraphParseError(f"unknown line type '{tokens[0]}'", line_num)

    if declared is None:
        raise GraphParseError("missing p-line")

    n, m = declared
    graph = build_graph(n, edges)

    if graph.edge_count != m:
        raise GraphParseError(
            f"p-line declares {m} edge(s) but {graph.edge_count} distinct edge(s) found"
        )

    return graph


def to_edge_list(graph: Graph, base: int = 0) -> str:
    """Serialize a graph as an edge list with an explicit 'n' header."""
    lines = [f"n {graph.n}"]
    lines.extend(f"{u + base} {v + base}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def to_dimacs(graph: Graph) -> str:
    """Serialize a graph in DIMACS format with sorted 1-based edges."""
    lines = [f"p edge {graph.n} {graph.edge_count}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def detect_format(text: str) -> str:
    """
    Detect the format of a graph document by its leading token.

    Returns:
        'dimacs' if the first non-blank line starts with 'c' or 'p',
        otherwise 'edgelist'
    """
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        return 'dimacs' if line.split()[0] in ('c', 'p') else 'edgelist'
    return 'edgelist'


def parse_graph_text(text: str, base: int = 0) -> Graph:
    """Parse graph text in whichever format detect_format reports."""
    if detect_format(text) == 'dimacs':
        return parse_dimacs(text)
    return parse_edge_list(text, base=base)


def read_graph_file(filepath: str, base: int = 0) -> Graph:
    """
    Read and parse a graph file, auto-detecting the format.

    Args:
        filepath: Path to the graph file
        base: Vertex base for edge-list files

    Returns:
        Parsed Graph

    Raises:
        FileNotFoundError: If file doesn't exist
        GraphParseError: If file format is invalid
    """
    if not os.path.exists(filepath):
        raise FileNotFoundError(f"Graph file not found: {filepath}")

    with open(filepath, 'r', encoding='utf-8') as f:
        return parse_graph_text(f.read(), base=base)


def write_graph_file(graph: Graph, filepath: str, fmt: str = 'dimacs') -> None:
    """Write a graph to disk in 'dimacs' or 'edgelist' format."""
    text = to_dimacs(graph) if fmt == 'dimacs' else to_edge_list(graph)
    with open(filepath, 'w', encoding='utf-8') as f:
        f.write(text)
