"""
Edge-list text format.

    n m
    u v        (m lines, u < v, strictly increasing in lexicographic order)

Lines are separated by a single LF, fields by a single space, and the
canonical text ends with one LF after the last line.
"""
import re
import logging

from typing import List, Tuple

from components.exceptions import EdgeListError
from components.graph_core import Graph

logger = logging.getLogger(__name__)

_PAIR = re.compile(r"^(0|[1-9][0-9]*) (0|[1-9][0-9]*)$")


def write_edge_list(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.sorted_edges())
    return "\n".join(lines) + "\n"


def _parse_pair(line: str, number: int, what: str) -> Tuple[int, int]:
    match = _PAIR.match(line)
    if match is None:
        raise EdgeListError(f"malformed {what} {line!r}, expected two nonnegative integers separated by one space", number)
    return int(match.group(1)), int(match.group(2))


def read_edge_list(text: str) -> Graph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise EdgeListError("missing header", 1)
    n, m = _parse_pair(lines[0], 1, "header")
    if len(lines) - 1 != m:
        raise EdgeListError(f"header announces {m} edges but {len(lines) - 1} edge lines follow", 1)
    edges: List[Tuple[int, int]] = []
    previous = None
    for number, line in enumerate(lines[1:], start=2):
        u, v = _parse_pair(line, number, "edge")
        if u == v:
            raise EdgeListError(f"loop at vertex {u}", number)
        if u > v:
            raise EdgeListError(f"edge {u} {v} must be written with the smaller endpoint first", number)
        if v >= n:
            raise EdgeListError(f"endpoint {v} is not below n={n}", number)
        if previous is not None:
            if (u, v) == previous:
                raise EdgeListError(f"duplicate edge {u} {v}", number)
            if (u, v) < previous:
                raise EdgeListError(f"edge {u} {v} is out of order after {previous[0]} {previous[1]}", number)
        edges.append((u, v))
        previous = (u, v)
    logger.debug(f"Parsed edge list with {n} vertices and {m} edges")
    return Graph(n, edges)


def read_edge_list_file(path: str) -> Graph:
    with open(path, "r", encoding="utf-8", newline="") as f:
        return read_edge_list(f.read())


def write_edge_list_file(graph: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(write_edge_list(graph))
    logger.info(f"Graph with {graph.n} vertices and {graph.edge_count} edges saved to {path}")
