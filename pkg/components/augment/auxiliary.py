"""
The auxiliary graph of a tiling.

Nodes are the uncovered host vertices (leftovers), one lilliput per tile
standing for its V1 part and one giant per tile standing for its V2 part:

    leftover k   -> node k                 (0 <= k < m)
    lilliput k   -> node m + k             (0 <= k < r)
    giant k      -> node m + r + k         (0 <= k < r)

A leftover x is joined to the lilliput (giant) of tile K when x has a host
neighbour in V1(K) (V2(K)); two giants are joined when some host edge runs
between their V2 parts. Leftovers and lilliputs carry no other edges.
"""
import logging

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Tuple

from components.exceptions import ParameterError
from components.graph_core import Graph
from components.tiling import Tiling

logger = logging.getLogger(__name__)

LEFTOVER = "leftover"
LILLIPUT = "lilliput"
GIANT = "giant"


@dataclass(frozen=True)
class AuxiliaryGraph:
    host: Graph
    tiling: Tiling
    leftover: Tuple[int, ...]
    graph: Graph

    @property
    def m(self) -> int:
        return len(self.leftover)

    @property
    def r(self) -> int:
        return self.tiling.tile_count

    def leftover_node(self, k: int) -> int:
        return k

    def lilliput(self, k: int) -> int:
        return self.m + k

    def giant(self, k: int) -> int:
        return self.m + self.r + k

    @property
    def leftover_nodes(self) -> range:
        return range(self.m)

    @property
    def lilliputs(self) -> range:
        return range(self.m, self.m + self.r)

    @property
    def giants(self) -> range:
        return range(self.m + self.r, self.m + 2 * self.r)

    def kind(self, node: int) -> Tuple[str, int]:
        """Node kind and its index among leftovers or tiles."""
        if node < self.m:
            return LEFTOVER, node
        if node < self.m + self.r:
            return LILLIPUT, node - self.m
        return GIANT, node - self.m - self.r

    def coupled(self, node: int) -> int:
        """The giant of a lilliput's tile, or the lilliput of a giant's tile."""
        kind, k = self.kind(node)
        if kind == LILLIPUT:
            return self.giant(k)
        if kind == GIANT:
            return self.lilliput(k)
        raise ParameterError(f"leftover node {node} has no coupled partner")

    @cached_property
    def host_vertex_node(self) -> Dict[int, int]:
        return {x: k for k, x in enumerate(self.leftover)}

    def between(self, left: Iterable[int], right: Iterable[int]) -> Graph:
        """The bipartite part of the auxiliary graph between two node sets."""
        left, right = set(left), set(right)
        return Graph(self.graph.n, [
            (u, v) for u, v in self.graph.edges
            if (u in left and v in right) or (u in right and v in left)
        ])


def build_auxiliary(graph: Graph, tiling: Tiling) -> AuxiliaryGraph:
    if tiling.host.n != graph.n:
        raise ParameterError(f"tiling lives on {tiling.host.n} vertices, host has {graph.n}")
    problems = Tiling(graph, tiling.tiles).violations()
    if problems:
        raise ParameterError(f"invalid tiling: {problems[0]}")
    if not all(tile.is_complete_bipartite for tile in tiling.tiles):
        raise ParameterError("the auxiliary graph needs a tiling by complete bipartite graphs")

    owner = tiling.tile_index()
    small = tiling.v1
    leftover = tiling.uncovered
    m, r = len(leftover), tiling.tile_count
    edges = set()
    for k, x in enumerate(leftover):
        for u in graph.neighbors(x):
            if u in owner:
                edges.add((k, m + owner[u] if u in small else m + r + owner[u]))
    for u, v in graph.edges:
        if u in owner and v in owner and u not in small and v not in small and owner[u] != owner[v]:
            a, b = m + r + owner[u], m + r + owner[v]
            edges.add((min(a, b), max(a, b)))

    auxiliary = AuxiliaryGraph(graph, Tiling(graph, tiling.tiles), leftover, Graph(m + 2 * r, edges))
    logger.debug(f"Auxiliary graph: {m} leftovers, {r} tiles, {len(edges)} edges")
    return auxiliary
