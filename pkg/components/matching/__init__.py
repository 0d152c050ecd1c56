"""
Maximum matchings, bipartite and general, and the Konig-corollary edge bound
e(G[A,B]) <= nu * max(|A|, |B|).
"""
import logging

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Tuple

from components.exceptions import NonBipartiteError, ParameterError
from components.graph_core import Edge, Graph
from components.matching.bipartite import HopcroftKarp
from components.matching.blossom import UNMATCHED, BlossomMatcher

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Matching:
    edges: FrozenSet[Edge]

    def __post_init__(self) -> None:
        canonical = frozenset((u, v) if u < v else (v, u) for u, v in self.edges)
        seen = set()
        for u, v in canonical:
            if u in seen or v in seen:
                raise ParameterError(f"edge ({u}, {v}) shares an endpoint with another matching edge")
            seen.update((u, v))
        object.__setattr__(self, "edges", canonical)

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(x for edge in self.edges for x in edge)

    @property
    def mate(self) -> Dict[int, int]:
        mate = {}
        for u, v in self.edges:
            mate[u] = v
            mate[v] = u
        return mate

    def is_in(self, graph: Graph) -> bool:
        return all(graph.has_edge(u, v) for u, v in self.edges)


@dataclass(frozen=True)
class KonigBound:
    nu: int
    bound: int
    holds: bool
    edges: int


def _bipartite_sides(graph: Graph, side_a: Iterable[int], side_b: Iterable[int]) -> Tuple[List[int], FrozenSet[int]]:
    side_a = sorted(set(side_a))
    side_b = frozenset(side_b)
    overlap = side_b.intersection(side_a)
    if overlap:
        raise ParameterError(f"sides overlap in vertices {sorted(overlap)}")
    set_a = frozenset(side_a)
    for u, v in graph.edges:
        if (u in set_a and v in set_a) or (u in side_b and v in side_b):
            raise NonBipartiteError(f"edge ({u}, {v}) lies inside one side", edge=(u, v))
    return side_a, side_b


def max_matching_bipartite(graph: Graph, side_a: Iterable[int], side_b: Iterable[int]) -> Matching:
    side_a, side_b = _bipartite_sides(graph, side_a, side_b)
    graph_left = {u: sorted(v for v in graph.neighbors(u) if v in side_b) for u in side_a}
    size, pairs = HopcroftKarp(graph_left).get_maximum_matching_num()
    logger.debug(f"Bipartite matching on {len(side_a)} + {len(side_b)} vertices: {size} edges")
    return Matching(frozenset(pairs.items()))


def max_matching_general(graph: Graph) -> Matching:
    adjacency = [sorted(graph.neighbors(v)) for v in range(graph.n)]
    mate = BlossomMatcher(adjacency).run()
    edges = frozenset((u, v) for u, v in enumerate(mate) if v != UNMATCHED and u < v)
    logger.debug(f"General matching on {graph.n} vertices: {len(edges)} edges")
    return Matching(edges)


def matching_edge_bound(graph: Graph, side_a: Iterable[int], side_b: Iterable[int]) -> KonigBound:
    side_a, side_b = sorted(set(side_a)), sorted(set(side_b))
    nu = len(max_matching_bipartite(graph, side_a, side_b))
    bound = nu * max(len(side_a), len(side_b))
    edges = graph.cross_edge_count(side_a, side_b)
    return KonigBound(nu=nu, bound=bound, holds=edges <= bound, edges=edges)
