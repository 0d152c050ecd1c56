"""
Bipartite patterns H and their minimal colouring, with V1 the small class.
"""
import logging

from collections import deque
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Tuple

from components.exceptions import NonBipartiteError, ParameterError
from components.graph_core import Graph, make_complete_bipartite
from components.tiling.model import complete_bipartite_tag

logger = logging.getLogger(__name__)

GENERAL_TAG = "H"


class ColorClasses(NamedTuple):
    v1: Tuple[int, ...]
    v2: Tuple[int, ...]
    s: int
    t: int


def _odd_walk(parent: List[Optional[int]], u: int, v: int) -> List[int]:
    # u and v share a colour and an edge; their tree paths close an odd walk.
    walk_u = [u]
    while parent[walk_u[-1]] is not None:
        walk_u.append(parent[walk_u[-1]])
    walk_v = [v]
    while parent[walk_v[-1]] is not None:
        walk_v.append(parent[walk_v[-1]])
    return walk_u + walk_v[-2::-1]


def color_classes(graph: Graph) -> ColorClasses:
    """Proper 2-colouring minimising the first class.

    Each component contributes its smaller side to V1; a balanced component
    contributes the side holding its lowest vertex. Isolated vertices go to V2.
    """
    color: List[Optional[int]] = [None] * graph.n
    parent: List[Optional[int]] = [None] * graph.n
    v1, v2 = [], []
    for start in graph.vertices:
        if color[start] is not None:
            continue
        if graph.degree(start) == 0:
            color[start] = 1
            v2.append(start)
            continue
        color[start] = 0
        sides = ([start], [])
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in sorted(graph.neighbors(v)):
                if color[u] is None:
                    color[u] = 1 - color[v]
                    parent[u] = v
                    sides[color[u]].append(u)
                    queue.append(u)
                elif color[u] == color[v]:
                    walk = _odd_walk(parent, v, u)
                    raise NonBipartiteError(
                        f"graph is not bipartite: odd closed walk {walk}", odd_walk=walk, edge=(min(u, v), max(u, v))
                    )
        small, large = sides if len(sides[0]) <= len(sides[1]) else (sides[1], sides[0])
        v1.extend(small)
        v2.extend(large)
    return ColorClasses(tuple(sorted(v1)), tuple(sorted(v2)), len(v1), len(v2))


@dataclass(frozen=True)
class Pattern:
    graph: Graph
    v1: Tuple[int, ...]
    v2: Tuple[int, ...]
    tag: str

    @property
    def s(self) -> int:
        return len(self.v1)

    @property
    def t(self) -> int:
        return len(self.v2)

    @property
    def order(self) -> int:
        return self.graph.n

    @property
    def is_complete_bipartite(self) -> bool:
        return self.s >= 1 and self.graph.edge_count == self.s * self.t

    @classmethod
    def from_graph(cls, graph: Graph, allow_isolated: bool = False, tag: Optional[str] = None) -> "Pattern":
        if graph.n == 0:
            raise ParameterError("a pattern needs at least one vertex")
        isolated = [v for v in graph.vertices if graph.degree(v) == 0]
        if isolated and not allow_isolated:
            raise ParameterError(f"pattern has isolated vertices {isolated}")
        classes = color_classes(graph)
        pattern = cls(graph, classes.v1, classes.v2, tag or GENERAL_TAG)
        if pattern.is_complete_bipartite:
            pattern = cls(graph, classes.v1, classes.v2, complete_bipartite_tag(classes.s, classes.t))
        logger.debug(f"Pattern {pattern.tag} on {graph.n} vertices: s={pattern.s}, t={pattern.t}")
        return pattern

    @classmethod
    def complete_bipartite(cls, s: int, t: int) -> "Pattern":
        if not 1 <= s <= t:
            raise ParameterError(f"class sizes must satisfy 1 <= s <= t, got s={s}, t={t}")
        return cls(make_complete_bipartite(s, t), tuple(range(s)), tuple(range(s, s + t)), complete_bipartite_tag(s, t))


def isolated_vertex_relation(order_H: int, order_H_prime: int, n: int, x_prime: int) -> int:
    """Vertices covered by a maximum H-tiling, where H' is H without its
    isolated vertices and x' is covered by a maximum H'-tiling of the host."""
    if order_H_prime < 1 or order_H < order_H_prime or n < 0 or x_prime < 0:
        raise ParameterError(
            f"need 1 <= |H'| <= |H| and nonnegative n, x', got {order_H}, {order_H_prime}, {n}, {x_prime}"
        )
    if x_prime % order_H_prime:
        raise ParameterError(f"x'={x_prime} is not a multiple of |H'|={order_H_prime}")
    return min(order_H * (n // order_H), x_prime // order_H_prime * order_H)
