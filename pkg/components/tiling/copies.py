"""
Copy enumeration: every subgraph of a host isomorphic to a pattern.

Complete bipartite patterns go through common-neighbourhood enumeration;
other patterns through a backtracking monomorphism search that extends
along pattern edges.
"""
import logging

from itertools import combinations
from typing import AbstractSet, Iterator, List, Optional, Sequence, Tuple

import constants

from components.exceptions import CapacityError
from components.graph_core import Graph
from components.tiling.model import Tile
from components.tiling.patterns import Pattern

logger = logging.getLogger(__name__)


def _copy_order(tile: Tile) -> Tuple:
    return tile.vertices, tile.v1, tile.v2


def _complete_bipartite_copies(graph: Graph, s: int, t: int) -> Iterator[Tile]:
    def extend(start: int, chosen: List[int], common: AbstractSet[int]) -> Iterator[Tile]:
        if len(chosen) == s:
            for large in combinations(sorted(common), t):
                # K_{s,s} shows up once from each side; keep the copy whose small class holds the lower minimum.
                if s == t and large[0] < chosen[0]:
                    continue
                yield Tile.complete_bipartite(chosen, large)
            return
        for v in range(start, graph.n):
            narrowed = common & graph.neighbors(v) if chosen else graph.neighbors(v)
            if len(narrowed) >= t:
                yield from extend(v + 1, chosen + [v], narrowed)

    yield from extend(0, [], frozenset())


def _search_order(pattern: Graph, first: int) -> List[int]:
    order, seen = [], set()
    for root in [first] + list(pattern.vertices):
        if root in seen:
            continue
        seen.add(root)
        frontier = [root]
        while frontier:
            p = frontier.pop(0)
            order.append(p)
            for q in sorted(pattern.neighbors(p)):
                if q not in seen:
                    seen.add(q)
                    frontier.append(q)
    return order


def _embeddings(graph: Graph, pattern: Pattern, first: int = 0, anchor: Optional[int] = None,
                allowed: Optional[AbstractSet[int]] = None) -> Iterator[Tuple[int, ...]]:
    """Injective homomorphisms of the pattern into the host, as image tuples.

    With an anchor, pattern vertex ``first`` is pinned to it.
    """
    shape = pattern.graph
    order = _search_order(shape, first)
    position = {p: i for i, p in enumerate(order)}
    earlier = [[q for q in shape.neighbors(p) if position[q] < i] for i, p in enumerate(order)]
    image: List[Optional[int]] = [None] * shape.n
    used = set()

    def candidates(i: int) -> Sequence[int]:
        if i == 0 and anchor is not None:
            return [anchor]
        if earlier[i]:
            return sorted(graph.neighbors(image[earlier[i][0]]))
        return graph.vertices

    def backtrack(i: int) -> Iterator[Tuple[int, ...]]:
        if i == shape.n:
            yield tuple(image)
            return
        p = order[i]
        for c in candidates(i):
            if c in used or (allowed is not None and c not in allowed):
                continue
            if graph.degree(c) < shape.degree(p):
                continue
            if all(graph.has_edge(c, image[q]) for q in earlier[i]):
                image[p] = c
                used.add(c)
                yield from backtrack(i + 1)
                used.discard(c)
                image[p] = None

    yield from backtrack(0)


def _tile_from_embedding(pattern: Pattern, image: Tuple[int, ...]) -> Tile:
    return Tile(pattern.tag, tuple(image[p] for p in pattern.v1), tuple(image[p] for p in pattern.v2), embedding=image)


def _general_copies(graph: Graph, pattern: Pattern) -> Iterator[Tile]:
    seen = set()
    for image in _embeddings(graph, pattern):
        key = frozenset((min(image[p], image[q]), max(image[p], image[q])) for p, q in pattern.graph.edges)
        key = (key, frozenset(image))
        if key not in seen:
            seen.add(key)
            yield _tile_from_embedding(pattern, image)


def enumerate_copies(graph: Graph, pattern: Pattern, cap: int = constants.DEFAULT_COPY_CAP) -> List[Tile]:
    """All copies of the pattern, sorted by their sorted vertex lists.

    Raises CapacityError as soon as more than ``cap`` copies are found.
    """
    source = (
        _complete_bipartite_copies(graph, pattern.s, pattern.t)
        if pattern.is_complete_bipartite
        else _general_copies(graph, pattern)
    )
    copies = []
    for tile in source:
        copies.append(tile)
        if len(copies) > cap:
            raise CapacityError(f"more than {cap} copies of {pattern.tag} in a host on {graph.n} vertices")
    copies.sort(key=_copy_order)
    logger.debug(f"Enumerated {len(copies)} copies of {pattern.tag} on {graph.n} vertices")
    return copies


def find_copy(graph: Graph, pattern: Pattern, anchor: int, allowed: AbstractSet[int]) -> Optional[Tile]:
    """First copy through ``anchor`` using only ``allowed`` vertices, or None."""
    if anchor not in allowed:
        return None
    for first in pattern.graph.vertices:
        for image in _embeddings(graph, pattern, first=first, anchor=anchor, allowed=allowed):
            if pattern.is_complete_bipartite:
                return Tile.complete_bipartite((image[p] for p in pattern.v1), (image[p] for p in pattern.v2))
            return _tile_from_embedding(pattern, image)
    return None
