"""
Local improvements of a K_{s,t}-tiling F in a host G.

* An F1-improvement matches leftovers to giants and moves one V2 vertex of
  each matched tile into a K2 with its leftover.
* An F-augmentation (E0, E1) pairs leftovers with V1 vertices (E0) and V2
  vertices of different tiles with each other (E1). Applied in the
  t-expansion of G it gains exactly |E0| covered vertices over t|F|.
"""
import logging

from collections import Counter
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Tuple

from components.augment.auxiliary import AuxiliaryGraph, build_auxiliary
from components.exceptions import InvalidAugmentationError, ParameterError
from components.graph_core import Edge, ExpansionMap, Graph, expand
from components.matching import max_matching_bipartite, max_matching_general
from components.tiling import Tile, Tiling

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Augmentation:
    """``e0`` edges run (uncovered vertex, V1 vertex); ``e1`` edges lie inside V2(F)."""
    e0: Tuple[Edge, ...]
    e1: Tuple[Edge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "e0", tuple(sorted(self.e0)))
        object.__setattr__(self, "e1", tuple(sorted((min(u, v), max(u, v)) for u, v in self.e1)))

    @property
    def is_empty(self) -> bool:
        return not self.e0 and not self.e1


class AppliedAugmentation(NamedTuple):
    graph: Graph
    expansion: ExpansionMap
    tiling: Tiling


def _tile_sizes(tiling: Tiling) -> Tuple[int, int]:
    sizes = {tile.class_sizes for tile in tiling.tiles}
    if len(sizes) != 1:
        raise ParameterError(f"expected a tiling by one K_(s,t), found class sizes {sorted(sizes)}")
    return sizes.pop()


def find_f1_improvement(graph: Graph, tiling: Tiling) -> Optional[Tiling]:
    """Match leftovers to giants; each matched pair (x, V2(K)) turns K into
    K - y plus the edge xy, for the lowest y in N(x) within V2(K)."""
    if any(len(tile.v2) < 2 for tile in tiling.tiles):
        raise ParameterError("an F1-improvement needs t >= 2")
    auxiliary = build_auxiliary(graph, tiling)
    matching = max_matching_bipartite(
        auxiliary.between(auxiliary.leftover_nodes, auxiliary.giants), auxiliary.leftover_nodes, auxiliary.giants
    )
    if not matching.size:
        return None

    tiles = list(tiling.tiles)
    extra = []
    for a, b in sorted(matching.edges):
        _, x_index = auxiliary.kind(a)
        _, k = auxiliary.kind(b)
        x = auxiliary.leftover[x_index]
        tile = tiles[k]
        y = min(v for v in tile.v2 if graph.has_edge(x, v))
        tiles[k] = Tile.complete_bipartite(tile.v1, [v for v in tile.v2 if v != y])
        extra.append(Tile.complete_bipartite((x,), (y,)))
    improved = Tiling(graph, tuple(tiles + extra))
    logger.debug(f"F1-improvement: {matching.size} leftovers absorbed, {tiling.size} -> {improved.size} covered")
    return improved


def _lowest_cross_edge(graph: Graph, part: Tuple[int, ...], other: Tuple[int, ...]) -> Edge:
    other = set(other)
    return min((min(u, v), max(u, v)) for u in part for v in graph.neighbors(u) if v in other)


def find_augmentation(graph: Graph, tiling: Tiling) -> Optional[Augmentation]:
    """Build (E0, E1) from a leftover-lilliput matching M and a giant matching T.

    T only uses giant edges touching a giant coupled with an M-matched
    lilliput; E0 keeps the M-edges whose coupled giant T matches.
    """
    auxiliary = build_auxiliary(graph, tiling)
    matching = max_matching_bipartite(
        auxiliary.between(auxiliary.leftover_nodes, auxiliary.lilliputs), auxiliary.leftover_nodes, auxiliary.lilliputs
    )
    if not matching.size:
        return None
    lilliput_of = {}
    for a, b in matching.edges:
        leftover, lilliput = (a, b) if a < auxiliary.m else (b, a)
        lilliput_of[auxiliary.coupled(lilliput)] = (leftover, lilliput)

    coupled_giants = set(lilliput_of)
    giant_graph = Graph(auxiliary.graph.n, [
        (u, v) for u, v in auxiliary.graph.edges
        if u >= auxiliary.m + auxiliary.r and (u in coupled_giants or v in coupled_giants)
    ])
    giant_matching = max_matching_general(giant_graph)
    if not giant_matching.size:
        return None

    e1 = []
    for u, v in sorted(giant_matching.edges):
        first, second = tiling.tiles[auxiliary.kind(u)[1]], tiling.tiles[auxiliary.kind(v)[1]]
        e1.append(_lowest_cross_edge(graph, first.v2, second.v2))
    e0 = []
    for giant in sorted(giant_matching.vertices & coupled_giants):
        leftover, lilliput = lilliput_of[giant]
        x = auxiliary.leftover[leftover]
        tile = tiling.tiles[auxiliary.kind(lilliput)[1]]
        e0.append((x, min(u for u in tile.v1 if graph.has_edge(x, u))))

    augmentation = Augmentation(tuple(e0), tuple(e1))
    logger.debug(f"Augmentation found: |E0|={len(e0)}, |E1|={len(e1)}")
    return augmentation


def validate_augmentation(graph: Graph, tiling: Tiling, augmentation: Augmentation) -> List[str]:
    problems = [f"tiling: {problem}" for problem in Tiling(graph, tiling.tiles).violations()]
    owner = tiling.tile_index()
    small, large = tiling.v1, tiling.v2

    touched = Counter()
    for u, v in augmentation.e0 + augmentation.e1:
        touched[u] += 1
        touched[v] += 1
    for v, count in sorted(touched.items()):
        if count > 1:
            problems.append(f"vertex {v} is matched {count} times")

    e0_tiles, e1_tiles = Counter(), Counter()
    for x, u in augmentation.e0:
        if x in owner and u not in owner:
            x, u = u, x
        if not graph.has_edge(x, u):
            problems.append(f"E0 edge ({x}, {u}) is not a host edge")
        if x in owner:
            problems.append(f"E0 edge ({x}, {u}) does not start at an uncovered vertex")
        if u not in small:
            problems.append(f"E0 edge ({x}, {u}) does not end in V1(F)")
        else:
            e0_tiles[owner[u]] += 1
    for u, v in augmentation.e1:
        if not graph.has_edge(u, v):
            problems.append(f"E1 edge ({u}, {v}) is not a host edge")
        for w in (u, v):
            if w in large:
                e1_tiles[owner[w]] += 1
            else:
                problems.append(f"E1 edge ({u}, {v}) has endpoint {w} outside V2(F)")

    for k in sorted(set(e0_tiles) | set(e1_tiles)):
        if e0_tiles[k] > 1:
            problems.append(f"tile {k}: two matched vertices in one tile (E0)")
        if e1_tiles[k] > 1:
            problems.append(f"tile {k}: two matched vertices in one tile (E1)")
        if e0_tiles[k] and not e1_tiles[k]:
            problems.append(f"tile {k}: has an E0 vertex but no E1 vertex")
    return problems


def apply_augmentation(graph: Graph, tiling: Tiling, augmentation: Augmentation,
                       t: Optional[int] = None) -> AppliedAugmentation:
    """Realise the augmentation in the t-expansion.

    Every tile lifts to K_{st,t^2}. A tile whose V2 vertex v is E1-matched
    gives up the fibre of v, which pairs with the fibre of its E1 partner
    copy by copy. A tile whose V1 vertex u is E0-matched with x also gives up
    copy 0 of u, which forms a K2 with copy 0 of x.
    """
    problems = validate_augmentation(graph, tiling, augmentation)
    if problems:
        raise InvalidAugmentationError(f"invalid augmentation: {problems[0]} ({len(problems)} problems)")
    if tiling.tiles:
        sizes_s, sizes_t = _tile_sizes(tiling)
        if t is not None and t != sizes_t:
            raise ParameterError(f"t={t} disagrees with the tiling's class size {sizes_t}")
        if not sizes_s < sizes_t:
            raise ParameterError(f"augmentations need s < t, got s={sizes_s}, t={sizes_t}")
        t = sizes_t
    elif t is None:
        raise ParameterError("t is required to expand an empty tiling")

    expanded, expansion = expand(graph, t)
    small = tiling.v1
    e0 = [(u, x) if x in small else (x, u) for x, u in augmentation.e0]
    released = {expansion.vertex(u, 0) for _, u in e0}
    e1_matched = {w for edge in augmentation.e1 for w in edge}

    tiles = []
    for tile in tiling.tiles:
        v1 = [w for w in expansion.lift(tile.v1) if w not in released]
        v2 = expansion.lift(v for v in tile.v2 if v not in e1_matched)
        tiles.append(Tile.complete_bipartite(v1, v2))
    for u, v in augmentation.e1:
        tiles.extend(Tile.complete_bipartite((expansion.vertex(u, j),), (expansion.vertex(v, j),)) for j in range(t))
    for x, u in e0:
        tiles.append(Tile.complete_bipartite((expansion.vertex(x, 0),), (expansion.vertex(u, 0),)))

    applied = Tiling(expanded, tuple(tiles))
    logger.debug(f"Augmentation applied in the {t}-expansion: {tiling.size} -> {applied.size} covered")
    return AppliedAugmentation(expanded, expansion, applied)
