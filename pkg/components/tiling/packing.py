import random
import logging

from typing import List, NamedTuple, Tuple

import constants

from components.graph_core import Graph
from components.tiling.copies import enumerate_copies, find_copy
from components.tiling.model import Tile, Tiling
from components.tiling.patterns import Pattern

logger = logging.getLogger(__name__)


class ExactTilingResult(NamedTuple):
    tiling: Tiling
    optimal: bool
    nodes: int


def _mask(tile: Tile) -> int:
    mask = 0
    for v in tile.v1 + tile.v2:
        mask |= 1 << v
    return mask


def _first_fit(masks: List[int]) -> Tuple[int, ...]:
    blocked, chosen = 0, []
    for index, mask in enumerate(masks):
        if not mask & blocked:
            blocked |= mask
            chosen.append(index)
    return tuple(chosen)


def max_tiling_exact(graph: Graph, pattern: Pattern, budget: int = constants.DEFAULT_NODE_BUDGET,
                     cap: int = constants.DEFAULT_COPY_CAP) -> ExactTilingResult:
    """Maximum number of vertex-disjoint copies by branch and bound.

    Each node branches on the lowest open vertex: every copy through it that
    fits, in lexicographic order, then leaving the vertex uncovered. A node is
    pruned when the copies so far plus (open useful vertices) // |P| cannot
    beat the incumbent, or when its open vertex set was already reached with
    at least as many copies. Past ``budget`` nodes the incumbent is returned with
    ``optimal`` unset.
    """
    copies = enumerate_copies(graph, pattern, cap)
    masks = [_mask(tile) for tile in copies]
    through = [[] for _ in range(graph.n)]
    for index, tile in enumerate(copies):
        for v in tile.vertices:
            through[v].append(index)
    useful = 0
    for mask in masks:
        useful |= mask
    order = pattern.order

    best = _first_fit(masks)
    nodes = 0
    optimal = True
    # open vertex set -> most copies chosen when it was first searched
    reached = {}
    stack = [(0, ())]
    while stack:
        blocked, chosen = stack.pop()
        open_vertices = useful & ~blocked
        if len(chosen) + open_vertices.bit_count() // order <= len(best) or reached.get(open_vertices, -1) >= len(chosen):
            continue
        reached[open_vertices] = len(chosen)
        nodes += 1
        if nodes > budget:
            optimal = False
            break
        if not open_vertices:
            best = chosen
            continue
        v = (open_vertices & -open_vertices).bit_length() - 1
        children = [(blocked | masks[i], chosen + (i,)) for i in through[v] if not masks[i] & blocked]
        children.append((blocked | (1 << v), chosen))
        stack.extend(reversed(children))

    tiling = Tiling(graph, tuple(copies[i] for i in best))
    if optimal:
        logger.debug(f"Exact {pattern.tag}-tiling: {tiling.tile_count} tiles after {nodes} nodes")
    else:
        logger.warning(f"Node budget {budget} exhausted; best {pattern.tag}-tiling found has {tiling.tile_count} tiles")
    return ExactTilingResult(tiling, optimal, nodes)


def max_tiling_greedy(graph: Graph, pattern: Pattern, seed: int = 0) -> Tiling:
    """A maximal tiling: visit vertices in a seeded random order and take any copy through each free one."""
    order = list(graph.vertices)
    random.Random(seed).shuffle(order)
    free = set(graph.vertices)
    tiles = []
    for v in order:
        tile = find_copy(graph, pattern, v, free)
        if tile is not None:
            tiles.append(tile)
            free.difference_update(tile.vertices)
    logger.debug(f"Greedy {pattern.tag}-tiling with seed {seed}: {len(tiles)} tiles")
    return Tiling(graph, tuple(tiles))
