"""
Seeded random instances with known structure: planted tilings, planted
augmentations, tilings by complete bipartite blocks and bipartite pairs.
"""
import random
import logging

from itertools import combinations
from typing import List, Set, Tuple

from components.exceptions import ParameterError
from components.graph_core import Edge, Graph, relabel
from components.tiling import Tile, Tiling

logger = logging.getLogger(__name__)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_bipartite(rng: random.Random, size_a: int, size_b: int, p: float) -> Tuple[Graph, List[int], List[int]]:
    """Random bipartite graph, randomly relabelled; returns the graph and its sides."""
    n = size_a + size_b
    graph = Graph(n, [(u, v) for u in range(size_a) for v in range(size_a, n) if rng.random() < p])
    mapping = list(range(n))
    rng.shuffle(mapping)
    return relabel(graph, mapping), sorted(mapping[:size_a]), sorted(mapping[size_a:])


def _complete_edges(tile: Tile) -> Set[Edge]:
    return {(min(u, v), max(u, v)) for u in tile.v1 for v in tile.v2}


def _blocks_instance(rng: random.Random, sizes: List[Tuple[int, int]], extra: int,
                     p: float) -> Tuple[Graph, Tiling, List[int]]:
    n = sum(a + b for a, b in sizes) + extra
    order = list(range(n))
    rng.shuffle(order)
    tiles, cursor = [], 0
    for a, b in sizes:
        tiles.append(Tile.complete_bipartite(order[cursor:cursor + a], order[cursor + a:cursor + a + b]))
        cursor += a + b
    edges = {(u, v) for u, v in combinations(range(n), 2) if rng.random() < p}
    for tile in tiles:
        edges |= _complete_edges(tile)
    host = Graph(n, edges)
    return host, Tiling(host, tuple(tiles)), order[cursor:]


def planted_tiling(rng: random.Random, s: int, t: int, tiles: int, extra: int, p: float) -> Tuple[Graph, Tiling]:
    """Disjoint planted copies of K_{s,t} on shuffled vertices plus G(n, p) noise."""
    graph, tiling, _ = _blocks_instance(rng, [(s, t)] * tiles, extra, p)
    return graph, tiling


def augmentable_instance(rng: random.Random, s: int, t: int, tiles: int, extra: int, p: float) -> Tuple[Graph, Tiling]:
    """A planted K_{s,t}-tiling that always admits an augmentation.

    The first leftover vertex sees a V1 vertex of the first tile, and the V2
    parts of consecutive tiles are joined in a cycle.
    """
    if tiles < 2 or extra < 1:
        raise ParameterError("an augmentable instance needs two tiles and a leftover vertex")
    graph, tiling, leftover = _blocks_instance(rng, [(s, t)] * tiles, extra, p)
    edges = set(graph.edges)
    x = leftover[0]
    u = rng.choice(tiling.tiles[0].v1)
    edges.add((min(x, u), max(x, u)))
    for k in range(tiles):
        a = rng.choice(tiling.tiles[k].v2)
        b = rng.choice(tiling.tiles[(k + 1) % tiles].v2)
        edges.add((min(a, b), max(a, b)))
    host = Graph(graph.n, edges)
    return host, Tiling(host, tiling.tiles)


def hand_built_augmentation() -> Tuple[Graph, Tiling]:
    """Two K_{1,2} tiles {0 | 1 2} and {3 | 4 5}, a leftover 6 joined to 0,
    and the single V2 cross edge 2-4."""
    tiles = (Tile.complete_bipartite((0,), (1, 2)), Tile.complete_bipartite((3,), (4, 5)))
    graph = Graph(7, [(0, 1), (0, 2), (3, 4), (3, 5), (0, 6), (2, 4)])
    return graph, Tiling(graph, tiles)


def dominating_sizes(rng: random.Random, s: int, t: int) -> Tuple[int, int]:
    """Random class sizes (a, b), a <= b, dominating (s, t)."""
    a = rng.randint(1, 2 * t)
    return a, rng.randint(a, a * t // s)


def random_block_tiling(rng: random.Random, s: int, t: int, tiles: int, extra: int, p: float) -> Tuple[Graph, Tiling]:
    """A tiling by complete bipartite blocks whose class sizes dominate (s, t)."""
    sizes = [dominating_sizes(rng, s, t) for _ in range(tiles)]
    graph, tiling, _ = _blocks_instance(rng, sizes, extra, p)
    return graph, tiling


def concentrated_pair(size: int) -> Tuple[Graph, List[int], List[int]]:
    """Pair (A, B) of equal sides where only the first half of A has edges, all of them to B."""
    side_a, side_b = list(range(size)), list(range(size, 2 * size))
    return Graph(2 * size, [(u, v) for u in side_a[:size // 2] for v in side_b]), side_a, side_b
