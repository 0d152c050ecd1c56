"""
Constructive K_{s,t}-tilings of complete bipartite blocks K_{a,b}.

When (a, b) dominates (s, t), i.e. b/a <= t/s for a <= b, the block is cut
into copies with the s-part on the small side and copies with the s-part on
the large side, leaving at most tiling_constant(s, t) vertices uncovered.
"""
import logging

from typing import List, Sequence

from components.exceptions import DominationError, ParameterError
from components.graph_core import make_complete_bipartite
from components.tiling.model import Tile, Tiling

logger = logging.getLogger(__name__)


def dominates(a: int, b: int, s: int, t: int) -> bool:
    if min(a, b, s, t) <= 0:
        raise ParameterError(f"dominance needs positive sizes, got ({a}, {b}) against ({s}, {t})")
    return max(s, t) * min(a, b) >= max(a, b) * min(s, t)


def tiling_constant(s: int, t: int) -> int:
    s, t = min(s, t), max(s, t)
    if s < 1:
        raise ParameterError(f"class sizes must be positive, got {s}, {t}")
    return 2 * (s + t - 1) if s < t else 2 * (s - 1)


def tile_block(side_a: Sequence[int], side_b: Sequence[int], s: int, t: int) -> List[Tile]:
    """Tile the complete bipartite block between side_a and side_b with K_{s,t}.

    Vertices are consumed from the front of each side in the given order.
    """
    s, t = min(s, t), max(s, t)
    if not dominates(len(side_a), len(side_b), s, t):
        raise DominationError(f"({len(side_a)}, {len(side_b)}) does not dominate ({s}, {t})")
    if len(side_a) > len(side_b):
        side_a, side_b = side_b, side_a
    a, b = len(side_a), len(side_b)

    if s == t:
        return [
            Tile.complete_bipartite(side_a[k * s:(k + 1) * s], side_b[k * s:(k + 1) * s])
            for k in range(a // s)
        ]

    denominator = t * t - s * s
    forward = (b * t - a * s) // denominator
    backward = (a * t - b * s) // denominator
    tiles = [
        Tile.complete_bipartite(side_a[k * s:(k + 1) * s], side_b[k * t:(k + 1) * t])
        for k in range(forward)
    ]
    offset_a, offset_b = forward * s, forward * t
    tiles.extend(
        Tile.complete_bipartite(side_b[offset_b + k * s:offset_b + (k + 1) * s], side_a[offset_a + k * t:offset_a + (k + 1) * t])
        for k in range(backward)
    )
    return tiles


def tile_complete_bipartite(a: int, b: int, s: int, t: int) -> Tiling:
    host = make_complete_bipartite(a, b)
    tiles = tile_block(range(a), range(a, a + b), s, t)
    tiling = Tiling(host, tuple(tiles))
    logger.debug(f"K_({a},{b}) tiled by {len(tiles)} copies of K_({s},{t}), {a + b - tiling.size} uncovered")
    return tiling
