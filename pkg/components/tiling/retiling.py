import logging

from typing import Optional

from components.exceptions import DominationError, ParameterError
from components.graph_core import ExpansionMap, Graph, expand
from components.tiling.blocks import dominates, tile_block
from components.tiling.model import Tiling

logger = logging.getLogger(__name__)


def retile(tiling: Tiling, expansion: ExpansionMap, s: int, t: int, host: Optional[Graph] = None) -> Tiling:
    """Lift every complete bipartite tile through the expansion and re-tile the
    lifted block with K_{s,t}.

    ``host`` may be passed when the expanded graph is already built.
    """
    if expansion.base_n != tiling.host.n:
        raise ParameterError(f"expansion of {expansion.base_n} vertices applied to a host on {tiling.host.n}")
    if host is None:
        host, _ = expand(tiling.host, expansion.r)
    elif host.n != expansion.n:
        raise ParameterError(f"expanded host has {host.n} vertices, expected {expansion.n}")

    tiles = []
    for tile in tiling.tiles:
        if not tile.is_complete_bipartite:
            raise ParameterError(f"only complete bipartite tiles can be retiled, got {tile.tag}")
        a, b = len(tile.v1) * expansion.r, len(tile.v2) * expansion.r
        if not dominates(a, b, s, t):
            raise DominationError(f"tile {tile.tag} does not dominate ({s}, {t})")
        tiles.extend(tile_block(expansion.lift(tile.v1), expansion.lift(tile.v2), s, t))

    retiled = Tiling(host, tuple(tiles))
    logger.debug(f"Retiled {tiling.tile_count} tiles through a {expansion.r}-expansion: "
                 f"{retiled.size} of {tiling.size * expansion.r} lifted vertices covered")
    return retiled
