from components.tiling.blocks import dominates, tile_block, tile_complete_bipartite, tiling_constant
from components.tiling.copies import enumerate_copies, find_copy
from components.tiling.model import Tile, Tiling, complete_bipartite_tag, format_tiling, parse_tiling
from components.tiling.packing import ExactTilingResult, max_tiling_exact, max_tiling_greedy
from components.tiling.patterns import ColorClasses, Pattern, color_classes, isolated_vertex_relation
from components.tiling.retiling import retile

__all__ = [
    "ColorClasses",
    "ExactTilingResult",
    "Pattern",
    "Tile",
    "Tiling",
    "color_classes",
    "complete_bipartite_tag",
    "dominates",
    "enumerate_copies",
    "find_copy",
    "format_tiling",
    "isolated_vertex_relation",
    "max_tiling_exact",
    "max_tiling_greedy",
    "parse_tiling",
    "retile",
    "tile_block",
    "tile_complete_bipartite",
    "tiling_constant",
]
