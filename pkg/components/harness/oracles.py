"""
Brute-force reference computations for small instances.

They share no code with the algorithms they check beyond the Graph type.
"""
import logging

from itertools import combinations, product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from components.graph_core import Graph

logger = logging.getLogger(__name__)


def matching_number(graph: Graph) -> int:
    """Maximum matching size by exhaustive search on the lowest free vertex."""
    def search(free: FrozenSet[int]) -> int:
        if not free:
            return 0
        v = min(free)
        rest = free - {v}
        best = search(rest)
        for u in graph.neighbors(v):
            if u in rest:
                best = max(best, 1 + search(rest - {u}))
        return best

    return search(frozenset(graph.vertices))


def min_color_class(graph: Graph) -> Optional[int]:
    """Smallest first class over every proper 2-colouring, or None if there is none."""
    best = None
    for colors in product((0, 1), repeat=graph.n):
        if all(colors[u] != colors[v] for u, v in graph.edges):
            size = colors.count(0)
            best = size if best is None else min(best, size)
    return best


def max_packing(copies: Sequence[FrozenSet[int]], n: int) -> int:
    """Maximum number of pairwise disjoint vertex sets, by plain recursion."""
    through: Dict[int, List[FrozenSet[int]]] = {v: [] for v in range(n)}
    for copy in copies:
        for v in copy:
            through[v].append(copy)

    def search(free: FrozenSet[int]) -> int:
        useful = [v for v in sorted(free) if through[v]]
        if not useful:
            return 0
        v = useful[0]
        best = search(free - {v})
        for copy in through[v]:
            if copy <= free:
                best = max(best, 1 + search(free - copy))
        return best

    return search(frozenset(range(n)))


def erdos_gallai_table(n: int) -> Tuple[Dict[int, int], int]:
    """For every l <= n/2, the most edges of an n-vertex graph whose matching
    number is below l, scanning all 2^C(n,2) labelled graphs.

    Returns the table and the number of graphs scanned. Matching numbers come
    from a recurrence over edge masks: either the highest edge is unused or it
    is matched and every edge touching it is dropped.
    """
    pairs = list(combinations(range(n), 2))
    touching = []
    for u, v in pairs:
        mask = 0
        for k, (a, b) in enumerate(pairs):
            if a in (u, v) or b in (u, v):
                mask |= 1 << k
        touching.append(mask)

    total = 1 << len(pairs)
    nu = bytearray(total)
    best: Dict[int, int] = {l: 0 for l in range(1, n // 2 + 1)}
    for mask in range(1, total):
        top = mask.bit_length() - 1
        nu[mask] = max(nu[mask & ~(1 << top)], 1 + nu[mask & ~touching[top]])
        edges = mask.bit_count()
        for l in range(nu[mask] + 1, n // 2 + 1):
            if edges > best[l]:
                best[l] = edges
    logger.debug(f"Scanned {total} labelled graphs on {n} vertices")
    return best, total
