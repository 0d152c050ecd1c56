"""
Simple undirected graphs on the dense vertex set 0..n-1, the extremal
constructions M_{n,x} and L_{n,x}, and the r-expansion operator.

Graphs are immutable: every constructor returns a new value and the
adjacency index is built once, in ``__post_init__``.
"""
import math
import random
import logging

from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Iterable, List, Sequence, Tuple

import constants

from components.exceptions import CapacityError, ParameterError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: FrozenSet[Edge]
    _adjacency: Tuple[FrozenSet[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ParameterError(f"vertex count must be nonnegative, got {self.n}")
        canonical = set()
        count = 0
        for u, v in self.edges:
            count += 1
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ParameterError(f"edge ({u}, {v}) has an endpoint outside [0, {self.n})")
            canonical.add((u, v) if u < v else (v, u))
        if len(canonical) != count:
            raise ParameterError("duplicate edge in edge set")
        adjacency = [set() for _ in range(self.n)]
        for u, v in canonical:
            adjacency[u].add(v)
            adjacency[v].add(u)
        object.__setattr__(self, "edges", frozenset(canonical))
        object.__setattr__(self, "_adjacency", tuple(frozenset(a) for a in adjacency))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        # Lists keep duplicates visible to the validation above.
        return cls(n, list(edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._adjacency[u]

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    @cached_property
    def neighbor_masks(self) -> Tuple[int, ...]:
        masks = []
        for v in range(self.n):
            mask = 0
            for u in self._adjacency[v]:
                mask |= 1 << u
            masks.append(mask)
        return tuple(masks)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph on the same vertex set keeping only edges inside ``vertices``."""
        keep = set(vertices)
        return Graph(self.n, [(u, v) for u, v in self.edges if u in keep and v in keep])

    def cross_edge_count(self, side_a: Iterable[int], side_b: Iterable[int]) -> int:
        side_b = set(side_b)
        return sum(1 for u in set(side_a) for v in self._adjacency[u] if v in side_b)


@dataclass(frozen=True)
class ExpansionMap:
    """Projection of an r-expansion onto its base graph.

    Expanded vertex ``v * r + j`` is copy ``j`` of base vertex ``v``.
    """
    base_n: int
    r: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ParameterError(f"expansion factor must be at least 1, got {self.r}")
        if self.base_n < 0:
            raise ParameterError(f"base vertex count must be nonnegative, got {self.base_n}")

    @property
    def n(self) -> int:
        return self.base_n * self.r

    def vertex(self, v: int, j: int) -> int:
        return v * self.r + j

    def project(self, x: int) -> int:
        return x // self.r

    def fiber(self, v: int) -> range:
        return range(v * self.r, (v + 1) * self.r)

    def lift(self, vertices: Iterable[int]) -> List[int]:
        return [x for v in sorted(vertices) for x in self.fiber(v)]

    def compose(self, outer: "ExpansionMap") -> "ExpansionMap":
        # Expanding by r and then by r' yields exactly the (r * r')-expansion.
        if outer.base_n != self.n:
            raise ParameterError(f"cannot compose: outer base has {outer.base_n} vertices, expected {self.n}")
        return ExpansionMap(self.base_n, self.r * outer.r)


def check_capacity(n: int, what: str) -> None:
    if n > constants.MAX_N:
        raise CapacityError(f"{what} needs {n} vertices, above the capacity cap of {constants.MAX_N}")


def m_edge_count(n: int, x: int) -> int:
    return x * (n - x) + math.comb(x, 2)


def l_edge_count(n: int, x: int) -> int:
    return math.comb(x, 2)


def _check_order(n: int, x: int) -> None:
    if n < 0 or x < 0:
        raise ParameterError(f"orders must be nonnegative, got n={n}, x={x}")
    if x > n:
        raise ParameterError(f"x={x} exceeds n={n}")


def make_complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise ParameterError(f"class sizes must be nonnegative, got {a}, {b}")
    check_capacity(a + b, "K_{a,b}")
    return Graph(a + b, [(u, v) for u in range(a) for v in range(a, a + b)])


def make_M(n: int, x: int) -> Graph:
    """Clique on 0..x-1 joined completely to the independent set x..n-1."""
    _check_order(n, x)
    check_capacity(n, "M_{n,x}")
    return Graph(n, [(u, v) for u in range(x) for v in range(u + 1, n)])


def make_L(n: int, x: int) -> Graph:
    """Clique on 0..x-1 plus n-x isolated vertices."""
    _check_order(n, x)
    check_capacity(n, "L_{n,x}")
    return Graph(n, [(u, v) for u in range(x) for v in range(u + 1, x)])


def complement(graph: Graph) -> Graph:
    return Graph(graph.n, [
        (u, v) for u in range(graph.n) for v in range(u + 1, graph.n) if not graph.has_edge(u, v)
    ])


def expand(graph: Graph, r: int) -> Tuple[Graph, ExpansionMap]:
    if r < 1:
        raise ParameterError(f"expansion factor must be at least 1, got {r}")
    check_capacity(graph.n * r, f"{r}-expansion")
    expansion = ExpansionMap(graph.n, r)
    edges = [
        (u * r + a, v * r + b)
        for u, v in graph.edges
        for a in range(r)
        for b in range(r)
    ]
    logger.debug(f"{r}-expansion of a {graph.n}-vertex graph: {expansion.n} vertices, {len(edges)} edges")
    return Graph(expansion.n, edges), expansion


def _pair_from_index(k: int) -> Edge:
    # Pairs (u, v), u < v, enumerated as k = v(v-1)/2 + u.
    v = (1 + math.isqrt(1 + 8 * k)) // 2
    return k - v * (v - 1) // 2, v


def random_graph_gnm(n: int, m: int, seed: int) -> Graph:
    total = math.comb(n, 2)
    if n < 0 or not 0 <= m <= total:
        raise ParameterError(f"edge count m={m} outside [0, {total}] for n={n}")
    check_capacity(n, "G(n, m)")
    rng = random.Random(seed)
    return Graph(n, [_pair_from_index(k) for k in rng.sample(range(total), m)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def make_path(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"a path needs at least 1 vertex, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def make_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def disjoint_union(first: Graph, second: Graph) -> Graph:
    shift = first.n
    return Graph(first.n + second.n, list(first.edges) + [(u + shift, v + shift) for u, v in second.edges])


def relabel(graph: Graph, mapping: Sequence[int]) -> Graph:
    if sorted(mapping) != list(range(graph.n)):
        raise ParameterError("relabeling must be a permutation of the vertex set")
    return Graph(graph.n, [(mapping[u], mapping[v]) for u, v in graph.edges])
