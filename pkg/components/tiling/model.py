import re
import logging

from dataclasses import dataclass
from typing import TYPE_CHECKING, FrozenSet, Iterable, List, Optional, Tuple

from components.exceptions import InvalidTilingError, ParameterError
from components.graph_core import Graph

if TYPE_CHECKING:
    from components.tiling.patterns import Pattern

logger = logging.getLogger(__name__)

_COMPLETE_TAG = re.compile(r"^K(\d+),(\d+)$")
_TILE_LINE = re.compile(r"^(\S+) \| v1:((?: \d+)*) \| v2:((?: \d+)*)$")


def complete_bipartite_tag(a: int, b: int) -> str:
    return f"K{a},{b}"


@dataclass(frozen=True)
class Tile:
    """One copy in a tiling: its small colour class v1 and large class v2.

    ``embedding`` is only set for general patterns and gives the host
    image of every pattern vertex in order.
    """
    tag: str
    v1: Tuple[int, ...]
    v2: Tuple[int, ...]
    embedding: Optional[Tuple[int, ...]] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "v1", tuple(sorted(self.v1)))
        object.__setattr__(self, "v2", tuple(sorted(self.v2)))
        if set(self.v1) & set(self.v2):
            raise ParameterError(f"tile {self.tag}: colour classes overlap")
        if len(set(self.v1)) != len(self.v1) or len(set(self.v2)) != len(self.v2):
            raise ParameterError(f"tile {self.tag}: repeated vertex")

    @classmethod
    def complete_bipartite(cls, v1: Iterable[int], v2: Iterable[int]) -> "Tile":
        v1, v2 = tuple(v1), tuple(v2)
        return cls(complete_bipartite_tag(len(v1), len(v2)), v1, v2)

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted(self.v1 + self.v2))

    @property
    def order(self) -> int:
        return len(self.v1) + len(self.v2)

    @property
    def class_sizes(self) -> Tuple[int, int]:
        return len(self.v1), len(self.v2)

    @property
    def is_complete_bipartite(self) -> bool:
        return self.embedding is None and self.tag == complete_bipartite_tag(*self.class_sizes)


@dataclass(frozen=True)
class Tiling:
    host: Graph
    tiles: Tuple[Tile, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tiles", tuple(self.tiles))

    @property
    def size(self) -> int:
        """|F|: the number of covered vertices."""
        return sum(tile.order for tile in self.tiles)

    @property
    def tile_count(self) -> int:
        return len(self.tiles)

    @property
    def covered(self) -> FrozenSet[int]:
        return frozenset(v for tile in self.tiles for v in tile.v1 + tile.v2)

    @property
    def uncovered(self) -> Tuple[int, ...]:
        covered = self.covered
        return tuple(v for v in range(self.host.n) if v not in covered)

    @property
    def v1(self) -> FrozenSet[int]:
        return frozenset(v for tile in self.tiles for v in tile.v1)

    @property
    def v2(self) -> FrozenSet[int]:
        return frozenset(v for tile in self.tiles for v in tile.v2)

    @property
    def fraction(self) -> float:
        return self.size / self.host.n if self.host.n else 0.0

    def tile_index(self) -> dict:
        """Map every covered vertex to the position of its tile."""
        return {v: k for k, tile in enumerate(self.tiles) for v in tile.v1 + tile.v2}

    def violations(self, pattern: Optional["Pattern"] = None) -> List[str]:
        problems = []
        owner = {}
        for k, tile in enumerate(self.tiles):
            for v in tile.v1 + tile.v2:
                if not 0 <= v < self.host.n:
                    problems.append(f"tile {k} ({tile.tag}): vertex {v} is not in the host")
                elif v in owner:
                    problems.append(f"tile {k} ({tile.tag}): vertex {v} already used by tile {owner[v]}")
                else:
                    owner[v] = k
            if tile.embedding is None:
                match = _COMPLETE_TAG.match(tile.tag)
                if match is None or (int(match.group(1)), int(match.group(2))) != tile.class_sizes:
                    problems.append(f"tile {k} ({tile.tag}): tag does not match class sizes {tile.class_sizes}")
                missing = [(u, v) for u in tile.v1 for v in tile.v2 if not self.host.has_edge(u, v)]
                if missing:
                    problems.append(f"tile {k} ({tile.tag}): {len(missing)} cross pairs are not host edges, first {missing[0]}")
            else:
                problems.extend(self._embedding_violations(k, tile, pattern))
        return problems

    def _embedding_violations(self, k: int, tile: Tile, pattern: Optional["Pattern"]) -> List[str]:
        image = tile.embedding
        if len(set(image)) != len(image):
            return [f"tile {k} ({tile.tag}): embedding is not injective"]
        if pattern is None:
            return []
        if len(image) != pattern.order:
            return [f"tile {k} ({tile.tag}): embedding has {len(image)} vertices, pattern has {pattern.order}"]
        problems = []
        if tuple(sorted(image[p] for p in pattern.v1)) != tile.v1 or tuple(sorted(image[p] for p in pattern.v2)) != tile.v2:
            problems.append(f"tile {k} ({tile.tag}): embedding does not respect the colouring")
        for p, q in pattern.graph.edges:
            if not self.host.has_edge(image[p], image[q]):
                problems.append(f"tile {k} ({tile.tag}): pattern edge ({p}, {q}) maps to a non-edge")
                break
        return problems

    def is_valid(self, pattern: Optional["Pattern"] = None) -> bool:
        return not self.violations(pattern)

    def require_valid(self, pattern: Optional["Pattern"] = None) -> None:
        problems = self.violations(pattern)
        if problems:
            raise InvalidTilingError(f"invalid tiling: {problems[0]} ({len(problems)} problems)")


def format_tiling(tiling: Tiling) -> str:
    lines = []
    for tile in tiling.tiles:
        v1 = "".join(f" {v}" for v in tile.v1)
        v2 = "".join(f" {v}" for v in tile.v2)
        lines.append(f"{tile.tag} | v1:{v1} | v2:{v2}")
    return "".join(line + "\n" for line in lines)


def parse_tiling(text: str, host: Graph) -> Tiling:
    tiles = []
    for number, line in enumerate(text.splitlines(), start=1):
        match = _TILE_LINE.match(line)
        if match is None:
            raise ParameterError(f"line {number}: malformed tile {line!r}")
        tiles.append(Tile(
            match.group(1),
            tuple(int(v) for v in match.group(2).split()),
            tuple(int(v) for v in match.group(3).split())
        ))
    return Tiling(host, tuple(tiles))
