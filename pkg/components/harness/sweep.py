"""
Parameter sweeps over (pattern, alpha, n, seed) cells.

Rows go to a CSV journal in cell order. A rerun reads the journal back and
skips every cell whose key is already present, so an interrupted sweep
resumes where it stopped and a finished one is left untouched.
"""
import os
import math
import hashlib
import logging

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Tuple

import pandas as pd

from tqdm import tqdm

import constants

from components.exceptions import CapacityError, ParameterError
from components.graph_core import Graph, make_L, make_M, random_graph_gnm
from components.thresholds import crossover_alpha, threshold_T
from components.tiling import Pattern, max_tiling_exact, max_tiling_greedy

logger = logging.getLogger(__name__)

GENERATORS = ("M", "L", "gnm", "crossover-mix")
SWEEP_COLUMNS = [
    "s", "t", "alpha", "n", "seed", "generator",
    "edges", "threshold_edges", "tiles_found", "tiles_target", "ratio",
]
KEY_COLUMNS = ["s", "t", "alpha", "n", "seed", "generator"]


@dataclass(frozen=True)
class SweepSpec:
    patterns: Tuple[Tuple[int, int], ...]
    alphas: Tuple[float, ...]
    ns: Tuple[int, ...]
    seeds: Tuple[int, ...]
    generator: str
    output: str

    def __post_init__(self) -> None:
        for name in ("patterns", "alphas", "ns", "seeds"):
            if not getattr(self, name):
                raise ParameterError(f"sweep grid {name} is empty")
        for s, t in self.patterns:
            if not 1 <= s <= t:
                raise ParameterError(f"pattern sizes must satisfy 1 <= s <= t, got ({s}, {t})")
        for alpha in self.alphas:
            if not 0.0 < alpha < 1.0:
                raise ParameterError(f"alpha must lie in (0, 1), got {alpha}")
        for n in self.ns:
            if n < 1:
                raise ParameterError(f"n must be positive, got {n}")
        if self.generator not in GENERATORS:
            raise ParameterError(f"unknown generator {self.generator!r}, expected one of {', '.join(GENERATORS)}")


class SweepCell(NamedTuple):
    index: int
    s: int
    t: int
    alpha: float
    n: int
    seed: int
    generator: str

    @property
    def key(self) -> Tuple[str, ...]:
        return (str(self.s), str(self.t), constants.FLOAT_FORMAT % self.alpha, str(self.n), str(self.seed), self.generator)


def cell_seed(seed: int, index: int) -> int:
    """64-bit seed for one cell, mixing the sweep seed with the cell index."""
    digest = hashlib.blake2b(f"{seed}:{index}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def sweep_cells(spec: SweepSpec) -> List[SweepCell]:
    cells = []
    for s, t in spec.patterns:
        for alpha in spec.alphas:
            for n in spec.ns:
                for seed in spec.seeds:
                    cells.append(SweepCell(len(cells), s, t, alpha, n, seed, spec.generator))
    return cells


def cell_graph(cell: SweepCell) -> Tuple[Graph, int]:
    """Host graph of a cell and the tile count it is measured against."""
    s, t, alpha, n = cell.s, cell.t, cell.alpha, cell.n
    target = max(1, math.floor(alpha * n / (s + t)))
    generator = cell.generator
    if generator == "crossover-mix":
        generator = "M" if alpha <= crossover_alpha(s, t) else "L"
    if generator == "M":
        return make_M(n, s * target - 1), target
    if generator == "L":
        return make_L(n, (s + t) * target - 1), target
    edges = min(math.comb(n, 2), math.ceil(threshold_T(s, t, alpha) * math.comb(n, 2)))
    return random_graph_gnm(n, edges, cell_seed(cell.seed, cell.index)), target


def evaluate_cell(cell: SweepCell) -> Dict[str, object]:
    graph, target = cell_graph(cell)
    pattern = Pattern.complete_bipartite(cell.s, cell.t)
    tiling = None
    if graph.n <= constants.EXACT_TILING_MAX_N:
        try:
            tiling = max_tiling_exact(graph, pattern).tiling
        except CapacityError as e:
            logger.warning(f"Cell {cell.key}: {e}; using the greedy tiler")
    if tiling is None:
        tiling = max_tiling_greedy(graph, pattern, cell_seed(cell.seed, cell.index))
    return {
        "s": cell.s,
        "t": cell.t,
        "alpha": cell.alpha,
        "n": cell.n,
        "seed": cell.seed,
        "generator": cell.generator,
        "edges": graph.edge_count,
        "threshold_edges": threshold_T(cell.s, cell.t, cell.alpha) * math.comb(cell.n, 2),
        "tiles_found": tiling.tile_count,
        "tiles_target": target,
        "ratio": tiling.tile_count / target,
    }


def completed_keys(path: str) -> set:
    if not os.path.exists(path) or os.path.getsize(path) == 0:
        return set()
    journal = pd.read_csv(path, dtype=str)
    return set(journal[KEY_COLUMNS].itertuples(index=False, name=None))


def _append_row(path: str, row: Dict[str, object]) -> None:
    header = not os.path.exists(path) or os.path.getsize(path) == 0
    pd.DataFrame([row], columns=SWEEP_COLUMNS).to_csv(
        path, mode="a", header=header, index=False, lineterminator="\n", float_format=constants.FLOAT_FORMAT
    )


def run_sweep(spec: SweepSpec, workers: int = 1, quiet: bool = False) -> pd.DataFrame:
    done = completed_keys(spec.output)
    cells = [cell for cell in sweep_cells(spec) if cell.key not in done]
    logger.info(f"Sweep: {len(cells)} cells to evaluate, {len(done)} already in {spec.output}")
    if workers > 1 and cells:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            for row in tqdm(executor.map(evaluate_cell, cells), total=len(cells), desc="sweep", disable=quiet):
                _append_row(spec.output, row)
    else:
        for cell in tqdm(cells, desc="sweep", disable=quiet):
            _append_row(spec.output, evaluate_cell(cell))
    return pd.read_csv(spec.output, dtype=str) if os.path.exists(spec.output) else pd.DataFrame(columns=SWEEP_COLUMNS)
