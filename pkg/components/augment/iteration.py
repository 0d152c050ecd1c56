"""
The expansion-improvement driver.

Each round first tries to improve the incumbent K_{s,t}-tiling on the
current graph (an F1-improvement, else an augmentation applied in the
t-expansion), then expands the graph and retiles back to K_{s,t}. While the
coverage fraction is above the switch level (1 - eps/4) alpha', or when
s == t, a round only retiles.
"""
import math
import logging

from dataclasses import dataclass
from typing import List, NamedTuple, Optional

import pandas as pd

import constants

from components.augment.augmentation import apply_augmentation, find_augmentation, find_f1_improvement
from components.exceptions import ParameterError
from components.graph_core import Graph, check_capacity, expand
from components.thresholds import alpha_prime, epsilon_prime, retile_switch_level
from components.tiling import Pattern, Tiling, max_tiling_greedy, retile, tiling_constant

logger = logging.getLogger(__name__)

ACTION_NONE = "none"
ACTION_F1 = "f1"
ACTION_AUGMENT = "augment"
ACTION_RETILE = "retile"

TRACE_COLUMNS = ["round", "n", "covered", "fraction", "action"]


class TraceRow(NamedTuple):
    round: int
    n: int
    covered: int
    fraction: float
    action: str
    tiles: int


class AsymptoticParameters(NamedTuple):
    p: int
    q: int
    eps_prime: float


class IterationResult(NamedTuple):
    tiling: Tiling
    trace: List[TraceRow]


@dataclass(frozen=True)
class IterationConfig:
    p: int = constants.DEFAULT_EXPANSION_FACTOR
    q: int = constants.DEFAULT_ROUNDS
    alpha: Optional[float] = None
    eps: float = 0.1
    seed: int = 0

    def __post_init__(self) -> None:
        if self.q < 0:
            raise ParameterError(f"round count must be nonnegative, got q={self.q}")
        if self.q and self.p < 2:
            raise ParameterError(f"expansion factor must be at least 2 when iterating, got p={self.p}")
        if not 0.0 < self.eps < 1.0:
            raise ParameterError(f"eps must lie in (0, 1), got {self.eps}")
        if self.alpha is not None and not 0.0 < self.alpha < 1.0:
            raise ParameterError(f"alpha must lie in (0, 1), got {self.alpha}")

    @property
    def switch_level(self) -> Optional[float]:
        return None if self.alpha is None else retile_switch_level(self.alpha, self.eps)

    @staticmethod
    def asymptotic(s: int, t: int, alpha: float, eps: float) -> AsymptoticParameters:
        """Asymptotic p = t^2 ceil(4C/eps') and q = ceil(2t/eps'), for display.

        These are far beyond any capacity cap for realistic eps.
        """
        eps_prime = epsilon_prime(s, t, alpha_prime(alpha, eps), eps / 4)
        p = t * t * math.ceil(4 * tiling_constant(s, t) / eps_prime)
        q = math.ceil(2 * t / eps_prime)
        return AsymptoticParameters(p, q, eps_prime)


def _row(round_: int, tiling: Tiling, action: str) -> TraceRow:
    return TraceRow(round_, tiling.host.n, tiling.size, tiling.fraction, action, tiling.tile_count)


def iterate_expansion_improvement(graph: Graph, pattern: Pattern, config: IterationConfig) -> IterationResult:
    if not pattern.is_complete_bipartite:
        raise ParameterError(f"the iteration driver needs a complete bipartite pattern, got {pattern.tag}")
    s, t = pattern.s, pattern.t
    check_capacity(graph.n * config.p ** config.q, f"{config.q} rounds of {config.p}-expansion")

    tiling = max_tiling_greedy(graph, pattern, config.seed)
    trace = [_row(0, tiling, ACTION_NONE)]
    switch = config.switch_level
    logger.info(f"Round 0: {tiling.size} of {graph.n} vertices covered by {tiling.tile_count} copies of {pattern.tag}")

    for round_ in range(1, config.q + 1):
        factor = config.p
        action = ACTION_NONE
        if s < t and (switch is None or tiling.fraction <= switch):
            improved = find_f1_improvement(tiling.host, tiling)
            if improved is not None:
                tiling, action = improved, ACTION_F1
            else:
                augmentation = find_augmentation(tiling.host, tiling)
                if augmentation is not None:
                    tiling = apply_augmentation(tiling.host, tiling, augmentation).tiling
                    action = ACTION_AUGMENT
                    factor = math.ceil(config.p / t)
        trace.append(_row(round_, tiling, action))

        expanded, expansion = expand(tiling.host, factor)
        tiling = retile(tiling, expansion, s, t, host=expanded)
        trace.append(_row(round_, tiling, ACTION_RETILE))
        logger.info(f"Round {round_}: {action}, then retiled on {expanded.n} vertices, coverage {tiling.fraction:.4f}")

    return IterationResult(tiling, trace)


def trace_frame(trace: List[TraceRow]) -> pd.DataFrame:
    return pd.DataFrame([row._asdict() for row in trace], columns=TRACE_COLUMNS)


def write_trace(trace: List[TraceRow], path_or_buffer) -> None:
    trace_frame(trace).to_csv(path_or_buffer, index=False, lineterminator="\n", float_format=constants.FLOAT_FORMAT)


def trace_violations(trace: List[TraceRow], s: int, t: int) -> List[str]:
    """Per-round contract of a trace: an applied improvement strictly raises
    the coverage fraction, and a retile through an r-fold expansion keeps at
    least r|F| - (#tiles) C(s, t) covered vertices."""
    problems = []
    constant = tiling_constant(s, t)
    for previous, row in zip(trace, trace[1:]):
        if row.action in (ACTION_F1, ACTION_AUGMENT) and not row.fraction > previous.fraction:
            problems.append(f"round {row.round}: {row.action} did not raise coverage ({previous.fraction} -> {row.fraction})")
        if row.action == ACTION_RETILE:
            factor = row.n // previous.n if previous.n else 1
            floor_ = factor * previous.covered - previous.tiles * constant
            if row.n != factor * previous.n or row.covered < floor_:
                problems.append(f"round {row.round}: retile covered {row.covered}, below {floor_}")
    return problems
