"""
Verification suites behind ``app.py verify``. Each suite returns a
SuiteResult; a failure is a row of (suite, case, detail).
"""
import math
import random
import logging

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, List, Optional, Set, Tuple

import pandas as pd

from tqdm import tqdm

from components.augment import (
    IterationConfig,
    apply_augmentation,
    build_auxiliary,
    find_augmentation,
    find_f1_improvement,
    iterate_expansion_improvement,
    trace_violations,
    validate_augmentation,
)
from components.graph_core import Graph, expand, make_L, make_M
from components.harness import instances, oracles
from components.matching import matching_edge_bound, max_matching_bipartite, max_matching_general
from components.thresholds import (
    check_T_matches_constructions,
    check_eq3_consistency,
    crossover_alpha,
    erdos_gallai_ex,
    lower_bound_orders,
    threshold_branches,
)
from components.tiling import (
    Pattern,
    color_classes,
    dominates,
    max_tiling_exact,
    retile,
    tile_block,
    tiling_constant,
)

logger = logging.getLogger(__name__)

FAILURE_COLUMNS = ["suite", "case", "detail"]
ALPHA_GRID = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]
THRESHOLD_NS = [1000, 3000, 10000]
LOWER_BOUND_PATTERNS = [(1, 2), (2, 3)]


@dataclass
class VerifyLimits:
    max_n: Optional[int] = None
    max_st: int = 4
    max_ab: int = 60
    cases: int = 500
    seed: int = 0
    quiet: bool = False


@dataclass
class SuiteResult:
    suite: str
    cases: int = 0
    failures: List[Dict[str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, case: str, detail: str = "") -> None:
        self.cases += 1
        if not ok:
            self.failures.append({"suite": self.suite, "case": case, "detail": detail})

    def failure_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.failures, columns=FAILURE_COLUMNS)


def erdos_gallai_suite(limits: VerifyLimits) -> SuiteResult:
    result = SuiteResult("erdos-gallai")
    max_n = limits.max_n or 6
    for n in tqdm(range(2, max_n + 1), desc="erdos-gallai", disable=limits.quiet):
        table, graphs = oracles.erdos_gallai_table(n)
        for l, found in table.items():
            expected = erdos_gallai_ex(n, l)
            result.cases += graphs - 1
            result.record(found == expected, f"n={n} l={l}", f"scan {found}, formula {expected}")
    return result


def _tiles_fit(tiles, side_a: range, side_b: range, s: int, t: int) -> bool:
    seen = set()
    for tile in tiles:
        if tile.class_sizes != (s, t) or seen.intersection(tile.v1 + tile.v2):
            return False
        seen.update(tile.v1 + tile.v2)
        crossing = (set(tile.v1) <= set(side_a) and set(tile.v2) <= set(side_b)) or \
                   (set(tile.v1) <= set(side_b) and set(tile.v2) <= set(side_a))
        if not crossing:
            return False
    return True


def lemma4_suite(limits: VerifyLimits) -> SuiteResult:
    """Every dominating K_{a,b} is tiled with at most C(s, t) vertices left over."""
    result = SuiteResult("lemma4")
    pairs = [(s, t) for t in range(1, limits.max_st + 1) for s in range(1, t + 1)]
    for s, t in tqdm(pairs, desc="lemma4", disable=limits.quiet):
        constant = tiling_constant(s, t)
        for a in range(1, limits.max_ab + 1):
            for b in range(1, limits.max_ab + 1):
                if not dominates(a, b, s, t):
                    continue
                side_a, side_b = range(a), range(a, a + b)
                tiles = tile_block(side_a, side_b, s, t)
                uncovered = a + b - len(tiles) * (s + t)
                ok = _tiles_fit(tiles, side_a, side_b, s, t) and uncovered <= constant
                result.record(ok, f"s={s} t={t} a={a} b={b}", f"{uncovered} uncovered, C={constant}")
    return result


def f2_sizes(s: int, t: int) -> Set[Tuple[int, int]]:
    return {(s * t, t * t), (s * t - 1, (t - 1) * t), (s * t, (t - 1) * t), (1, 1)}


def augment_identity_suite(limits: VerifyLimits) -> SuiteResult:
    result = SuiteResult("augment-identity")
    cases = [("hand-built", instances.hand_built_augmentation(), 2)]
    for case in range(limits.cases):
        rng = random.Random(limits.seed * 1_000_003 + case)
        s = rng.randint(1, 2)
        t = rng.randint(s + 1, 3)
        graph, tiling = instances.augmentable_instance(rng, s, t, rng.randint(2, 4), rng.randint(1, 4), rng.random() * 0.3)
        cases.append((f"seed={limits.seed} case={case} s={s} t={t}", (graph, tiling), t))

    for name, (graph, tiling), t in tqdm(cases, desc="augment-identity", disable=limits.quiet):
        augmentation = find_augmentation(graph, tiling)
        if augmentation is None:
            result.record(False, name, "no augmentation found on an augmentable instance")
            continue
        problems = validate_augmentation(graph, tiling, augmentation)
        if problems:
            result.record(False, name, problems[0])
            continue
        applied = apply_augmentation(graph, tiling, augmentation)
        expected = t * tiling.size + len(augmentation.e0)
        s = tiling.tiles[0].class_sizes[0]
        bad_tags = [tile.tag for tile in applied.tiling.tiles if tile.class_sizes not in f2_sizes(s, t)]
        invalid = applied.tiling.violations()
        ok = applied.tiling.size == expected and not bad_tags and not invalid
        detail = f"|F_new|={applied.tiling.size}, expected {expected}; bad tags {bad_tags[:3]}; {invalid[:1]}"
        result.record(ok, name, detail)
    return result


def f1_gain_suite(limits: VerifyLimits) -> SuiteResult:
    """An F1-improvement gains exactly the leftover-giant matching number."""
    result = SuiteResult("f1-gain")
    rng = random.Random(limits.seed)
    for case in tqdm(range(limits.cases), desc="f1-gain", disable=limits.quiet):
        t = rng.randint(2, 3)
        s = rng.randint(1, t - 1)
        graph, tiling = instances.planted_tiling(rng, s, t, rng.randint(1, 4), rng.randint(0, 5), rng.random() * 0.4)
        auxiliary = build_auxiliary(graph, tiling)
        leftovers, giants = auxiliary.leftover_nodes, auxiliary.giants
        expected = max_matching_bipartite(auxiliary.between(leftovers, giants), leftovers, giants).size
        improved = find_f1_improvement(graph, tiling)
        gained = 0 if improved is None else improved.size - tiling.size
        problems = [] if improved is None else improved.violations()
        result.record(gained == expected and not problems, f"case={case} s={s} t={t}",
                      f"gained {gained}, matching {expected}; {problems[:1]}")
    return result


def thresholds_suite(limits: VerifyLimits) -> SuiteResult:
    result = SuiteResult("thresholds")
    for t in range(1, limits.max_st + 1):
        for s in range(1, t + 1):
            crossing = crossover_alpha(s, t)
            if crossing < 1.0:
                m_branch, l_branch = threshold_branches(s, t, crossing)
                result.record(abs(m_branch - l_branch) <= 1e-12, f"crossover s={s} t={t}",
                              f"branches {m_branch!r} and {l_branch!r}")
            for alpha in ALPHA_GRID:
                for n in THRESHOLD_NS:
                    residual = check_T_matches_constructions(s, t, alpha, n)
                    result.record(residual <= 3 * n, f"constructions s={s} t={t} alpha={alpha} n={n}", f"residual {residual}")
                    if math.floor(alpha * n / 2) >= 1:
                        residual = check_eq3_consistency(s, alpha, n)
                        result.record(residual <= 3 * n, f"eq3 s={s} alpha={alpha} n={n}", f"residual {residual}")
    return result


def matching_oracle_suite(limits: VerifyLimits) -> SuiteResult:
    result = SuiteResult("matching-oracle")
    max_n = limits.max_n or 6
    for n in tqdm(range(1, max_n + 1), desc="matching-oracle", disable=limits.quiet):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            graph = Graph(n, [pair for k, pair in enumerate(pairs) if mask >> k & 1])
            found, expected = max_matching_general(graph).size, oracles.matching_number(graph)
            result.record(found == expected, f"n={n} mask={mask}", f"blossom {found}, brute force {expected}")

    rng = random.Random(limits.seed)
    for case in range(limits.cases):
        graph = instances.random_graph(rng, rng.randint(1, 8), rng.random())
        found, expected = max_matching_general(graph).size, oracles.matching_number(graph)
        result.record(found == expected, f"random case={case}", f"blossom {found}, brute force {expected}")
        bipartite, side_a, side_b = instances.random_bipartite(rng, rng.randint(1, 6), rng.randint(1, 6), rng.random())
        bound = matching_edge_bound(bipartite, side_a, side_b)
        result.record(bound.holds, f"konig case={case}", f"{bound.edges} edges above {bound.bound}")
    return result


def color_classes_suite(limits: VerifyLimits) -> SuiteResult:
    result = SuiteResult("color-classes")
    rng = random.Random(limits.seed)
    for case in range(limits.cases):
        size_a = rng.randint(1, 6)
        graph, _, _ = instances.random_bipartite(rng, size_a, rng.randint(0, 12 - size_a), rng.random())
        found, expected = color_classes(graph).s, oracles.min_color_class(graph)
        result.record(found == expected, f"case={case} n={graph.n}", f"computed {found}, brute force {expected}")
    return result


def lower_bound_suite(limits: VerifyLimits) -> SuiteResult:
    """M_{n, s l - 1} and L_{n, (s+t) l - 1} hold fewer than l disjoint K_{s,t}."""
    result = SuiteResult("lower-bound")
    max_n = limits.max_n or 15
    for s, t in LOWER_BOUND_PATTERNS:
        pattern = Pattern.complete_bipartite(s, t)
        for n in tqdm(range(s + t, max_n + 1), desc=f"lower-bound K{s},{t}", disable=limits.quiet):
            for l in range(1, n // (s + t) + 1):
                m_order, l_order = lower_bound_orders(s, t, l)
                for name, graph in (("M", make_M(n, m_order)), ("L", make_L(n, l_order))):
                    exact = max_tiling_exact(graph, pattern)
                    found = exact.tiling.tile_count
                    result.record(exact.optimal and found < l, f"{name} s={s} t={t} n={n} l={l}",
                                  f"{found} disjoint copies, optimal={exact.optimal}")
    return result


def retile_suite(limits: VerifyLimits) -> SuiteResult:
    result = SuiteResult("retile")
    rng = random.Random(limits.seed)
    for case in tqdm(range(limits.cases), desc="retile", disable=limits.quiet):
        t = rng.randint(1, 3)
        s = rng.randint(1, t)
        r = rng.randint(1, 4)
        graph, tiling = instances.random_block_tiling(rng, s, t, rng.randint(1, 4), rng.randint(0, 3), rng.random() * 0.2)
        expanded, expansion = expand(graph, r)
        retiled = retile(tiling, expansion, s, t, host=expanded)
        floor_ = tiling.size * r - tiling.tile_count * tiling_constant(s, t)
        problems = retiled.violations()
        result.record(not problems and retiled.size >= floor_, f"case={case} s={s} t={t} r={r}",
                      f"covered {retiled.size}, floor {floor_}; {problems[:1]}")

    for case in tqdm(range(max(1, limits.cases // 5)), desc="iteration", disable=limits.quiet):
        t = rng.randint(2, 3)
        s = rng.randint(1, t - 1)
        graph = instances.random_graph(rng, rng.randint(8, 60), 0.5 + rng.random() * 0.4)
        config = IterationConfig(p=2, q=rng.randint(1, 3), seed=case)
        trace = iterate_expansion_improvement(graph, Pattern.complete_bipartite(s, t), config).trace
        problems = trace_violations(trace, s, t)
        result.record(not problems, f"iteration case={case} s={s} t={t}", "; ".join(problems[:2]))
    return result


SUITES: Dict[str, Callable[[VerifyLimits], SuiteResult]] = {
    "erdos-gallai": erdos_gallai_suite,
    "lemma4": lemma4_suite,
    "augment-identity": augment_identity_suite,
    "f1-gain": f1_gain_suite,
    "thresholds": thresholds_suite,
    "matching-oracle": matching_oracle_suite,
    "color-classes": color_classes_suite,
    "lower-bound": lower_bound_suite,
    "retile": retile_suite,
}


def run_suite(name: str, limits: VerifyLimits) -> SuiteResult:
    logger.info(f"Running verification suite {name} ...")
    result = SUITES[name](limits)
    status = "passed" if result.passed else f"FAILED in {len(result.failures)} cases"
    logger.info(f"Suite {name} {status} ({result.cases} cases)")
    return result
