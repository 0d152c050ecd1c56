"""
Density and epsilon-regularity checks for bipartite pairs (A, B).

A pair is eps-regular when |d(X, Y) - d(A, B)| < eps for every X in A with
|X| > eps|A| and Y in B with |Y| > eps|B|. All comparisons are exact: the
exact checker works in rationals, so boundary cases never flip on rounding.
"""
import math
import random
import logging

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple

import constants

from components.exceptions import CapacityError, ParameterError
from components.graph_core import Graph

logger = logging.getLogger(__name__)

REFUTED = "refuted"
UNREFUTED = "unrefuted"


@dataclass(frozen=True)
class PairStats:
    size_a: int
    size_b: int
    edges: int

    @property
    def density(self) -> Fraction:
        return Fraction(self.edges, self.size_a * self.size_b)


class Witness(NamedTuple):
    x: Tuple[int, ...]
    y: Tuple[int, ...]
    density: Fraction
    deviation: Fraction


class RegularityVerdict(NamedTuple):
    regular: bool
    witness: Optional[Witness]


class SampledVerdict(NamedTuple):
    verdict: str
    witness: Optional[Witness]


@dataclass(frozen=True)
class SlicingReport:
    eps: Fraction
    alpha: Fraction
    eps_prime: Fraction
    premise: bool
    pair_regular: bool
    subpair_regular: bool
    density: Fraction
    subpair_density: Fraction

    @property
    def density_gap(self) -> Fraction:
        return abs(self.subpair_density - self.density)

    @property
    def conclusion(self) -> bool:
        return self.subpair_regular and self.density_gap < self.eps

    @property
    def holds(self) -> bool:
        """The slicing statement: premise implies conclusion."""
        return not self.premise or self.conclusion


def _sides(graph: Graph, side_a: Iterable[int], side_b: Iterable[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    side_a, side_b = tuple(sorted(set(side_a))), tuple(sorted(set(side_b)))
    if not side_a or not side_b:
        raise ParameterError("both sides of a pair must be nonempty")
    if set(side_a) & set(side_b):
        raise ParameterError(f"sides overlap in {sorted(set(side_a) & set(side_b))}")
    if any(not 0 <= v < graph.n for v in side_a + side_b):
        raise ParameterError("pair vertices must belong to the graph")
    return side_a, side_b


def _as_fraction(eps) -> Fraction:
    # Floats go through their decimal text so 0.4 means 2/5.
    eps = eps if isinstance(eps, Fraction) else Fraction(str(eps))
    if not 0 < eps < 1:
        raise ParameterError(f"eps must lie in (0, 1), got {eps}")
    return eps


def pair_stats(graph: Graph, side_a: Iterable[int], side_b: Iterable[int]) -> PairStats:
    side_a, side_b = _sides(graph, side_a, side_b)
    return PairStats(len(side_a), len(side_b), graph.cross_edge_count(side_a, side_b))


def pair_density(graph: Graph, side_a: Iterable[int], side_b: Iterable[int]) -> float:
    return float(pair_stats(graph, side_a, side_b).density)


def _min_size(eps: Fraction, size: int) -> int:
    # Smallest k with k > eps * size.
    return math.floor(eps * size) + 1


def _extreme_witness(graph: Graph, x: Sequence[int], side_b: Sequence[int], eps: Fraction,
                     density: Fraction) -> Optional[Witness]:
    """For a fixed X, the deviation over Y of size k is extreme at the k
    vertices of B with the most (or fewest) neighbours in X."""
    x_set = set(x)
    ranked = sorted(side_b, key=lambda v: (len(graph.neighbors(v) & x_set), v))
    degrees = [len(graph.neighbors(v) & x_set) for v in ranked]
    for k in range(_min_size(eps, len(side_b)), len(side_b) + 1):
        low, high = sum(degrees[:k]), sum(degrees[-k:])
        for edges, y in ((high, ranked[-k:]), (low, ranked[:k])):
            sub_density = Fraction(edges, len(x) * k)
            if abs(sub_density - density) >= eps:
                return Witness(tuple(sorted(x)), tuple(sorted(y)), sub_density, abs(sub_density - density))
    return None


def is_eps_regular_exact(graph: Graph, side_a: Iterable[int], side_b: Iterable[int], eps) -> RegularityVerdict:
    """Exhaustive over X; Y is reduced to the extreme choices per size."""
    side_a, side_b = _sides(graph, side_a, side_b)
    limit = constants.EXACT_REGULARITY_MAX_SIDE
    if len(side_a) > limit or len(side_b) > limit:
        raise CapacityError(f"exact regularity needs sides of at most {limit} vertices, got {len(side_a)} and {len(side_b)}")
    eps = _as_fraction(eps)
    density = pair_stats(graph, side_a, side_b).density
    smallest = _min_size(eps, len(side_a))
    for mask in range(1, 1 << len(side_a)):
        if mask.bit_count() < smallest:
            continue
        x = [v for i, v in enumerate(side_a) if mask >> i & 1]
        witness = _extreme_witness(graph, x, side_b, eps, density)
        if witness is not None:
            logger.debug(f"Pair refuted at eps={eps}: |X|={len(witness.x)}, |Y|={len(witness.y)}")
            return RegularityVerdict(False, witness)
    return RegularityVerdict(True, None)


def is_eps_regular_sampled(graph: Graph, side_a: Iterable[int], side_b: Iterable[int], eps,
                           trials: int, seed: int) -> SampledVerdict:
    """Random refutation: alternately sample X (then take the extreme Y) and
    sample Y (then take the extreme X). Can refute, never certify."""
    if trials < 1:
        raise ParameterError(f"trials must be positive, got {trials}")
    side_a, side_b = _sides(graph, side_a, side_b)
    eps = _as_fraction(eps)
    density = pair_stats(graph, side_a, side_b).density
    rng = random.Random(seed)
    for trial in range(trials):
        flipped = trial % 2 == 1
        first, second = (side_b, side_a) if flipped else (side_a, side_b)
        k = rng.randint(_min_size(eps, len(first)), len(first))
        sample = rng.sample(first, k)
        witness = _extreme_witness(graph, sample, second, eps, density)
        if witness is not None:
            if flipped:
                witness = Witness(witness.y, witness.x, witness.density, witness.deviation)
            return SampledVerdict(REFUTED, witness)
    return SampledVerdict(UNREFUTED, None)


def witness_violates(graph: Graph, side_a: Iterable[int], side_b: Iterable[int], eps, witness: Witness) -> bool:
    """Recompute a witness from scratch."""
    side_a, side_b = _sides(graph, side_a, side_b)
    eps = _as_fraction(eps)
    if not set(witness.x) <= set(side_a) or not set(witness.y) <= set(side_b):
        return False
    if len(witness.x) <= eps * len(side_a) or len(witness.y) <= eps * len(side_b):
        return False
    density = pair_stats(graph, side_a, side_b).density
    return abs(pair_stats(graph, witness.x, witness.y).density - density) >= eps


def slicing_check(graph: Graph, side_a: Iterable[int], side_b: Iterable[int], eps,
                  sub_a: Iterable[int], sub_b: Iterable[int]) -> SlicingReport:
    """Subpairs of a regular pair stay regular with eps' = max(eps/alpha, 2 eps).

    alpha is the smaller of |A'|/|A| and |B'|/|B|; the premise needs the pair
    eps-regular and alpha > eps. At alpha = eps the subpair sides are exactly
    eps|A| and eps|B|, outside the regularity condition, so the subpair density
    is unconstrained and the boundary is left out of the premise.
    """
    side_a, side_b = _sides(graph, side_a, side_b)
    sub_a, sub_b = _sides(graph, sub_a, sub_b)
    if not set(sub_a) <= set(side_a) or not set(sub_b) <= set(side_b):
        raise ParameterError("the subpair must lie inside the pair")
    eps = _as_fraction(eps)
    alpha = min(Fraction(len(sub_a), len(side_a)), Fraction(len(sub_b), len(side_b)))
    eps_prime = max(eps / alpha, 2 * eps)

    pair_regular = is_eps_regular_exact(graph, side_a, side_b, eps).regular
    # eps' >= 1 makes every subpair trivially regular.
    subpair_regular = eps_prime >= 1 or is_eps_regular_exact(graph, sub_a, sub_b, eps_prime).regular
    report = SlicingReport(
        alpha=alpha,
        eps_prime=eps_prime,
        premise=pair_regular and alpha > eps,
        pair_regular=pair_regular,
        subpair_regular=subpair_regular,
        density=pair_stats(graph, side_a, side_b).density,
        subpair_density=pair_stats(graph, sub_a, sub_b).density,
        eps=eps,
    )
    logger.debug(f"Slicing check: alpha={alpha}, eps'={eps_prime}, premise={report.premise}, holds={report.holds}")
    return report
