"""
Closed-form quantities: the tiling threshold T_{s,t}(alpha), the
Erdos-Gallai extremal number for matchings, the branch crossover point,
the Kovari-Sos-Turan comparator and the constants of the improvement step.

All arithmetic is IEEE double precision. T_{s,t} is evaluated through the
reduced ratio sigma = s/(s+t), so T_{ks,kt} == T_{s,t} holds exactly.
"""
import math
import logging

from dataclasses import dataclass
from typing import Tuple

from components.exceptions import ParameterError
from components.graph_core import l_edge_count, m_edge_count

logger = logging.getLogger(__name__)


def _check_classes(s: int, t: int) -> None:
    if not 1 <= s <= t:
        raise ParameterError(f"class sizes must satisfy 1 <= s <= t, got s={s}, t={t}")


def _check_unit(name: str, value: float) -> None:
    if not 0.0 < value < 1.0:
        raise ParameterError(f"{name} must lie in (0, 1), got {value}")


@dataclass(frozen=True)
class ThresholdParams:
    s: int
    t: int
    alpha: float
    eps: float

    def __post_init__(self) -> None:
        _check_classes(self.s, self.t)
        _check_unit("alpha", self.alpha)
        _check_unit("eps", self.eps)

    @property
    def threshold(self) -> float:
        return threshold_T(self.s, self.t, self.alpha)

    @property
    def eps_prime(self) -> float:
        return epsilon_prime(self.s, self.t, self.alpha, self.eps)

    @property
    def alpha_prime(self) -> float:
        return alpha_prime(self.alpha, self.eps)


def _branches(sigma: float, alpha: float) -> Tuple[float, float]:
    return 2.0 * sigma * alpha * (1.0 - sigma * alpha / 2.0), alpha * alpha


def threshold_T(s: int, t: int, alpha: float) -> float:
    _check_classes(s, t)
    _check_unit("alpha", alpha)
    return max(_branches(s / (s + t), alpha))


def crossover_alpha(s: int, t: int) -> float:
    """The alpha at which the M-type and L-type branches of T_{s,t} meet."""
    _check_classes(s, t)
    sigma = s / (s + t)
    return 2.0 * sigma / (1.0 + sigma * sigma)


def threshold_branches(s: int, t: int, alpha: float) -> Tuple[float, float]:
    _check_classes(s, t)
    _check_unit("alpha", alpha)
    return _branches(s / (s + t), alpha)


def erdos_gallai_ex(n: int, l: int) -> int:
    """Maximum edge count of an n-vertex graph without l disjoint edges."""
    if not 1 <= l <= n // 2:
        raise ParameterError(f"l must satisfy 1 <= l <= n/2, got n={n}, l={l}")
    return max(m_edge_count(n, l - 1), l_edge_count(n, 2 * l - 1))


def check_eq3_consistency(s: int, alpha: float, n: int) -> float:
    l = math.floor(alpha * n / 2)
    if l < 1:
        raise ParameterError(f"alpha*n/2 must be at least 1, got alpha={alpha}, n={n}")
    residual = abs(threshold_T(s, s, alpha) * n * (n - 1) / 2 - erdos_gallai_ex(n, l))
    logger.debug(f"T_(s,s) versus Erdos-Gallai at s={s}, alpha={alpha}, n={n}: residual {residual}")
    return residual


def construction_edges(s: int, t: int, alpha: float, n: int) -> Tuple[int, int]:
    """Edge counts of M_{n, round(alpha s n/(s+t))} and L_{n, round(alpha n)}."""
    _check_classes(s, t)
    _check_unit("alpha", alpha)
    x_m = round(alpha * s * n / (s + t))
    x_l = round(alpha * n)
    if not (0 <= x_m <= n and 0 <= x_l <= n):
        raise ParameterError(f"rounded construction orders {x_m}, {x_l} fall outside [0, {n}]")
    return m_edge_count(n, x_m), l_edge_count(n, x_l)


def check_T_matches_constructions(s: int, t: int, alpha: float, n: int) -> float:
    m_edges, l_edges = construction_edges(s, t, alpha, n)
    return abs(threshold_T(s, t, alpha) * n * (n - 1) / 2 - max(m_edges, l_edges))


def kst_upper_bound(n: int, s: int, t: int) -> float:
    """Classical explicit Kovari-Sos-Turan bound on ex(n, K_{s,t})."""
    _check_classes(s, t)
    if t > n:
        raise ParameterError(f"t={t} exceeds n={n}")
    return 0.5 * ((t - 1) ** (1.0 / s) * (n - s + 1) * n ** (1.0 - 1.0 / s) + (s - 1) * n)


def epsilon_prime(s: int, t: int, alpha: float, eps: float) -> float:
    if not 1 <= s < t:
        raise ParameterError(f"improvement needs t > s >= 1, got s={s}, t={t}")
    _check_unit("alpha", alpha)
    _check_unit("eps", eps)
    return 0.25 * min(
        eps * alpha * alpha / (3 * t + 1),
        eps * s * alpha / ((3 * t + 1) * (s + t))
    )


def alpha_prime(alpha: float, eps: float) -> float:
    _check_unit("alpha", alpha)
    _check_unit("eps", eps)
    return (6.0 - 4.0 * eps) / (6.0 - 3.0 * eps) * alpha


def retile_switch_level(alpha: float, eps: float) -> float:
    """Coverage fraction above which an iteration round only retiles."""
    return (1.0 - eps / 4.0) * alpha_prime(alpha, eps)


def lower_bound_orders(s: int, t: int, l: int) -> Tuple[int, int]:
    """Orders x of M_{n,x} and L_{n,x} that hold no l disjoint copies of K_{s,t}."""
    _check_classes(s, t)
    if l < 1:
        raise ParameterError(f"l must be positive, got {l}")
    return s * l - 1, (s + t) * l - 1


def tiling_threshold_edges(s: int, t: int, beta: float, n: int) -> float:
    """Asymptotic upper bound T_{s,t}(beta(s+t)) C(n,2) on ex(n, beta n x K_{s,t})."""
    return threshold_T(s, t, beta * (s + t)) * math.comb(n, 2)
