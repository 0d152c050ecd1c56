import math

from itertools import combinations

import pytest

from hypothesis import given
from hypothesis import strategies as st

import constants

from components.exceptions import ParameterError
from components.graph_core import Graph
from components.harness import oracles
from components.thresholds import (
    ThresholdParams,
    alpha_prime,
    check_T_matches_constructions,
    check_eq3_consistency,
    crossover_alpha,
    construction_edges,
    epsilon_prime,
    erdos_gallai_ex,
    kst_upper_bound,
    threshold_T,
    threshold_branches,
)
from components.tiling import Pattern, enumerate_copies

from .strategies import class_sizes

alphas = st.floats(min_value=0.01, max_value=0.99)


def test_threshold_values():
    assert threshold_T(1, 1, 0.5) == pytest.approx(0.4375)
    m_branch, l_branch = threshold_branches(1, 2, 0.6)
    assert m_branch == pytest.approx(0.36) and l_branch == pytest.approx(0.36)


@given(class_sizes(), alphas, st.integers(min_value=2, max_value=5))
def test_threshold_is_scale_invariant(sizes, alpha, k):
    s, t = sizes
    assert threshold_T(k * s, k * t, alpha) == threshold_T(s, t, alpha)


@given(class_sizes(), alphas)
def test_threshold_lies_between_branches(sizes, alpha):
    value = threshold_T(*sizes, alpha)
    assert value == max(threshold_branches(*sizes, alpha))
    assert 0.0 < value < 1.0


def test_threshold_rejects_bad_arguments():
    with pytest.raises(ParameterError):
        threshold_T(2, 1, 0.5)
    with pytest.raises(ParameterError):
        threshold_T(1, 2, 1.0)
    with pytest.raises(ParameterError):
        ThresholdParams(1, 2, 0.5, 0.0)


def test_crossover():
    assert crossover_alpha(1, 1) == pytest.approx(0.8)
    assert crossover_alpha(1, 2) == pytest.approx(0.6)
    for t in range(1, 5):
        for s in range(1, t + 1):
            crossing = crossover_alpha(s, t)
            if crossing < 1.0:
                m_branch, l_branch = threshold_branches(s, t, crossing)
                assert abs(m_branch - l_branch) <= 1e-12


def test_erdos_gallai_values():
    assert erdos_gallai_ex(10, 1) == 0
    assert erdos_gallai_ex(6, 3) == 10
    assert erdos_gallai_ex(10, 3) == 17
    with pytest.raises(ParameterError):
        erdos_gallai_ex(5, 3)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_erdos_gallai_against_exhaustive_scan(n):
    table, graphs = oracles.erdos_gallai_table(n)
    assert graphs == 2 ** math.comb(n, 2)
    for l, found in table.items():
        assert found == erdos_gallai_ex(n, l)


@pytest.mark.skipif(not constants.RUN_STRETCH, reason="set TILINGLAB_STRETCH=1 for the n = 7 scan")
def test_erdos_gallai_stretch():
    table, _ = oracles.erdos_gallai_table(7)
    assert table == {l: erdos_gallai_ex(7, l) for l in (1, 2, 3)}


def test_eq3_consistency():
    first = check_eq3_consistency(1, 0.5, 1000)
    assert first <= 3000
    assert check_eq3_consistency(2, 0.5, 1000) == first
    ratios = [check_eq3_consistency(1, 0.5, n) / n ** 2 for n in (1000, 2000, 4000)]
    assert ratios[2] <= ratios[0]


def test_constructions_match_threshold():
    assert check_T_matches_constructions(1, 2, 0.3, 3000) <= 9000
    m_edges, l_edges = construction_edges(1, 2, 0.3, 3000)
    assert m_edges > l_edges
    assert check_T_matches_constructions(1, 2, 0.9, 3000) <= 9000
    m_edges, l_edges = construction_edges(1, 2, 0.9, 3000)
    assert l_edges > m_edges
    m_edges, l_edges = construction_edges(1, 1, 0.8, 500)
    assert abs(m_edges - l_edges) <= 3 * 500


def _ex_four_cycle(n):
    square = Pattern.complete_bipartite(2, 2)
    pairs = list(combinations(range(n), 2))
    best = 0
    for mask in range(1 << len(pairs)):
        edges = [pair for k, pair in enumerate(pairs) if mask >> k & 1]
        if len(edges) > best and not enumerate_copies(Graph(n, edges), square):
            best = len(edges)
    return best


def test_kst_bound_dominates_small_extremal_numbers():
    assert kst_upper_bound(10, 1, 1) >= 0
    assert _ex_four_cycle(5) == 6
    assert kst_upper_bound(5, 2, 2) >= 6
    assert kst_upper_bound(7, 2, 2) >= 9


def test_kst_bound_growth_exponent():
    s, t = 2, 3
    ratio = kst_upper_bound(2 * 10 ** 6, s, t) / kst_upper_bound(10 ** 6, s, t)
    assert ratio == pytest.approx(2 ** (2 - 1 / s), rel=0.05)


def test_improvement_constants():
    assert epsilon_prime(1, 2, 0.5, 0.1) == pytest.approx(0.25 * 0.05 / 21)
    with pytest.raises(ParameterError):
        epsilon_prime(2, 2, 0.5, 0.1)
    assert alpha_prime(0.5, 0.1) < 0.5
    params = ThresholdParams(1, 2, 0.5, 0.1)
    assert params.eps_prime == epsilon_prime(1, 2, 0.5, 0.1)
    assert params.threshold == threshold_T(1, 2, 0.5)
