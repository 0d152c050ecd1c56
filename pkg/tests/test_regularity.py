import random

from fractions import Fraction

import pytest

from hypothesis import given, settings
from hypothesis import strategies as st

from components.exceptions import CapacityError, ParameterError
from components.graph_core import Graph, make_complete_bipartite
from components.harness import instances
from components.regularity import (
    REFUTED,
    UNREFUTED,
    is_eps_regular_exact,
    is_eps_regular_sampled,
    pair_density,
    pair_stats,
    slicing_check,
    witness_violates,
)

from .strategies import bipartite_graphs


def test_pair_density_examples():
    k33 = make_complete_bipartite(3, 3)
    assert pair_density(k33, [0, 1, 2], [3, 4, 5]) == 1.0
    assert pair_density(Graph(6, []), [0, 1, 2], [3, 4, 5]) == 0.0
    missing = Graph(6, [edge for edge in k33.edges if edge != (0, 3)])
    assert pair_stats(missing, [0, 1, 2], [3, 4, 5]).density == Fraction(8, 9)


def test_pair_sides_are_validated():
    with pytest.raises(ParameterError):
        pair_density(Graph(4, []), [], [1])
    with pytest.raises(ParameterError):
        pair_density(Graph(4, []), [0, 1], [1, 2])


def test_homogeneous_pairs_are_regular():
    assert is_eps_regular_exact(make_complete_bipartite(5, 5), range(5), range(5, 10), 0.1).regular
    assert is_eps_regular_exact(Graph(10, []), range(5), range(5, 10), 0.1).regular


def test_concentrated_pair_is_irregular():
    graph, side_a, side_b = instances.concentrated_pair(8)
    verdict = is_eps_regular_exact(graph, side_a, side_b, 0.4)
    assert not verdict.regular
    assert witness_violates(graph, side_a, side_b, 0.4, verdict.witness)
    assert is_eps_regular_exact(graph, side_a, side_b, 0.6).regular


def test_exact_checker_respects_side_limit():
    graph = make_complete_bipartite(17, 2)
    with pytest.raises(CapacityError):
        is_eps_regular_exact(graph, range(17), range(17, 19), 0.5)


def test_sampled_checker():
    graph = make_complete_bipartite(6, 6)
    for seed in range(5):
        assert is_eps_regular_sampled(graph, range(6), range(6, 12), 0.2, trials=50, seed=seed).verdict == UNREFUTED

    graph, side_a, side_b = instances.concentrated_pair(8)
    refuted = 0
    for seed in range(10):
        result = is_eps_regular_sampled(graph, side_a, side_b, 0.4, trials=40, seed=seed)
        if result.verdict == REFUTED:
            refuted += 1
            assert witness_violates(graph, side_a, side_b, 0.4, result.witness)
    assert refuted >= 9


@settings(max_examples=60, deadline=None)
@given(bipartite_graphs(max_side=5), st.sampled_from([0.2, 0.3, 0.5]))
def test_exact_witnesses_are_genuine(case, eps):
    graph, side_a, side_b = case
    verdict = is_eps_regular_exact(graph, side_a, side_b, eps)
    if verdict.regular:
        assert verdict.witness is None
    else:
        assert witness_violates(graph, side_a, side_b, eps, verdict.witness)


def test_slicing_with_whole_pair():
    graph = make_complete_bipartite(4, 4)
    report = slicing_check(graph, range(4), range(4, 8), 0.25, range(4), range(4, 8))
    assert report.alpha == 1
    assert report.eps_prime == Fraction(1, 2)
    assert report.premise and report.holds


def test_slicing_on_random_dense_pairs():
    rng = random.Random(21)
    premises = 0
    for _ in range(100):
        graph, side_a, side_b = instances.random_bipartite(rng, 12, 12, 0.95 + 0.05 * rng.random())
        report = slicing_check(graph, side_a, side_b, 0.3, side_a[:6], side_b[:6])
        assert report.holds
        premises += report.premise
    assert premises > 0


@settings(max_examples=100, deadline=None)
@given(bipartite_graphs(max_side=5), st.sampled_from([0.2, 0.3, 0.5]))
def test_exact_checker_is_symmetric(case, eps):
    graph, side_a, side_b = case
    forward = is_eps_regular_exact(graph, side_a, side_b, eps)
    backward = is_eps_regular_exact(graph, side_b, side_a, eps)
    assert forward.regular == backward.regular


@settings(max_examples=100, deadline=None)
@given(bipartite_graphs(max_side=5), st.sampled_from([0.1, 0.2, 0.3, 0.4]), st.sampled_from([0.1, 0.2, 0.3, 0.5]))
def test_regularity_is_monotone_in_eps(case, eps, step):
    graph, side_a, side_b = case
    if is_eps_regular_exact(graph, side_a, side_b, eps).regular:
        assert is_eps_regular_exact(graph, side_a, side_b, eps + step).regular


@settings(max_examples=100, deadline=None)
@given(bipartite_graphs(max_side=6), st.sampled_from([0.2, 0.3, 0.5]), st.integers(min_value=0, max_value=50))
def test_sampled_witnesses_are_genuine(case, eps, seed):
    graph, side_a, side_b = case
    result = is_eps_regular_sampled(graph, side_a, side_b, eps, trials=20, seed=seed)
    if result.verdict == REFUTED:
        assert witness_violates(graph, side_a, side_b, eps, result.witness)
        assert not is_eps_regular_exact(graph, side_a, side_b, eps).regular
    else:
        assert result.witness is None


def test_slicing_boundary_alpha_equal_to_eps():
    # K_{2,2} on {0,1} x {4,5} inside a 4 x 4 pair: 1/2-regular, but its halves have density 1.
    graph = Graph(8, [(0, 4), (0, 5), (1, 4), (1, 5)])
    report = slicing_check(graph, range(4), range(4, 8), 0.5, [0, 1], [4, 5])
    assert report.pair_regular
    assert report.alpha == Fraction(1, 2) == report.eps
    assert report.density_gap == Fraction(3, 4)
    assert not report.conclusion
    assert not report.premise and report.holds
