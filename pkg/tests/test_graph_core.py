import math

import networkx as nx
import pytest

from hypothesis import given, settings
from hypothesis import strategies as st

from components.exceptions import CapacityError, EdgeListError, ParameterError
from components.graph_core import (
    ExpansionMap,
    Graph,
    complement,
    expand,
    make_complete_bipartite,
    make_L,
    make_M,
    make_path,
    random_graph_gnm,
)
from components.graph_core.edge_list import read_edge_list, write_edge_list

from .strategies import graphs


def test_complete_bipartite_counts():
    assert make_complete_bipartite(0, 5).edge_count == 0
    assert make_complete_bipartite(0, 5).n == 5
    assert make_complete_bipartite(1, 1).edge_count == 1
    assert make_complete_bipartite(3, 4).edge_count == 12


def test_M_and_L_counts():
    assert make_M(10, 3).edge_count == 24
    assert make_M(6, 0).edge_count == 0
    assert make_M(6, 6).edge_count == 15
    assert make_L(8, 5).edge_count == 10
    assert [v for v in range(8) if make_L(8, 5).degree(v) == 0] == [5, 6, 7]
    assert make_L(7, 1).edge_count == 0


def test_M_rejects_x_above_n():
    with pytest.raises(ParameterError):
        make_M(4, 5)


def test_graph_rejects_loops_and_duplicates():
    with pytest.raises(ParameterError):
        Graph(3, [(1, 1)])
    with pytest.raises(ParameterError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(ParameterError):
        Graph(2, [(0, 2)])


def test_complement():
    assert complement(make_M(5, 5)).edge_count == 0
    assert complement(Graph(4, [])).edge_count == 6


def test_expand_edge_and_path():
    k2, _ = expand(Graph(2, [(0, 1)]), 2)
    assert k2.n == 4 and k2.edge_count == 4
    assert nx.is_isomorphic(nx.complete_bipartite_graph(2, 2), nx.Graph(list(k2.edges)))

    p3, expansion = expand(make_path(3), 3)
    assert (p3.n, p3.edge_count) == (9, 18)
    assert expansion.project(7) == 2
    assert list(expansion.fiber(1)) == [3, 4, 5]


@given(graphs(max_n=6), st.integers(min_value=1, max_value=3))
def test_expansion_multiplies_counts(graph, r):
    expanded, expansion = expand(graph, r)
    assert expanded.n == r * graph.n
    assert expanded.edge_count == r * r * graph.edge_count
    for x, y in expanded.edges:
        assert graph.has_edge(expansion.project(x), expansion.project(y))


def test_expansion_composes():
    graph = make_M(4, 2)
    twice, first = expand(graph, 2)
    nested, second = expand(twice, 3)
    direct, _ = expand(graph, 6)
    assert first.compose(second) == ExpansionMap(4, 6)
    assert nested.edges == direct.edges


def test_expand_respects_capacity(monkeypatch):
    monkeypatch.setattr("constants.MAX_N", 10)
    with pytest.raises(CapacityError):
        expand(make_path(4), 3)


def test_gnm_is_deterministic():
    assert random_graph_gnm(20, 95, seed=7).edges == random_graph_gnm(20, 95, seed=7).edges
    assert random_graph_gnm(5, 10, seed=1).edge_count == math.comb(5, 2)
    assert random_graph_gnm(5, 0, seed=1).edge_count == 0
    with pytest.raises(ParameterError):
        random_graph_gnm(4, 7, seed=0)


def test_edge_list_parses_minimal_file():
    graph = read_edge_list("2 1\n0 1")
    assert graph.n == 2 and graph.sorted_edges() == [(0, 1)]
    assert write_edge_list(graph) == "2 1\n0 1\n"


@pytest.mark.parametrize("text, line", [
    ("3 1\n1 1", 2),
    ("3 2\n0 1", 1),
    ("3 1\n1 0", 2),
    ("3 2\n0 2\n0 1", 3),
    ("3 2\n0 1\n0 1", 3),
    ("3 1\n0 3", 2),
    ("3  1\n0 1", 1),
    ("3 1\n0 01", 2),
    ("", 1),
])
def test_edge_list_errors_carry_line_numbers(text, line):
    with pytest.raises(EdgeListError) as excinfo:
        read_edge_list(text)
    assert excinfo.value.line == line


@settings(max_examples=50)
@given(graphs())
def test_edge_list_text_is_canonical(graph):
    text = write_edge_list(graph)
    assert text.endswith("\n") and "\r" not in text
    assert write_edge_list(read_edge_list(text)) == text
