from itertools import combinations

import networkx as nx

from hypothesis import strategies as st

from components.graph_core import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [pair for pair, kept in zip(pairs, keep) if kept])


@st.composite
def bipartite_graphs(draw, max_side: int = 6):
    """A bipartite graph with its sides, vertices interleaved between them."""
    size_a = draw(st.integers(min_value=1, max_value=max_side))
    size_b = draw(st.integers(min_value=1, max_value=max_side))
    n = size_a + size_b
    order = draw(st.permutations(range(n)))
    side_a, side_b = sorted(order[:size_a]), sorted(order[size_a:])
    pairs = [(min(u, v), max(u, v)) for u in side_a for v in side_b]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [pair for pair, kept in zip(pairs, keep) if kept]), side_a, side_b


def class_sizes(max_t: int = 4):
    return st.integers(min_value=1, max_value=max_t).flatmap(
        lambda t: st.tuples(st.integers(min_value=1, max_value=t), st.just(t))
    )


def to_networkx(graph: Graph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(range(graph.n))
    result.add_edges_from(graph.edges)
    return result
