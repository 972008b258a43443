import networkx as nx
import numpy as np
import pytest
from hypothesis import strategies as st

from kcolour.graph import EdgeColouring, SimpleGraph


def to_nx(graph: SimpleGraph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(graph.vertices)
    g.add_edges_from(graph.edges())
    return g


def nx_connectivity(graph: SimpleGraph) -> int:
    g = to_nx(graph)
    if g.number_of_nodes() < 2:
        return 0
    return nx.node_connectivity(g)


def random_graph(rng, n, p=None):
    p = rng.uniform(0.2, 0.9) if p is None else p
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
    return SimpleGraph.from_edges(range(1, n + 1), edges)


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph.from_edges(range(1, n + 1), [p for p, b in zip(pairs, keep) if b])


@st.composite
def colourings(draw, min_n=2, max_n=8, max_r=4):
    n = draw(st.integers(min_n, max_n))
    r = draw(st.integers(1, max_r))
    cols = draw(st.lists(st.integers(1, r), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    return EdgeColouring(n, r, tuple(cols))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
