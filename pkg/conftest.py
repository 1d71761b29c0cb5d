import networkx as nx
import pytest
from hypothesis import strategies as st

from BoundVerifier import ChemGraphEnumerator
from ChemGraph import MAX_DEGREE, ChemGraph


@st.composite
def chemical_graphs(draw, min_n=2, max_n=9):
    """Random connected graphs with maximum degree 4: a random tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    degree = [0] * n
    edges = set()
    for v in range(1, n):
        u = draw(st.sampled_from([w for w in range(v) if degree[w] < MAX_DEGREE]))
        edges.add((u, v))
        degree[u] += 1
        degree[v] += 1
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    for u, v in extra:
        key = (min(u, v), max(u, v))
        if u != v and key not in edges and degree[u] < MAX_DEGREE and degree[v] < MAX_DEGREE:
            edges.add(key)
            degree[u] += 1
            degree[v] += 1
    return ChemGraph.from_edges(n, sorted(edges))


@pytest.fixture(scope="session")
def enumerator():
    return ChemGraphEnumerator()


@pytest.fixture
def star():
    """K_{1,4}"""
    return ChemGraph.from_networkx(nx.star_graph(4))


@pytest.fixture
def path5():
    return ChemGraph.from_networkx(nx.path_graph(5))


@pytest.fixture
def cycle5():
    return ChemGraph.from_networkx(nx.cycle_graph(5))
