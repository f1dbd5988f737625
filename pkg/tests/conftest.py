from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from sgmatrix.core import SIMPLE, SIMPLY_SIGNED, SignedGraph

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def signed_graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    states = draw(st.lists(st.sampled_from((0, 1, -1)), min_size=len(pairs), max_size=len(pairs)))
    edges = [(u, v, s) for (u, v), s in zip(pairs, states) if s]
    order = draw(st.permutations(range(len(edges))))
    return SignedGraph.from_edges(n, [edges[k] for k in order], SIMPLE)


@st.composite
def multigraphs(draw, min_n=1, max_n=5):
    """Simply signed multigraphs; state 2 puts a digon on the pair."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    states = draw(st.lists(st.sampled_from((0, 1, -1, 2)), min_size=len(pairs),
                           max_size=len(pairs)))
    edges = []
    for (u, v), s in zip(pairs, states):
        if s == 2:
            edges += [(u, v, 1), (v, u, -1)]
        elif s:
            edges.append((u, v, s))
    return SignedGraph.from_edges(n, edges, SIMPLY_SIGNED)


def switchings(n):
    return st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n)


@pytest.fixture
def fixtures_dir():
    return FIXTURES
