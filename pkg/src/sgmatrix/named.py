"""Small named graphs and signed graphs used in tests, demos and fixtures."""
from __future__ import annotations

from .core import SIMPLY_SIGNED, Graph, Orientation, SignedGraph


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)) + ((1, n),))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)))


def star_graph(leaves: int) -> Graph:
    return complete_bipartite_graph(1, leaves)


def empty_graph(n: int) -> Graph:
    return Graph(n, ())


def petersen_graph() -> Graph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6 + i, 6 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def sigma4() -> SignedGraph:
    """Four vertices, five edges, two negative, in the order e12 e23 e34 e14 e13."""
    return SignedGraph.from_edges(4, [(1, 2, 1), (2, 3, -1), (3, 4, 1), (1, 4, 1), (1, 3, -1)])


def sigma4_orientation() -> Orientation:
    """The reference bidirection of :func:`sigma4`, one pair per edge in edge order."""
    return Orientation(sigma4(), ((-1, 1), (1, 1), (1, -1), (-1, 1), (-1, -1)))


def sigma4_digons() -> SignedGraph:
    """:func:`sigma4` with negative edges added in parallel to ``12`` and ``34``."""
    return SignedGraph.from_edges(4, [e[1:] for e in sigma4().edges] + [(1, 2, -1), (3, 4, -1)],
                                  SIMPLY_SIGNED)


def claw_source() -> SignedGraph:
    """A digon at ``12`` followed by a path 2-3-4-5.

    Its reduced line graph has a vertex (edge 23) whose three neighbours are
    pairwise non-adjacent, so the line graph contains a claw.
    """
    return SignedGraph.from_edges(5, [(1, 2, 1), (1, 2, -1), (2, 3, 1), (3, 4, -1), (4, 5, 1)],
                                  SIMPLY_SIGNED)
