"""Exhaustive small-graph corpora.

Underlying graphs come from the networkx graph atlas (every graph on at most
seven vertices, one per isomorphism class).  Signatures are enumerated one
per switching class: edges of a BFS spanning forest are fixed positive and
the remaining edges take every sign pattern.
"""
from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Iterator, Optional

import networkx as nx

from .balance import _bfs_forest
from .core import SIMPLY_SIGNED, Graph, SignedGraph

ATLAS_MAX_N = 7


def atlas_graphs(nmax: int, min_n: int = 1, max_edges: Optional[int] = None) -> list[Graph]:
    """All graphs with ``min_n <= n <= nmax`` up to isomorphism, in atlas order."""
    if nmax > ATLAS_MAX_N:
        raise ValueError(f"the atlas only covers n <= {ATLAS_MAX_N}")
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n < min_n or n > nmax:
            continue
        if max_edges is not None and h.number_of_edges() > max_edges:
            continue
        out.append(Graph(n, tuple(sorted((min(u, v) + 1, max(u, v) + 1) for u, v in h.edges()))))
    return out


def _forest_ids(gamma: Graph) -> set[int]:
    return _bfs_forest(gamma.with_sign(1)).tree


def switching_classes(gamma: Graph) -> list[SignedGraph]:
    """One signed graph per switching class on ``gamma``."""
    tree = _forest_ids(gamma)
    free = [k for k in range(1, len(gamma.edges) + 1) if k not in tree]
    out = []
    for bits in product((1, -1), repeat=len(free)):
        signs = dict(zip(free, bits))
        out.append(SignedGraph.from_edges(
            gamma.n, [(u, v, signs.get(k, 1)) for k, (u, v) in enumerate(gamma.edges, start=1)]))
    return out


def all_signatures(gamma: Graph) -> list[SignedGraph]:
    """Every one of the ``2^m`` signatures on ``gamma``."""
    return [SignedGraph.from_edges(gamma.n, [(u, v, s) for (u, v), s in zip(gamma.edges, bits)])
            for bits in product((1, -1), repeat=len(gamma.edges))]


def signed_corpus(nmax: int, min_n: int = 1, max_edges: Optional[int] = None
                  ) -> Iterator[SignedGraph]:
    for gamma in atlas_graphs(nmax, min_n, max_edges):
        yield from switching_classes(gamma)


def digon_classes(gamma: Graph, doubled: tuple[int, ...]) -> list[SignedGraph]:
    """Switching classes of the multigraph with a digon on each edge index in ``doubled``.

    The positive member of each digon comes first in edge order and the
    negative copies are appended after the simple edges.
    """
    tree = _forest_ids(gamma)
    dset = set(doubled)
    free = [k for k in range(1, len(gamma.edges) + 1) if k not in tree and k not in dset]
    out = []
    for bits in product((1, -1), repeat=len(free)):
        signs = dict(zip(free, bits))
        edges = [(u, v, signs.get(k, 1)) for k, (u, v) in enumerate(gamma.edges, start=1)]
        edges += [(*gamma.edges[k - 1], -1) for k in doubled]
        out.append(SignedGraph.from_edges(gamma.n, edges, SIMPLY_SIGNED))
    return out


def _multiplicity_key(gamma: Graph, doubled: tuple[int, ...]) -> tuple:
    """Canonical form of the edge multiplicities under vertex relabelling."""
    mult = {p: 1 for p in gamma.edges}
    for k in doubled:
        mult[gamma.edges[k - 1]] = 2
    best = None
    for perm in permutations(range(1, gamma.n + 1)):
        key = tuple(sorted((min(perm[u - 1], perm[v - 1]), max(perm[u - 1], perm[v - 1]), c)
                           for (u, v), c in mult.items()))
        if best is None or key < best:
            best = key
    return best


def multigraph_corpus(nmax: int, min_n: int = 1, max_edges: Optional[int] = None,
                      max_digons: Optional[int] = None) -> Iterator[SignedGraph]:
    """Simply signed multigraphs with at least one digon.

    Underlying multigraphs are taken once per isomorphism class, then every
    switching class on each.  ``max_edges`` bounds the total edge count
    including the digon copies.
    """
    for gamma in atlas_graphs(nmax, min_n):
        m = len(gamma.edges)
        top = m if max_digons is None else min(m, max_digons)
        seen = set()
        for d in range(1, top + 1):
            if max_edges is not None and m + d > max_edges:
                break
            for doubled in combinations(range(1, m + 1), d):
                key = _multiplicity_key(gamma, doubled)
                if key in seen:
                    continue
                seen.add(key)
                yield from digon_classes(gamma, doubled)
