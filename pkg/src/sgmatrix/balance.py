"""Walk signs, balance and antibalance, switching equivalence and isomorphism."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .core import (Edge, SignedGraph, SignedGraphError, SizeGuardError,
                   SwitchingFunction, negate, switch_fn)

ISOMORPHISM_MAX_N = 8


@dataclass(frozen=True)
class BalanceCertificate:
    """Outcome of a balance test.

    When ``balanced`` is true, ``bipartition`` is a Harary bipartition
    ``(X, Y)`` whose cut is exactly the set of negative edges and ``theta`` is
    the switching that makes every edge positive (equivalently a potential
    ``μ`` with ``σ(vw) = μ(v) μ(w)``).  Otherwise ``witness`` lists the edge
    ids of a negative circle in cyclic order.
    """

    balanced: bool
    bipartition: Optional[tuple[frozenset[int], frozenset[int]]] = None
    witness: Optional[tuple[int, ...]] = None
    theta: Optional[SwitchingFunction] = None


def walk_sign(g: SignedGraph, walk: Sequence[int]) -> int:
    """Product of the edge signs along ``walk`` (edge ids, repeats counted)."""
    edges = [g.edge(e) for e in walk]
    if not edges:
        return 1
    if not _is_walk(edges):
        raise SignedGraphError(f"edge sequence {list(walk)} is not a walk")
    s = 1
    for e in edges:
        s *= e.sign
    return s


def _is_walk(edges: list[Edge]) -> bool:
    for start in edges[0].ends:
        here, ok = start, True
        for e in edges:
            if here not in e.ends:
                ok = False
                break
            here = e.other(here)
        if ok:
            return True
    return False


@dataclass
class _Forest:
    theta: list[int]            # index v; theta[0] unused
    parent: list[Optional[Edge]]
    depth: list[int]
    comp: list[int]             # component index per vertex
    tree: set[int]              # tree edge ids


def _bfs_forest(g: SignedGraph) -> _Forest:
    """BFS spanning forest from the least vertex of each component.

    ``theta[w]`` is the sign of the tree path from the root to ``w``, so
    switching by ``theta`` makes every tree edge positive.
    """
    n = g.n
    adj = g.adjacency_lists()
    theta = [1] * (n + 1)
    parent: list[Optional[Edge]] = [None] * (n + 1)
    depth = [0] * (n + 1)
    comp = [-1] * (n + 1)
    tree: set[int] = set()
    c = 0
    for root in g.vertices:
        if comp[root] >= 0:
            continue
        comp[root] = c
        q = deque([root])
        while q:
            x = q.popleft()
            for y, e in sorted(adj[x], key=lambda t: t[1].id):
                if comp[y] < 0:
                    comp[y] = c
                    parent[y] = e
                    depth[y] = depth[x] + 1
                    theta[y] = theta[x] * e.sign
                    tree.add(e.id)
                    q.append(y)
        c += 1
    return _Forest(theta, parent, depth, comp, tree)


def _fundamental_circle(f: _Forest, e: Edge) -> tuple[int, ...]:
    """Edge ids of the circle closed by non-tree edge ``e``, in cyclic order."""
    a, b = e.u, e.v
    left: list[int] = []   # from u upward
    right: list[int] = []  # from v upward
    while a != b:
        if f.depth[a] >= f.depth[b]:
            pe = f.parent[a]
            left.append(pe.id)
            a = pe.other(a)
        else:
            pe = f.parent[b]
            right.append(pe.id)
            b = pe.other(b)
    # e goes u -> v, then back from v to the meeting vertex and down to u
    return (e.id, *right, *reversed(left))


def is_balanced(g: SignedGraph) -> BalanceCertificate:
    """Decide balance by switching a BFS spanning forest to all positive.

    The graph is balanced iff no edge stays negative afterwards.  If one
    does, the lowest-id such edge closes a negative fundamental circle.
    """
    f = _bfs_forest(g)
    th = f.theta
    for e in g.edges:
        if e.id in f.tree:
            continue
        if th[e.u] * e.sign * th[e.v] < 0:
            return BalanceCertificate(False, witness=_fundamental_circle(f, e))
    X = frozenset(v for v in g.vertices if th[v] < 0)
    Y = frozenset(v for v in g.vertices if th[v] > 0)
    return BalanceCertificate(True, bipartition=(X, Y),
                              theta=SwitchingFunction(tuple(th[1:])))


def is_antibalanced(g: SignedGraph) -> BalanceCertificate:
    """Balance certificate of ``-g``; its bipartition cuts exactly the positive edges."""
    return is_balanced(negate(g))


def balanced_component_count(g: SignedGraph) -> tuple[int, int]:
    """``(b, c)``: balanced components and all components."""
    f = _bfs_forest(g)
    c = max(f.comp[1:], default=-1) + 1
    unbalanced = set()
    for e in g.edges:
        if e.id not in f.tree and f.theta[e.u] * e.sign * f.theta[e.v] < 0:
            unbalanced.add(f.comp[e.u])
    return c - len(unbalanced), c


def _same_underlying(g1: SignedGraph, g2: SignedGraph) -> bool:
    return g1.n == g2.n and g1.m == g2.m and all(
        a.pair() == b.pair() for a, b in zip(g1.edges, g2.edges))


def switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> Optional[SwitchingFunction]:
    """A ``θ`` with ``switch_fn(g1, θ) == g2``, or ``None``.

    Both graphs are normalized so a common spanning forest is all positive;
    they are equivalent iff the normal forms agree.
    """
    if not _same_underlying(g1, g2):
        raise SignedGraphError("switching equivalence needs identical underlying edge lists")
    f = _bfs_forest(g1)
    t1 = f.theta
    # same forest applies to g2 since the underlying graphs coincide
    t2 = [1] * (g2.n + 1)
    for v in sorted(g2.vertices, key=lambda x: f.depth[x]):
        pe = f.parent[v]
        if pe is not None:
            t2[v] = t2[pe.other(v)] * g2.edge(pe.id).sign
    for a, b in zip(g1.edges, g2.edges):
        if t1[a.u] * a.sign * t1[a.v] != t2[b.u] * b.sign * t2[b.v]:
            return None
    return SwitchingFunction(tuple(t1[v] * t2[v] for v in g1.vertices))


def _pair_multiplicity(g: SignedGraph) -> dict[tuple[int, int], list[Edge]]:
    out: dict[tuple[int, int], list[Edge]] = {}
    for e in g.edges:
        out.setdefault(e.pair(), []).append(e)
    return out


def _underlying_isomorphisms(g1: SignedGraph, g2: SignedGraph):
    """Yield vertex maps ``f`` (dicts) carrying the underlying multigraph of g1 onto g2."""
    n = g1.n
    mult1 = {p: len(es) for p, es in _pair_multiplicity(g1).items()}
    mult2 = {p: len(es) for p, es in _pair_multiplicity(g2).items()}
    deg1 = [0] * (n + 1)
    deg2 = [0] * (n + 1)
    for (a, b), k in mult1.items():
        deg1[a] += k
        deg1[b] += k
    for (a, b), k in mult2.items():
        deg2[a] += k
        deg2[b] += k
    if sorted(deg1[1:]) != sorted(deg2[1:]) or sorted(mult1.values()) != sorted(mult2.values()):
        return

    def m1(a, b):
        return mult1.get((min(a, b), max(a, b)), 0)

    def m2(a, b):
        return mult2.get((min(a, b), max(a, b)), 0)

    f: dict[int, int] = {}
    used = [False] * (n + 1)

    def extend(v):
        if v > n:
            yield dict(f)
            return
        for w in range(1, n + 1):
            if used[w] or deg1[v] != deg2[w]:
                continue
            if all(m1(u, v) == m2(f[u], w) for u in range(1, v)):
                f[v] = w
                used[w] = True
                yield from extend(v + 1)
                used[w] = False
                del f[v]

    yield from extend(1)


def switching_isomorphic(g1: SignedGraph, g2: SignedGraph
                         ) -> Optional[tuple[dict[int, int], SwitchingFunction]]:
    """Find ``(f, θ)`` such that relabelling ``g1`` by ``f`` then switching by ``θ`` gives ``g2``.

    Exhaustive over underlying isomorphisms; limited to ``n <= 8``.
    """
    if max(g1.n, g2.n) > ISOMORPHISM_MAX_N:
        raise SizeGuardError(f"switching_isomorphic is limited to n <= {ISOMORPHISM_MAX_N}")
    if g1.n != g2.n or g1.m != g2.m:
        return None
    by_pair2 = _pair_multiplicity(g2)
    for f in _underlying_isomorphisms(g1, g2):
        h = g1.relabel(f)
        by_pair_h = _pair_multiplicity(h)
        pairs = sorted(by_pair2)
        # parallel pairs can be matched either way round
        choices = [(0,) if len(by_pair2[p]) == 1 else (0, 1) for p in pairs]
        for pick in product(*choices):
            signs = [0] * g2.m
            for p, flip in zip(pairs, pick):
                hs = [e.sign for e in by_pair_h[p]]
                if flip:
                    hs.reverse()
                for e, s in zip(by_pair2[p], hs):
                    signs[e.id - 1] = s
            theta = switching_equivalent(g2.with_signs(signs), g2)
            if theta is not None:
                return f, theta
    return None


def switched_to_positive(g: SignedGraph) -> Optional[SignedGraph]:
    """The all-positive switching of ``g`` if ``g`` is balanced."""
    cert = is_balanced(g)
    return switch_fn(g, cert.theta) if cert.balanced else None
