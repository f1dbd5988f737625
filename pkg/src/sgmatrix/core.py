"""Signed graph data model: graphs, orientations and switching.

Vertices are the integers ``1..n``.  Edges carry dense 1-based ids that fix
the column order of the incidence matrix, so every matrix built from a graph
is reproducible bit for bit.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

SIMPLE = "simple"
SIMPLY_SIGNED = "simply-signed"
MODES = (SIMPLE, SIMPLY_SIGNED)


class SignedGraphError(ValueError):
    """Invalid graph, orientation or argument."""


class SizeGuardError(SignedGraphError):
    """An exhaustive routine was asked to run beyond its declared size limit."""


class Edge(NamedTuple):
    id: int
    u: int
    v: int
    sign: int

    @property
    def ends(self) -> tuple[int, int]:
        return (self.u, self.v)

    def other(self, w: int) -> int:
        if w == self.u:
            return self.v
        if w == self.v:
            return self.u
        raise SignedGraphError(f"vertex {w} is not an endpoint of edge {self.id}")

    def pair(self) -> tuple[int, int]:
        return (self.u, self.v) if self.u < self.v else (self.v, self.u)


def _check_sign(s: int) -> int:
    if s not in (1, -1):
        raise SignedGraphError(f"sign must be +1 or -1, got {s!r}")
    return int(s)


@dataclass(frozen=True)
class Graph:
    """An unsigned simple graph on vertices ``1..n``."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = []
        seen = set()
        for u, v in self.edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise SignedGraphError(f"edge {u}{v} has a vertex outside 1..{self.n}")
            if u == v:
                raise SignedGraphError(f"loop at vertex {u}")
            p = (min(u, v), max(u, v))
            if p in seen:
                raise SignedGraphError(f"parallel edge {p[0]}{p[1]} in a simple graph")
            seen.add(p)
            norm.append(p)
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, tuple(edges))

    def with_sign(self, sign: int) -> "SignedGraph":
        """``+Γ`` or ``-Γ``."""
        sign = _check_sign(sign)
        return SignedGraph.from_edges(self.n, [(u, v, sign) for u, v in self.edges])

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def complement(self) -> "Graph":
        es = self.edge_set()
        return Graph(self.n, tuple((i, j) for i in range(1, self.n + 1)
                                   for j in range(i + 1, self.n + 1) if (i, j) not in es))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


@dataclass(frozen=True)
class SignedGraph:
    """A signed simple graph, or a simply signed multigraph.

    ``edges`` is a tuple of :class:`Edge` whose ids are ``1..m`` in order.
    In ``simply-signed`` mode a vertex pair may carry two edges, which must
    then have opposite signs.  Loops are never allowed.
    """

    n: int
    edges: tuple[Edge, ...]
    mode: str = SIMPLE

    def __post_init__(self):
        if self.n < 0:
            raise SignedGraphError("vertex count must be nonnegative")
        if self.mode not in MODES:
            raise SignedGraphError(f"unknown mode {self.mode!r}")
        by_pair: dict[tuple[int, int], list[int]] = {}
        for k, e in enumerate(self.edges, start=1):
            if e.id != k:
                raise SignedGraphError(f"edge ids must be 1..m in order; got {e.id} at position {k}")
            if not (1 <= e.u <= self.n and 1 <= e.v <= self.n):
                raise SignedGraphError(f"edge {e.id} has a vertex outside 1..{self.n}")
            if e.u == e.v:
                raise SignedGraphError(f"edge {e.id} is a loop at vertex {e.u}")
            _check_sign(e.sign)
            by_pair.setdefault(e.pair(), []).append(e.sign)
        for (u, v), signs in by_pair.items():
            if len(signs) == 1:
                continue
            if self.mode == SIMPLE:
                raise SignedGraphError(f"parallel edges {u}{v} in simple mode")
            if len(signs) > 2 or signs[0] == signs[1]:
                raise SignedGraphError(f"parallel edges {u}{v} with the same sign")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int]],
                   mode: str = SIMPLE) -> "SignedGraph":
        """Build from ``(u, v, sign)`` triples; ids follow the iteration order."""
        es = tuple(Edge(k, int(u), int(v), _check_sign(s))
                   for k, (u, v, s) in enumerate(edges, start=1))
        return cls(n, es, mode)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edge(self, eid: int) -> Edge:
        if not 1 <= eid <= len(self.edges):
            raise SignedGraphError(f"unknown edge id {eid}")
        return self.edges[eid - 1]

    def signs(self) -> tuple[int, ...]:
        return tuple(e.sign for e in self.edges)

    def with_signs(self, signs: Sequence[int]) -> "SignedGraph":
        if len(signs) != self.m:
            raise SignedGraphError("one sign per edge required")
        return SignedGraph(self.n, tuple(e._replace(sign=_check_sign(s))
                                         for e, s in zip(self.edges, signs)), self.mode)

    def underlying(self) -> Graph:
        """``|Σ|``; only defined when no vertex pair carries two edges."""
        return Graph(self.n, tuple(e.ends for e in self.edges))

    def is_multigraph(self) -> bool:
        return len({e.pair() for e in self.edges}) != self.m

    def incident(self, v: int) -> list[Edge]:
        return [e for e in self.edges if v == e.u or v == e.v]

    def adjacency_lists(self) -> dict[int, list[tuple[int, Edge]]]:
        adj: dict[int, list[tuple[int, Edge]]] = {v: [] for v in self.vertices}
        for e in self.edges:
            adj[e.u].append((e.v, e))
            adj[e.v].append((e.u, e))
        return adj

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by least vertex."""
        adj = self.adjacency_lists()
        seen: set[int] = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            seen.add(s)
            stack, comp = [s], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y, _ in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def induced(self, vertices: Iterable[int]) -> "SignedGraph":
        """Induced subgraph, relabelled ``1..k`` in increasing vertex order."""
        vs = sorted(set(vertices))
        for v in vs:
            if not 1 <= v <= self.n:
                raise SignedGraphError(f"unknown vertex {v}")
        idx = {v: k for k, v in enumerate(vs, start=1)}
        return SignedGraph.from_edges(
            len(vs), [(idx[e.u], idx[e.v], e.sign) for e in self.edges
                      if e.u in idx and e.v in idx], self.mode)

    def delete_edge(self, eid: int) -> "SignedGraph":
        self.edge(eid)
        return SignedGraph.from_edges(
            self.n, [(e.u, e.v, e.sign) for e in self.edges if e.id != eid], self.mode)

    def positive_part(self) -> "SignedGraph":
        """``Σ⁺`` as a signed graph on the same vertices (all edges positive)."""
        return SignedGraph.from_edges(
            self.n, [(e.u, e.v, 1) for e in self.edges if e.sign > 0], self.mode)

    def negative_part(self) -> "SignedGraph":
        """``Σ⁻`` with its edges kept negative."""
        return SignedGraph.from_edges(
            self.n, [(e.u, e.v, -1) for e in self.edges if e.sign < 0], self.mode)

    def disjoint_union(self, other: "SignedGraph") -> "SignedGraph":
        mode = SIMPLY_SIGNED if SIMPLY_SIGNED in (self.mode, other.mode) else SIMPLE
        return SignedGraph.from_edges(
            self.n + other.n,
            [(e.u, e.v, e.sign) for e in self.edges]
            + [(e.u + self.n, e.v + self.n, e.sign) for e in other.edges], mode)

    def relabel(self, perm: Mapping[int, int] | Sequence[int]) -> "SignedGraph":
        """Rename vertex ``v`` to ``perm[v]`` (sequence form is 0-indexed by ``v-1``)."""
        f = _as_vertex_map(perm, self.n)
        if sorted(f.values()) != list(self.vertices):
            raise SignedGraphError("relabelling must be a permutation of the vertices")
        return SignedGraph.from_edges(self.n, [(f[e.u], f[e.v], e.sign) for e in self.edges],
                                      self.mode)

    def signed_pairs(self) -> Counter:
        """Multiset of ``((min, max), sign)``; equality ignores edge order."""
        return Counter((e.pair(), e.sign) for e in self.edges)


def _as_vertex_map(f, n: int) -> dict[int, int]:
    if isinstance(f, Mapping):
        return {int(k): int(v) for k, v in f.items()}
    return {k: int(v) for k, v in enumerate(f, start=1)}


SwitchingLike = Union[Mapping[int, int], Sequence[int]]


@dataclass(frozen=True)
class SwitchingFunction:
    """``θ: V → {+1, -1}`` stored as a tuple indexed by ``v - 1``."""

    theta: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "theta", tuple(_check_sign(t) for t in self.theta))

    def __call__(self, v: int) -> int:
        return self.theta[v - 1]

    def __len__(self) -> int:
        return len(self.theta)

    def __mul__(self, other: "SwitchingFunction") -> "SwitchingFunction":
        if len(self) != len(other):
            raise SignedGraphError("switching functions on different vertex sets")
        return SwitchingFunction(tuple(a * b for a, b in zip(self.theta, other.theta)))

    def __neg__(self) -> "SwitchingFunction":
        return SwitchingFunction(tuple(-a for a in self.theta))

    @classmethod
    def identity(cls, n: int) -> "SwitchingFunction":
        return cls((1,) * n)

    @classmethod
    def from_set(cls, n: int, X: Iterable[int]) -> "SwitchingFunction":
        X = set(X)
        bad = [x for x in X if not 1 <= x <= n]
        if bad:
            raise SignedGraphError(f"unknown vertices {sorted(bad)}")
        return cls(tuple(-1 if v in X else 1 for v in range(1, n + 1)))

    def switched_set(self) -> frozenset[int]:
        return frozenset(v for v, t in enumerate(self.theta, start=1) if t < 0)


def as_switching(theta: SwitchingLike | SwitchingFunction, n: int) -> SwitchingFunction:
    """Normalize a mapping or sequence to a total switching function on ``1..n``."""
    if isinstance(theta, SwitchingFunction):
        vals = theta.theta
    elif isinstance(theta, Mapping):
        missing = [v for v in range(1, n + 1) if v not in theta]
        if missing:
            raise SignedGraphError(f"switching function missing vertices {missing}")
        extra = [v for v in theta if not 1 <= v <= n]
        if extra:
            raise SignedGraphError(f"switching function has unknown vertices {extra}")
        vals = tuple(theta[v] for v in range(1, n + 1))
    else:
        vals = tuple(theta)
    if len(vals) != n:
        raise SignedGraphError(f"switching function must have {n} values, got {len(vals)}")
    return SwitchingFunction(tuple(vals))


def switch_fn(g: SignedGraph, theta: SwitchingLike | SwitchingFunction) -> SignedGraph:
    """Switch ``g`` by ``θ``: each edge ``uv`` gets sign ``θ(u) σ(uv) θ(v)``."""
    th = as_switching(theta, g.n)
    return g.with_signs([th(e.u) * e.sign * th(e.v) for e in g.edges])


def switch_set(g: SignedGraph, X: Iterable[int]) -> SignedGraph:
    """Reverse the signs of the edges between ``X`` and its complement."""
    return switch_fn(g, SwitchingFunction.from_set(g.n, X))


def negate(g: SignedGraph) -> SignedGraph:
    return g.with_signs([-s for s in g.signs()])


@dataclass(frozen=True)
class Orientation:
    """A bidirection of ``graph`` consistent with its signs.

    ``ends[k]`` holds ``(η(u, e), η(v, e))`` for the edge with id ``k + 1``
    and endpoints ``(u, v)`` as stored on the edge.  Every edge satisfies
    ``σ(e) = -η(u, e) η(v, e)``.
    """

    graph: SignedGraph
    ends: tuple[tuple[int, int], ...] = field(repr=False)

    def __post_init__(self):
        ends = tuple((int(a), int(b)) for a, b in self.ends)
        object.__setattr__(self, "ends", ends)
        if len(ends) != self.graph.m:
            raise SignedGraphError("orientation needs one pair of end signs per edge")
        for e, (a, b) in zip(self.graph.edges, ends):
            if a not in (1, -1) or b not in (1, -1):
                raise SignedGraphError(f"edge {e.id}: end signs must be +1 or -1")
            if -a * b != e.sign:
                raise SignedGraphError(
                    f"edge {e.id}: orientation ({a:+d}, {b:+d}) inconsistent with sign {e.sign:+d}")

    @classmethod
    def default(cls, g: SignedGraph) -> "Orientation":
        """Lower endpoint gets -1; the higher endpoint gets +1 on positive edges, -1 on negative."""
        ends = []
        for e in g.edges:
            lo_first = e.u < e.v
            lo, hi = -1, (1 if e.sign > 0 else -1)
            ends.append((lo, hi) if lo_first else (hi, lo))
        return cls(g, tuple(ends))

    @classmethod
    def from_map(cls, g: SignedGraph, eta: Mapping[tuple[int, int], int]) -> "Orientation":
        """From a ``(vertex, edge id) -> ±1`` map defined on every incidence."""
        try:
            ends = tuple((eta[(e.u, e.id)], eta[(e.v, e.id)]) for e in g.edges)
        except KeyError as exc:
            raise SignedGraphError(f"orientation missing incidence {exc.args[0]}") from None
        return cls(g, ends)

    def eta(self, v: int, eid: int) -> int:
        """``η(v, e)``; zero when ``v`` is not an endpoint of ``e``."""
        e = self.graph.edge(eid)
        a, b = self.ends[eid - 1]
        if v == e.u:
            return a
        if v == e.v:
            return b
        return 0

    def as_map(self) -> dict[tuple[int, int], int]:
        out = {}
        for e, (a, b) in zip(self.graph.edges, self.ends):
            out[(e.u, e.id)] = a
            out[(e.v, e.id)] = b
        return out


def switch_orientation(o: Orientation, theta: SwitchingLike | SwitchingFunction) -> Orientation:
    """``η^θ(v, e) = θ(v) η(v, e)``; the result orients the switched graph."""
    g = o.graph
    th = as_switching(theta, g.n)
    ends = tuple((th(e.u) * a, th(e.v) * b) for e, (a, b) in zip(g.edges, o.ends))
    return Orientation(switch_fn(g, th), ends)


def reorient_edge(o: Orientation, eid: int) -> Orientation:
    o.graph.edge(eid)
    ends = list(o.ends)
    a, b = ends[eid - 1]
    ends[eid - 1] = (-a, -b)
    return Orientation(o.graph, tuple(ends))
