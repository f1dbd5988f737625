"""Signed line graphs, reduction, generalised line graphs and D_n representations.

A line graph is only defined up to switching, so every comparison between
line graphs goes through :func:`sgmatrix.balance.switching_equivalent`.
The vertex ``k`` of a line graph is the source edge with id ``k``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from .balance import balanced_component_count, is_balanced
from .core import (SIMPLE, SIMPLY_SIGNED, Graph, Orientation, SignedGraph, SignedGraphError,
                   SizeGuardError)
from .matrix import adjacency, incidence
from .oracle import _circles_of, all_circles, edge_mask
from .report import Report
from .spectra import adjacency_spectrum, eig_sym

CIRCLE_CHECK_MAX_N = 6
CIRCLE_CHECK_MAX_M = 10
EIGEN_TWO_MAX_N = 8


@dataclass(frozen=True)
class OrientedLineGraph:
    """Line graph of ``source`` built from orientation ``source_orientation``.

    ``via[k]`` is the source vertex at which the two source edges joined by
    line edge ``k + 1`` meet.
    """

    graph: SignedGraph
    orientation: Orientation
    via: tuple[int, ...]
    source: SignedGraph
    source_orientation: Orientation


def _line_structure(g: SignedGraph) -> list[tuple[int, int, int]]:
    """Line edges as ``(e, f, v)``: source edges ``e < f`` meeting at vertex ``v``."""
    out = []
    for v in g.vertices:
        at_v = sorted(e.id for e in g.incident(v))
        for e, f in combinations(at_v, 2):
            out.append((e, f, v))
    return out


def line_graph(g: SignedGraph, o: Optional[Orientation] = None) -> OrientedLineGraph:
    """Line graph by orientation: each end ``(e, ef)`` inherits ``η(v, e)``.

    Two source edges sharing both endpoints give two parallel line edges,
    one per shared endpoint; they always have opposite signs.
    """
    if o is None:
        o = Orientation.default(g)
    elif o.graph != g:
        raise SignedGraphError("orientation belongs to a different graph")
    struct = _line_structure(g)
    ends = [(o.eta(v, e), o.eta(v, f)) for e, f, v in struct]
    mode = SIMPLY_SIGNED if g.is_multigraph() else SIMPLE
    lg = SignedGraph.from_edges(g.m, [(e, f, -a * b) for (e, f, _), (a, b) in zip(struct, ends)],
                                mode)
    return OrientedLineGraph(lg, Orientation(lg, tuple(ends)), tuple(v for _, _, v in struct),
                             g, o)


def reduce(lg: OrientedLineGraph | SignedGraph) -> SignedGraph:
    """Delete every pair of opposite-sign parallel edges; the result is simple."""
    g = lg.graph if isinstance(lg, OrientedLineGraph) else lg
    by_pair: dict[tuple[int, int], list] = {}
    for e in g.edges:
        by_pair.setdefault(e.pair(), []).append(e)
    keep = sorted((es[0] for es in by_pair.values() if len(es) == 1), key=lambda e: e.id)
    for es in by_pair.values():
        if len(es) == 2 and es[0].sign == es[1].sign:
            raise SignedGraphError(f"parallel edges {es[0].pair()} with the same sign")
    return SignedGraph.from_edges(g.n, [(e.u, e.v, e.sign) for e in keep], SIMPLE)


def reduced_line_graph(g: SignedGraph, o: Optional[Orientation] = None) -> SignedGraph:
    return reduce(line_graph(g, o))


def negative_with_digons(gamma: Graph, m: Sequence[int]) -> SignedGraph:
    """``-Γ(m_1, …, m_n)``: ``-Γ`` with ``m_i`` pendant negative digons at ``v_i``.

    The pendant vertices are numbered after ``1..n``; each digon lists its
    positive edge first.
    """
    if len(m) != gamma.n:
        raise SignedGraphError(f"need one digon count per vertex ({gamma.n}), got {len(m)}")
    if any(k < 0 for k in m):
        raise SignedGraphError("digon counts must be nonnegative")
    edges = [(u, v, -1) for u, v in gamma.edges]
    nxt = gamma.n
    for i, k in enumerate(m, start=1):
        for _ in range(k):
            nxt += 1
            edges += [(i, nxt, 1), (i, nxt, -1)]
    return SignedGraph.from_edges(nxt, edges, SIMPLY_SIGNED)


def generalized_line_graph(gamma: Graph, m: Sequence[int]) -> SignedGraph:
    """Reduced line graph of ``-Γ(m)`` under the default orientation."""
    return reduced_line_graph(negative_with_digons(gamma, m))


def line_adjacency_identity(g: SignedGraph, o: Optional[Orientation] = None) -> Report:
    """``A(Λ) = 2I - ΗᵀΗ`` entrywise, with cancellation in ``A(Λ)``."""
    if o is None:
        o = Orientation.default(g)
    lg = line_graph(g, o)
    h = incidence(g, o)
    rhs = 2 * np.eye(g.m, dtype=np.int64) - h.T @ h
    lhs = adjacency(lg.graph)
    r = Report("line-adjacency-identity")
    r.check("A(Lambda)==2I-H^T H", np.array_equal(lhs, rhs))
    r.check("A(reduced)==A(Lambda)", np.array_equal(adjacency(reduce(lg)), lhs))
    r.check("diag(H^T H)==2", bool(np.all(np.diag(h.T @ h) == 2)))
    return r


def _component_shapes(g: SignedGraph) -> list[tuple[str, bool]]:
    """Per component: ``("tree" | "1-tree" | "other", balanced)``."""
    out = []
    for comp in g.components():
        sub = g.induced(comp)
        if sub.m == sub.n - 1:
            shape = "tree"
        elif sub.m == sub.n:
            shape = "1-tree"
        else:
            shape = "other"
        out.append((shape, is_balanced(sub).balanced))
    return out


def check_line_eigenvalues(g: SignedGraph, tol: float = 1e-8, width: float = 1e-6) -> Report:
    """``λ¹(Λ̄) <= 2`` and eigenvalue 2 has multiplicity ``|E| - n + b(Σ)``."""
    spec = adjacency_spectrum(reduced_line_graph(g))
    b, _ = balanced_component_count(g)
    expected = g.m - g.n + b
    mult = spec.multiplicity(2.0, width)
    has_rich_component = any(not (shape == "tree" or (shape == "1-tree" and not bal))
                              for shape, bal in _component_shapes(g))
    r = Report("line-eigenvalues", data={"lambda1": spec.largest, "multiplicity": mult,
                                         "expected": expected})
    r.check("lambda1<=2", spec.largest <= 2 + tol)
    r.check("mult(2)==|E|-n+b", mult == expected)
    r.check("2 eigenvalue<=>rich component", (mult > 0) == has_rich_component)
    return r


# --- D_n representation -----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class RootVectorSet:
    """Source edge id -> vector ``±b_i ± b_j`` in ``ℤⁿ``."""

    n: int
    vectors: dict[int, np.ndarray]

    def ids(self) -> list[int]:
        return sorted(self.vectors)

    def gram(self) -> np.ndarray:
        m = np.array([self.vectors[k] for k in self.ids()], dtype=np.int64).reshape(-1, self.n)
        return m @ m.T

    def in_dn(self) -> bool:
        for v in self.vectors.values():
            nz = v[v != 0]
            if len(nz) != 2 or not np.all(np.abs(nz) == 1):
                return False
        return True

    def represents(self, sg: SignedGraph) -> bool:
        """Vijayakumar representation of ``sg`` (vertices = these ids): ``f(v)·f(w) = σ(vw)``."""
        ids = self.ids()
        if ids != list(sg.vertices):
            return False
        if len({tuple(v) for v in self.vectors.values()}) != len(ids):
            return False
        want = adjacency(sg) + 2 * np.eye(sg.n, dtype=np.int64)
        return np.array_equal(self.gram(), want)


def dn_representation(g: SignedGraph, o: Optional[Orientation] = None) -> RootVectorSet:
    """Each edge maps to its incidence column; the set represents ``-Λ̄``."""
    h = incidence(g, o)
    return RootVectorSet(g.n, {k: h[:, k - 1].copy() for k in range(1, g.m + 1)})


# --- circle signs of line graphs -------------------------------------------------------

@dataclass(frozen=True)
class _LineCycleData:
    line_masks: tuple[int, ...]          # every circle of the line graph
    line_coeffs: tuple[int, ...]         # generator subset summing to each circle
    triangles: tuple[int, ...]           # vertex-triangle masks (generators 0..t-1)
    derived_sources: tuple[tuple[int, ...], ...]  # source circle edge ids per derived generator
    derived_masks: tuple[int, ...]
    all_derived: tuple[tuple[tuple[int, ...], int], ...]  # (source circle, derived mask)
    relations: tuple[int, ...]           # generator subsets summing to zero
    spans: bool


def _derived_mask(circle_edges: tuple[int, ...], circle_vertices: tuple[int, ...],
                  lookup: dict[tuple[int, int, int], int]) -> int:
    r = len(circle_edges)
    mask = 0
    for i in range(r):
        e, f = circle_edges[i], circle_edges[(i + 1) % r]
        v = circle_vertices[(i + 1) % r]
        mask |= 1 << (lookup[(min(e, f), max(e, f), v)] - 1)
    return mask


def _structure_graph(n: int, ends) -> SignedGraph:
    """A graph with the given edge list; signs alternate on parallel pairs."""
    seen: set[frozenset] = set()
    edges = []
    for u, v in ends:
        key = frozenset((u, v))
        edges.append((u, v, -1 if key in seen else 1))
        seen.add(key)
    return SignedGraph.from_edges(n, edges, SIMPLY_SIGNED)


@lru_cache(maxsize=1024)
def _line_cycle_data(n: int, ends: tuple[tuple[int, int], ...]) -> _LineCycleData:
    src = _structure_graph(n, ends)
    struct = _line_structure(src)
    lookup = {(e, f, v): k for k, (e, f, v) in enumerate(struct, start=1)}
    line_ends = tuple((e, f) for e, f, _ in struct)

    triangles = []
    for v in src.vertices:
        at_v = sorted(e.id for e in src.incident(v))
        for a, b, c in combinations(at_v, 3):
            triangles.append((1 << (lookup[(a, b, v)] - 1)) | (1 << (lookup[(a, c, v)] - 1))
                             | (1 << (lookup[(b, c, v)] - 1)))

    src_circles = _circles_of(n, ends)
    all_derived = tuple((es, _derived_mask(es, vs, lookup)) for es, vs in src_circles)
    # a cycle basis of the source, taken greedily from the enumeration order
    basis: dict[int, int] = {}
    derived_sources, derived_masks = [], []
    for (es, vs), (_, dm) in zip(src_circles, all_derived):
        x = edge_mask(es)
        while x:
            top = x.bit_length() - 1
            if top not in basis:
                basis[top] = x
                derived_sources.append(es)
                derived_masks.append(dm)
                break
            x ^= basis[top]

    gens = list(triangles) + derived_masks
    # elimination tracking which generators combine into each reduced row
    pivots: dict[int, tuple[int, int]] = {}
    relations = []
    for gi, gm in enumerate(gens):
        x, comb = gm, 1 << gi
        while x:
            top = x.bit_length() - 1
            if top not in pivots:
                pivots[top] = (x, comb)
                break
            px, pc = pivots[top]
            x ^= px
            comb ^= pc
        if not x:
            relations.append(comb)

    line_graph_ = _structure_graph(len(ends), line_ends)
    n_line, m_line = line_graph_.n, line_graph_.m
    cycle_dim = m_line - n_line + len(line_graph_.components())
    spans = len(pivots) == cycle_dim

    masks, coeffs = [], []
    for circ in all_circles(line_graph_):
        x, comb = circ.mask, 0
        masks.append(x)
        while x:
            top = x.bit_length() - 1
            if top not in pivots:
                comb = -1
                break
            px, pc = pivots[top]
            x ^= px
            comb ^= pc
        coeffs.append(comb)
    return _LineCycleData(tuple(masks), tuple(coeffs), tuple(triangles),
                          tuple(derived_sources), tuple(derived_masks), all_derived,
                          tuple(relations), spans)


def _parity_sign(x: int) -> int:
    return -1 if bin(x).count("1") % 2 else 1


def validate_circle_signs(lg: OrientedLineGraph) -> Report:
    """Cross-check the orientation definition against the circle-sign definition.

    Vertex triangles must be negative, each derived circle must carry the
    sign of its source circle, and every circle of the line graph must get
    its actual sign from the sum rule over a GF(2) decomposition into
    vertex triangles and basic derived circles.
    """
    src = lg.source
    if src.n > CIRCLE_CHECK_MAX_N:
        raise SizeGuardError(f"validate_circle_signs is limited to source n <= {CIRCLE_CHECK_MAX_N}")
    if src.m > CIRCLE_CHECK_MAX_M:
        raise SizeGuardError(f"validate_circle_signs is limited to source m <= {CIRCLE_CHECK_MAX_M}")
    data = _line_cycle_data(src.n, tuple(e.ends for e in src.edges))
    if not data.spans:
        raise SignedGraphError("vertex triangles and derived circles do not span the cycle space")
    if any(c < 0 for c in data.line_coeffs):
        raise SignedGraphError("a line-graph circle has no decomposition")

    line_neg = 0
    for e in lg.graph.edges:
        if e.sign < 0:
            line_neg |= 1 << (e.id - 1)
    src_sign = {}
    for es, _ in data.all_derived:
        s = 1
        for k in es:
            s *= src.edges[k - 1].sign
        src_sign[es] = s

    r = Report("line-circle-signs", data={"line circles": len(data.line_masks),
                                          "vertex triangles": len(data.triangles),
                                          "derived circles": len(data.all_derived)})
    r.check("vertex triangles negative",
            all(_parity_sign(line_neg & t) < 0 for t in data.triangles))
    r.check("derived circles keep source sign",
            all(_parity_sign(line_neg & dm) == src_sign[es] for es, dm in data.all_derived))

    # prescribed generator signs: triangles negative, derived = source sign
    gen_neg = (1 << len(data.triangles)) - 1
    for j, es in enumerate(data.derived_sources):
        if src_sign[es] < 0:
            gen_neg |= 1 << (len(data.triangles) + j)
    r.check("sum rule well defined", all(_parity_sign(gen_neg & rel) > 0 for rel in data.relations))
    mismatches = sum(1 for m, c in zip(data.line_masks, data.line_coeffs)
                     if _parity_sign(line_neg & m) != _parity_sign(gen_neg & c))
    r.data["sum-rule mismatches"] = mismatches
    r.check("sum rule matches orientation signs", mismatches == 0)
    return r


# --- eigenvalue 2 ---------------------------------------------------------------------

def check_eigenvalue_two_subgraph(g: SignedGraph, tol: float = 1e-8) -> Report:
    """If ``λ¹ >= 2``, find an induced subgraph whose largest eigenvalue is exactly 2.

    Subsets are scanned by size, then lexicographically, so the witness is
    the first such subset in that order.
    """
    if g.n > EIGEN_TWO_MAX_N:
        raise SizeGuardError(f"check_eigenvalue_two_subgraph is limited to n <= {EIGEN_TWO_MAX_N}")
    lam = adjacency_spectrum(g).largest
    r = Report("eigenvalue-two-subgraph", data={"lambda1": lam})
    if lam < 2 - tol:
        r.flags.append("not applicable: lambda1 < 2")
        r.data["witness"] = None
        return r
    a = adjacency(g)
    witness = None
    for size in range(1, g.n + 1):
        for sub in combinations(range(g.n), size):
            idx = np.array(sub)
            l1 = eig_sym(a[np.ix_(idx, idx)]).largest
            if abs(l1 - 2) <= tol:
                witness = tuple(i + 1 for i in sub)
                break
        if witness:
            break
    r.data["witness"] = witness
    r.check("witness found", witness is not None)
    if witness is not None:
        # converse direction: interlacing forces lambda1(g) >= 2
        r.check("lambda1>=2 given witness", lam >= 2 - tol)
    return r
