"""Exact integer matrices of signed graphs.

All matrices are ``numpy`` arrays of dtype ``int64``; rows are vertices in
index order and incidence columns follow edge ids.  Nothing here touches
floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import Graph, Orientation, SignedGraph, SignedGraphError, SwitchingLike, as_switching

INT = np.int64

# Abelson-Rosenberg symbols
O, P, N, A = "o", "p", "n", "a"
AR_SYMBOLS = (O, P, N, A)
# a symbol is the set of walk signs it witnesses: bit 0 = positive, bit 1 = negative
_AR_BITS = {O: 0, P: 1, N: 2, A: 3}
_AR_FROM_BITS = {v: k for k, v in _AR_BITS.items()}


def ones_vector(n: int) -> np.ndarray:
    return np.ones(n, dtype=INT)


def all_ones(n: int) -> np.ndarray:
    return np.ones((n, n), dtype=INT)


def diag_switching(theta: SwitchingLike, n: int) -> np.ndarray:
    """``Diag(θ)``."""
    return np.diag(np.array(as_switching(theta, n).theta, dtype=INT))


def adjacency(g: SignedGraph) -> np.ndarray:
    """Signed adjacency matrix; parallel edges add, so a ± pair cancels to 0."""
    a = np.zeros((g.n, g.n), dtype=INT)
    for e in g.edges:
        a[e.u - 1, e.v - 1] += e.sign
        a[e.v - 1, e.u - 1] += e.sign
    return a


def unsigned_adjacency(gamma: Graph) -> np.ndarray:
    a = np.zeros((gamma.n, gamma.n), dtype=INT)
    for u, v in gamma.edges:
        a[u - 1, v - 1] = a[v - 1, u - 1] = 1
    return a


def complete_signed(gamma: Graph) -> SignedGraph:
    """``K_Γ``: the complete graph, negative on the edges of Γ and positive elsewhere."""
    es = gamma.edge_set()
    return SignedGraph.from_edges(gamma.n, [
        (i, j, -1 if (i, j) in es else 1)
        for i in range(1, gamma.n + 1) for j in range(i + 1, gamma.n + 1)])


def seidel(gamma: Graph) -> np.ndarray:
    """Seidel matrix: 0 on the diagonal, -1 for edges, +1 for non-edges."""
    n = gamma.n
    s = all_ones(n) - np.eye(n, dtype=INT)
    for u, v in gamma.edges:
        s[u - 1, v - 1] = s[v - 1, u - 1] = -1
    return s


def incidence(g: SignedGraph, o: Optional[Orientation] = None) -> np.ndarray:
    """Vertex-by-edge incidence matrix for orientation ``o`` (default orientation if omitted)."""
    if o is None:
        o = Orientation.default(g)
    elif o.graph != g:
        if o.graph.n != g.n or [e.pair() for e in o.graph.edges] != [e.pair() for e in g.edges]:
            raise SignedGraphError("orientation belongs to a different graph")
        # revalidates the end signs against the signs of g
        o = Orientation(g, o.ends)
    h = np.zeros((g.n, g.m), dtype=INT)
    for e, (a, b) in zip(g.edges, o.ends):
        h[e.u - 1, e.id - 1] = a
        h[e.v - 1, e.id - 1] = b
    return h


def degree_matrix(g: SignedGraph) -> np.ndarray:
    return np.diag(degrees(g).underlying)


def kirchhoff(g: SignedGraph) -> np.ndarray:
    """``K = D(|Σ|) - A(Σ)``."""
    return degree_matrix(g) - adjacency(g)


@dataclass(frozen=True, eq=False)
class DegreeVector:
    underlying: np.ndarray
    positive: np.ndarray
    negative: np.ndarray

    @property
    def net(self) -> np.ndarray:
        return self.positive - self.negative

    def __getitem__(self, v: int) -> tuple[int, int, int, int]:
        """``(underlying, positive, negative, net)`` at vertex ``v`` (1-based)."""
        i = v - 1
        return (int(self.underlying[i]), int(self.positive[i]),
                int(self.negative[i]), int(self.net[i]))


def degrees(g: SignedGraph) -> DegreeVector:
    pos = np.zeros(g.n, dtype=INT)
    neg = np.zeros(g.n, dtype=INT)
    for e in g.edges:
        tgt = pos if e.sign > 0 else neg
        tgt[e.u - 1] += 1
        tgt[e.v - 1] += 1
    return DegreeVector(pos + neg, pos, neg)


def is_regular(g: SignedGraph) -> Optional[tuple[int, int]]:
    """Common ``(positive, negative)`` degree if both Σ⁺ and Σ⁻ are regular."""
    d = degrees(g)
    if g.n == 0:
        return (0, 0)
    if np.all(d.positive == d.positive[0]) and np.all(d.negative == d.negative[0]):
        return int(d.positive[0]), int(d.negative[0])
    return None


# --- Abelson-Rosenberg matrix ---------------------------------------------

def ar_add(x: str, y: str) -> str:
    return _AR_FROM_BITS[_AR_BITS[x] | _AR_BITS[y]]


def ar_mul(x: str, y: str) -> str:
    bx, by = _AR_BITS[x], _AR_BITS[y]
    pos = (bx & 1 and by & 1) or (bx & 2 and by & 2)
    neg = (bx & 1 and by & 2) or (bx & 2 and by & 1)
    return _AR_FROM_BITS[(1 if pos else 0) | (2 if neg else 0)]


def ar_matrix(g: SignedGraph) -> np.ndarray:
    """Abelson-Rosenberg matrix over ``{o, p, n, a}`` with ``p`` on the diagonal."""
    r = np.full((g.n, g.n), O, dtype="<U1")
    for e in g.edges:
        i, j = e.u - 1, e.v - 1
        sym = P if e.sign > 0 else N
        r[i, j] = r[j, i] = ar_add(r[i, j], sym)
    np.fill_diagonal(r, P)
    return r


def ar_matmul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    n, k = x.shape
    k2, m = y.shape
    if k != k2:
        raise SignedGraphError("shape mismatch")
    out = np.full((n, m), O, dtype="<U1")
    for i in range(n):
        for j in range(m):
            acc = O
            for t in range(k):
                acc = ar_add(acc, ar_mul(x[i, t], y[t, j]))
            out[i, j] = acc
    return out


def ar_power(r: np.ndarray, l: int) -> np.ndarray:
    """``(R - pI)^l``: the diagonal is reset to ``o`` before powering."""
    if l < 1:
        raise SignedGraphError("walk length must be at least 1")
    base = r.copy()
    np.fill_diagonal(base, O)
    out = base
    for _ in range(l - 1):
        out = ar_matmul(out, base)
    return out


def ar_walk_exists(g: SignedGraph, i: int, j: int, l: int, s: int) -> bool:
    """Is there a walk of length ``l`` and sign ``s`` from ``v_i`` to ``v_j``?"""
    if s not in (1, -1):
        raise SignedGraphError("sign must be +1 or -1")
    for v in (i, j):
        if not 1 <= v <= g.n:
            raise SignedGraphError(f"unknown vertex {v}")
    sym = ar_power(ar_matrix(g), l)[i - 1, j - 1]
    return sym in ((P, A) if s > 0 else (N, A))
