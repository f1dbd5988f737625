"""Very strong regularity: ``A² - tA - kI = pĀ`` and ``Aj = ρ₀j``."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import Optional

import numpy as np

from .core import Graph, SignedGraph, SignedGraphError
from .matrix import adjacency
from .report import Report

HOMOGENEOUS = "homogeneous-SRG"
P0T0 = "p0t0"
P0 = "p0"
GENERAL = "general"


@dataclass(frozen=True)
class VsrParameters:
    t: int
    k: int
    p: int
    rho0: int
    case_tag: str
    degenerate: bool = field(default=False, compare=False)  # complete underlying graph: p is free

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.t, self.k, self.p, self.rho0)


def complement_adjacency(g: SignedGraph) -> np.ndarray:
    """``Ā``: adjacency matrix of the complement of ``|Σ|``."""
    a = np.abs(adjacency(g))
    return np.ones_like(a) - np.eye(g.n, dtype=a.dtype) - a


def _case(g: SignedGraph, t: int, p: int) -> str:
    if len(set(g.signs())) <= 1:
        return HOMOGENEOUS
    if p == 0 and t == 0:
        return P0T0
    if p == 0:
        return P0
    return GENERAL


def first_equation(g: SignedGraph) -> Optional[tuple[int, int, int, bool]]:
    """``(t, k, p, degenerate)`` if ``A² - tA - kI = pĀ`` holds for some constants.

    ``k`` comes from the diagonal, ``t`` from adjacent pairs and ``p`` from
    nonadjacent pairs; each must be constant, and the equation is then
    verified entrywise.
    """
    if g.is_multigraph():
        raise SignedGraphError("very strong regularity is defined for signed simple graphs")
    n = g.n
    if n == 0:
        return (0, 0, 0, True)
    a = adjacency(g)
    a2 = a @ a
    abar = complement_adjacency(g)
    diag = np.diag(a2)
    if np.ptp(diag):
        return None
    k = int(diag[0])
    off = ~np.eye(n, dtype=bool)
    tvals = set((a2 * a)[a != 0].tolist())
    pvals = set(a2[(abar != 0) & off].tolist())
    if len(tvals) > 1 or len(pvals) > 1:
        return None
    t = int(tvals.pop()) if tvals else 0
    degenerate = not pvals
    p = int(pvals.pop()) if pvals else 0
    if not np.array_equal(a2 - t * a - k * np.eye(n, dtype=a.dtype), p * abar):
        return None
    return (t, k, p, degenerate)


def check_vsr(g: SignedGraph) -> Optional[VsrParameters]:
    """Parameters ``(t, k, p, ρ₀)`` if both defining equations hold exactly, else ``None``."""
    first = first_equation(g)
    if first is None:
        return None
    t, k, p, degenerate = first
    row = adjacency(g).sum(axis=1)
    if g.n and np.ptp(row):
        return None
    rho0 = int(row[0]) if g.n else 0
    return VsrParameters(t, k, p, rho0, _case(g, t, p), degenerate)


def feasibility_identity(params: VsrParameters, n: int) -> tuple[int, int]:
    """Both sides of ``p(n - 1 - k) = ρ₀(ρ₀ - t) - k``.

    Follows from applying the first equation to the all-ones vector.
    """
    t, k, p, r = params.as_tuple()
    return p * (n - 1 - k), r * (r - t) - k


def count_pair_statistics(g: SignedGraph) -> tuple[dict, dict]:
    """Signed triangle counts on edges and signed 2-path counts on non-edges.

    Returns ``({(i, j): t⁺ - t⁻}, {(i, j): p⁺ - p⁻})`` over pairs ``i < j``,
    counted directly from neighbourhoods without any matrix product.
    """
    sign = {}
    nbrs: dict[int, set[int]] = {v: set() for v in g.vertices}
    for e in g.edges:
        sign[e.pair()] = e.sign
        nbrs[e.u].add(e.v)
        nbrs[e.v].add(e.u)

    def s(x, y):
        return sign[(min(x, y), max(x, y))]

    tri, paths = {}, {}
    for i in g.vertices:
        for j in range(i + 1, g.n + 1):
            common = nbrs[i] & nbrs[j]
            if j in nbrs[i]:
                tri[(i, j)] = sum(s(i, j) * s(i, w) * s(w, j) for w in common)
            else:
                paths[(i, j)] = sum(s(i, w) * s(w, j) for w in common)
    return tri, paths


def vsr_combinatorial_check(g: SignedGraph, params: Optional[VsrParameters] = None) -> Report:
    """Count triangles, 2-paths and degrees by brute force and compare with ``params``.

    Without ``params`` the first value seen for each statistic is the
    reference, so a non-VSR graph reports the pairs that break constancy.
    """
    tri, paths = count_pair_statistics(g)
    deg = [0] * (g.n + 1)
    net = [0] * (g.n + 1)
    for e in g.edges:
        for x in e.ends:
            deg[x] += 1
            net[x] += e.sign
    ref_t = params.t if params else next(iter(tri.values()), 0)
    ref_p = params.p if params else next(iter(paths.values()), 0)
    ref_k = params.k if params else (deg[1] if g.n else 0)
    ref_r = params.rho0 if params else (net[1] if g.n else 0)
    bad_t = sorted(pr for pr, v in tri.items() if v != ref_t)
    bad_p = sorted(pr for pr, v in paths.items() if v != ref_p)
    r = Report("vsr-combinatorial", data={"violating edges": bad_t,
                                          "violating non-edges": bad_p})
    r.check("t = t+ - t- on every edge", not bad_t)
    r.check("p = p+ - p- on every non-edge", not bad_p or (params is not None and params.degenerate))
    r.check("k-regular", all(d == ref_k for d in deg[1:]))
    r.check("net degree rho0", all(x == ref_r for x in net[1:]))
    if r.ok:
        r.data["params"] = (ref_t, ref_k, ref_p, ref_r)
    return r


def is_weighing_matrix(m) -> Optional[int]:
    """``c`` if ``m`` is a (0, ±1)-matrix with ``mᵀm = cI``."""
    w = np.asarray(m)
    if w.ndim != 2 or not np.all(np.isin(w, (-1, 0, 1))):
        return None
    wtw = w.T.astype(np.int64) @ w.astype(np.int64)
    c = int(wtw[0, 0]) if wtw.size else 0
    if np.array_equal(wtw, c * np.eye(w.shape[1], dtype=np.int64)):
        return c
    return None


def check_case_invariants(g: SignedGraph, params: VsrParameters) -> Report:
    """Numerical consequences of each case of very strong regularity."""
    a = adjacency(g)
    n = g.n
    t, k, p, rho0 = params.as_tuple()
    r = Report(f"vsr-case-{params.case_tag}")
    lhs, rhs = feasibility_identity(params, n)
    r.check("p(n-1-k) == rho0(rho0-t) - k", lhs == rhs)
    if p == 0 and t == 0:
        r.check("A^2 == kI", np.array_equal(a @ a, k * np.eye(n, dtype=a.dtype)))
        r.check("k is a square", isqrt(k) ** 2 == k)
        r.check("weighing matrix", is_weighing_matrix(a) == k)
        plus = (a == 1).sum(axis=1)
        minus = (a == -1).sum(axis=1)
        r.check("row pattern", bool(np.all(plus == rho0 * (rho0 + 1) // 2)
                                    and np.all(minus == rho0 * (rho0 - 1) // 2)))
    elif p == 0:
        s = 2 * rho0 - t
        r.data["s"] = s
        r.check("s = t mod 2", (s - t) % 2 == 0)
        r.check("k == (s-t)/2 * (s+t)/2", k == ((s - t) // 2) * ((s + t) // 2))
    return r


def is_strongly_regular(gamma: Graph) -> Optional[tuple[int, int, int]]:
    """Classical test by neighbourhood counting: ``(k, λ, μ)`` or ``None``.

    Vacuous conditions (no edges, or no non-edges) count as satisfied, with
    the corresponding parameter reported as 0.
    """
    nbrs: dict[int, set[int]] = {v: set() for v in range(1, gamma.n + 1)}
    for u, v in gamma.edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    degs = {len(s) for s in nbrs.values()}
    if len(degs) > 1:
        return None
    lam, mu = set(), set()
    for i in range(1, gamma.n + 1):
        for j in range(i + 1, gamma.n + 1):
            c = len(nbrs[i] & nbrs[j])
            (lam if j in nbrs[i] else mu).add(c)
    if len(lam) > 1 or len(mu) > 1:
        return None
    return (degs.pop() if degs else 0, lam.pop() if lam else 0, mu.pop() if mu else 0)


def check_srg_equivalence(gamma: Graph) -> Report:
    """``+Γ`` is very strongly regular iff Γ is strongly regular, with matching parameters."""
    params = check_vsr(gamma.with_sign(1))
    srg = is_strongly_regular(gamma)
    r = Report("srg-equivalence", data={"vsr": params and params.as_tuple(), "srg": srg})
    r.check("agree", (params is not None) == (srg is not None))
    if params is not None and srg is not None:
        k, lam, mu = srg
        r.check("k", params.k == k)
        if gamma.edges:
            r.check("t == lambda", params.t == lam)
        if not params.degenerate:
            r.check("p == mu", params.p == mu)
    return r
