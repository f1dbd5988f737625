"""Eigenvalues, exact ranks and the spectral theorems for A and K."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .balance import balanced_component_count, is_antibalanced, switching_equivalent
from .core import SIMPLE, SignedGraph, SignedGraphError, negate
from .matrix import adjacency, degrees, kirchhoff
from .report import Report

EIG_TOL = 1e-10
CLUSTER_WIDTH = 1e-7


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in descending order, with multiplicity."""

    values: tuple[float, ...]
    tol: float = EIG_TOL

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    @property
    def largest(self) -> float:
        """``λ¹``; 0.0 for the empty spectrum."""
        return self.values[0] if self.values else 0.0

    def multiplicity(self, x: float, width: float = CLUSTER_WIDTH) -> int:
        return sum(1 for v in self.values if abs(v - x) <= width)

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=float)

    def close_to(self, other: "Spectrum", tol: float) -> bool:
        return len(self) == len(other) and bool(
            np.all(np.abs(self.as_array() - other.as_array()) <= tol))


def _as_symmetric(m) -> np.ndarray:
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise SignedGraphError("expected a square matrix")
    if np.issubdtype(a.dtype, np.integer):
        if not np.array_equal(a, a.T):
            raise SignedGraphError("matrix is not symmetric")
    elif not np.allclose(a, a.T, rtol=0.0, atol=1e-12):
        raise SignedGraphError("matrix is not symmetric")
    return a.astype(float)


def jacobi_eigenvalues(m, tol: float = EIG_TOL, max_sweeps: int = 100) -> np.ndarray:
    """Cyclic Jacobi rotations until the off-diagonal Frobenius norm is below ``tol``.

    Sweeps visit ``(p, q)`` in row-major order, so the result is deterministic.
    """
    a = _as_symmetric(m).copy()
    n = a.shape[0]
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(tau) / (abs(tau) + np.sqrt(1.0 + tau * tau)) if tau != 0 else 1.0
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    return np.diag(a).copy()


def eig_sym(m, tol: float = EIG_TOL, method: str = "lapack") -> Spectrum:
    """Eigenvalues of a real symmetric matrix, sorted descending.

    ``method="lapack"`` calls ``numpy.linalg.eigvalsh``; ``method="jacobi"``
    runs :func:`jacobi_eigenvalues`.
    """
    a = _as_symmetric(m)
    if a.shape[0] == 0:
        return Spectrum((), tol)
    if method == "lapack":
        vals = np.linalg.eigvalsh(a)
    elif method == "jacobi":
        vals = jacobi_eigenvalues(a, tol)
    else:
        raise SignedGraphError(f"unknown eigenvalue method {method!r}")
    vals = np.sort(vals)[::-1]
    return Spectrum(tuple(float(v) for v in vals), tol)


# --- exact rank -------------------------------------------------------------

def _bareiss(rows: list[list[int]]) -> tuple[int, int]:
    """Fraction-free elimination in place; returns ``(rank, sign * last pivot)``."""
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    prev = 1
    r = 0
    sign = 1
    for c in range(nc):
        piv = next((i for i in range(r, nr) if rows[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        pr = rows[r]
        for i in range(r + 1, nr):
            ri = rows[i]
            f = ri[c]
            for j in range(c + 1, nc):
                # exact: Sylvester's identity guarantees divisibility
                ri[j] = (pr[c] * ri[j] - f * pr[j]) // prev
            ri[c] = 0
        prev = pr[c]
        r += 1
    return r, sign * prev


def _int_rows(m) -> list[list[int]]:
    a = np.asarray(m)
    if a.ndim != 2:
        raise SignedGraphError("expected a 2-d matrix")
    if a.size and not np.issubdtype(a.dtype, np.integer):
        if not np.all(a == np.round(a)):
            raise SignedGraphError("exact rank needs integer entries")
    return [[int(x) for x in row] for row in a.tolist()]


def rank_rational(m) -> int:
    """Rank over ℚ by Bareiss elimination on Python integers."""
    rows = _int_rows(m)
    if not rows or not rows[0]:
        return 0
    return _bareiss(rows)[0]


def det_exact(m) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    rows = _int_rows(m)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise SignedGraphError("determinant needs a square matrix")
    if n == 0:
        return 1
    rank, last = _bareiss(rows)
    return last if rank == n else 0


def rank_gf2(m) -> int:
    """Rank over GF(2); rows are packed into integer bitmasks."""
    rows = _int_rows(m)
    masks = []
    for row in rows:
        x = 0
        for j, v in enumerate(row):
            if v % 2:
                x |= 1 << j
        masks.append(x)
    return gf2_rank_masks(masks)


def gf2_rank_masks(masks: Iterable[int]) -> int:
    basis: dict[int, int] = {}  # leading bit -> vector
    for x in masks:
        while x:
            top = x.bit_length() - 1
            if top not in basis:
                basis[top] = x
                break
            x ^= basis[top]
    return len(basis)


# --- spectral theorems --------------------------------------------------------

def adjacency_spectrum(g: SignedGraph, tol: float = EIG_TOL) -> Spectrum:
    return eig_sym(adjacency(g), tol)


def kirchhoff_spectrum(g: SignedGraph, tol: float = EIG_TOL) -> Spectrum:
    return eig_sym(kirchhoff(g), tol)


def acharya_balance(g: SignedGraph, tol: float = 1e-7) -> bool:
    """Balanced iff ``A(Σ)`` and ``A(|Σ|)`` have the same spectrum."""
    a = adjacency(g)
    signed = eig_sym(a)
    unsigned = eig_sym(_underlying_adjacency(g))
    return signed.close_to(unsigned, tol)


def _underlying_adjacency(g: SignedGraph) -> np.ndarray:
    """``A(|Σ|)`` counting every edge, parallel ones included."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for e in g.edges:
        a[e.u - 1, e.v - 1] += 1
        a[e.v - 1, e.u - 1] += 1
    return a


def regular_by_eigenvector(g: SignedGraph, tol: float = 1e-9) -> Optional[int]:
    """Net degree if the all-ones vector is an eigenvector of ``A(|Σ|)`` and ``A(Σ)``."""
    if g.n == 0:
        return 0
    j = np.ones(g.n)
    u = _underlying_adjacency(g) @ j
    s = adjacency(g) @ j
    if np.ptp(u) <= tol and np.ptp(s) <= tol:
        return int(round(s[0]))
    return None


def check_regular_bound(g: SignedGraph, tol: float = 1e-7) -> Report:
    """Underlying ``k``-regular: all eigenvalues ``<= k`` and ``k`` has multiplicity ``b(Σ)``."""
    d = degrees(g).underlying
    if g.n == 0 or np.ptp(d) != 0:
        raise SignedGraphError("underlying graph is not regular")
    k = int(d[0])
    spec = adjacency_spectrum(g)
    b, _ = balanced_component_count(g)
    r = Report("regular-bound", data={"k": k, "lambda1": spec.largest, "b": b,
                                      "multiplicity": spec.multiplicity(k)})
    r.check("lambda1<=k", spec.largest <= k + tol)
    r.check("mult(k)==b", spec.multiplicity(k) == b)
    return r


def check_interlacing_adj(g: SignedGraph, sub: Iterable[int], tol: float = 1e-7) -> Report:
    """``λ¹`` of an induced subgraph never exceeds ``λ¹`` of the whole graph."""
    sub = sorted(set(sub))
    if not sub:
        raise SignedGraphError("empty vertex subset")
    bad = [v for v in sub if not 1 <= v <= g.n]
    if bad:
        raise SignedGraphError(f"vertices {bad} not in the graph")
    l_sub = adjacency_spectrum(g.induced(sub)).largest
    l_all = adjacency_spectrum(g).largest
    r = Report("interlacing-adjacency", data={"sub": sub, "lambda1_sub": l_sub,
                                              "lambda1": l_all})
    r.check("lambda1(sub)<=lambda1", l_sub <= l_all + tol)
    return r


def _negative_complete(n: int) -> SignedGraph:
    return SignedGraph.from_edges(n, [(i, j, -1) for i in range(1, n + 1)
                                      for j in range(i + 1, n + 1)])


def check_kirchhoff_bounds(g: SignedGraph, tol: float = 1e-7) -> Report:
    """Bounds on the largest Kirchhoff eigenvalue ``λ¹K``.

    - negative: ``λ¹K(Γ, σ) <= λ¹K(-Γ)``, tight iff antibalanced (connected Γ)
    - complete: ``λ¹K <= 2(n - 1)``, tight iff Σ switches to ``-K_n``
    - split: ``λ¹K(Σ⁺) + λ¹K(Σ⁻) >= λ¹K(Σ) >= max(λ¹K(Σ⁺), λ¹K(Σ⁻))``
    - maxdeg: ``λ¹K >= 1 + max degree``, evaluated and flagged only
    """
    if g.mode != SIMPLE and g.is_multigraph():
        raise SignedGraphError("Kirchhoff bounds are stated for signed simple graphs")
    n = g.n
    lam = kirchhoff_spectrum(g).largest
    r = Report("kirchhoff-bounds", data={"lambda1": lam})

    connected = len(g.components()) <= 1
    lam_neg = kirchhoff_spectrum(negate(g.with_signs([1] * g.m))).largest
    r.data["lambda1(-|g|)"] = lam_neg
    r.check("negative lambda1<=lambda1(-|g|)", lam <= lam_neg + tol)
    if connected:
        tight = abs(lam - lam_neg) <= tol
        r.data["negative tight"] = tight
        r.check("negative tight<=>antibalanced", tight == is_antibalanced(g).balanced)
    else:
        r.flags.append("negative equality case skipped: not connected")

    r.check("complete lambda1<=2(n-1)", lam <= 2 * max(n - 1, 0) + tol)
    if n >= 2:
        tight = abs(lam - 2 * (n - 1)) <= tol
        complete = g.m == n * (n - 1) // 2
        switches = complete and switching_equivalent(
            g, g.with_signs([-1] * g.m)) is not None
        r.data["complete tight"] = tight
        r.check("complete tight<=>switches to -K_n", tight == switches)

    lp = kirchhoff_spectrum(g.positive_part()).largest
    ln = kirchhoff_spectrum(g.negative_part()).largest
    r.data.update({"lambda1(g+)": lp, "lambda1(g-)": ln})
    r.check("split upper", lp + ln >= lam - tol)
    r.check("split lower", lam >= max(lp, ln) - tol)

    dmax = int(degrees(g).underlying.max()) if n else 0
    holds = lam >= 1 + dmax - tol
    r.data["maxdeg holds"] = holds
    if not holds:
        r.flags.append(f"maxdeg lambda1={lam:.6g} < 1+maxdeg={1 + dmax}")
    return r


def check_kirchhoff_edge_interlacing(g: SignedGraph, eid: int, tol: float = 1e-7) -> Report:
    """``λⁱ(Σ) >= λⁱ(Σ \\ e) >= λⁱ⁺¹(Σ)`` for every ``i``."""
    g.edge(eid)
    big = kirchhoff_spectrum(g).values
    small = kirchhoff_spectrum(g.delete_edge(eid)).values
    n = len(big)
    r = Report("kirchhoff-edge-interlacing", data={"edge": eid, "K": big, "K-e": small})
    r.check("upper", all(big[i] >= small[i] - tol for i in range(n)))
    r.check("lower", all(small[i] >= big[i + 1] - tol for i in range(n - 1)))
    return r


def kirchhoff_nullity(g: SignedGraph, tol: float = 1e-7) -> int:
    """Number of Kirchhoff eigenvalues within ``tol`` of zero; equals ``b(Σ)``."""
    return kirchhoff_spectrum(g).multiplicity(0.0, tol)
