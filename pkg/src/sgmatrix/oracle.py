"""Brute-force enumerators used as independent ground truth.

Every routine here has a hard size guard; exceeding it raises
:class:`~sgmatrix.core.SizeGuardError` instead of sampling.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Optional

import numpy as np

from .core import SignedGraph, SizeGuardError, SwitchingFunction, switch_fn
from .matrix import adjacency, kirchhoff
from .report import Report
from .spectra import det_exact

CIRCLES_MAX_N = 8
THETA_MAX_N = 7
WALK_MAX_L = 6
PSEUDOFOREST_MAX_N = 7
SWITCHINGS_MAX_N = 12


def _guard(name: str, value: int, limit: int, what: str = "n") -> None:
    if value > limit:
        raise SizeGuardError(f"{name} is limited to {what} <= {limit}, got {value}")


@dataclass(frozen=True)
class Circle:
    """A circle given by its edge ids in traversal order and its vertex cycle."""

    edges: tuple[int, ...]
    vertices: tuple[int, ...]
    sign: int

    @property
    def mask(self) -> int:
        return edge_mask(self.edges)

    def __len__(self) -> int:
        return len(self.edges)


def edge_mask(eids) -> int:
    x = 0
    for e in eids:
        x |= 1 << (e - 1)
    return x


def _structure(g: SignedGraph) -> tuple[int, tuple[tuple[int, int], ...]]:
    return g.n, tuple(e.ends for e in g.edges)


@lru_cache(maxsize=4096)
def _circles_of(n: int, ends: tuple[tuple[int, int], ...]
                ) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """All circles of a multigraph as ``(edge ids, vertices)``, canonical and sorted.

    Each circle is found from its least vertex ``s`` by a DFS over vertices
    greater than ``s``; the two traversal directions are told apart by
    keeping only the one whose first edge id is smaller than its last.
    """
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, n + 1)}
    for k, (u, v) in enumerate(ends, start=1):
        adj[u].append((v, k))
        adj[v].append((u, k))
    for v in adj:
        adj[v].sort(key=lambda t: t[1])
    found = []
    for s in range(1, n + 1):
        path_e: list[int] = []
        path_v = [s]
        on_path = {s}

        def dfs(x: int) -> None:
            for y, k in adj[x]:
                if path_e and k == path_e[-1]:
                    continue
                if y == s:
                    if path_e and path_e[0] < k:
                        found.append((tuple(path_e) + (k,), tuple(path_v)))
                    continue
                if y < s or y in on_path:
                    continue
                path_e.append(k)
                path_v.append(y)
                on_path.add(y)
                dfs(y)
                on_path.discard(y)
                path_v.pop()
                path_e.pop()

        dfs(s)
    found.sort(key=lambda c: (len(c[0]), sorted(c[0])))
    return tuple(found)


def _circle_sign(g: SignedGraph, eids) -> int:
    s = 1
    for k in eids:
        s *= g.edges[k - 1].sign
    return s


def all_circles(g: SignedGraph) -> list[Circle]:
    """Unguarded circle enumeration (exponential; callers bound the input)."""
    return [Circle(es, vs, _circle_sign(g, es)) for es, vs in _circles_of(*_structure(g))]


def enumerate_circles(g: SignedGraph) -> list[Circle]:
    """All circles of ``g`` with their signs, each exactly once, in canonical order."""
    _guard("enumerate_circles", g.n, CIRCLES_MAX_N)
    return all_circles(g)


def circle_sign(g: SignedGraph, circle) -> int:
    eids = circle.edges if isinstance(circle, Circle) else circle
    return _circle_sign(g, eids)


# --- theta graphs -------------------------------------------------------------

@lru_cache(maxsize=4096)
def _thetas_of(n: int, ends: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int, int], ...]:
    """Theta subgraphs as triples of circle edge masks.

    Two circles whose common part is a single path (at least one edge, and
    no other shared vertices) form a theta; the third circle is their sum.
    """
    circles = _circles_of(n, ends)
    info = []
    for es, vs in circles:
        info.append((edge_mask(es), frozenset(vs)))
    seen = {}
    for (m1, v1), (m2, v2) in combinations(info, 2):
        common = m1 & m2
        if not common:
            continue
        shared_edges = [k + 1 for k in range(len(ends)) if common >> k & 1]
        pv: dict[int, int] = {}
        for k in shared_edges:
            for x in ends[k - 1]:
                pv[x] = pv.get(x, 0) + 1
        # a path: connected, two vertices of degree 1, the rest of degree 2
        if sorted(pv.values()).count(1) != 2 or any(d > 2 for d in pv.values()):
            continue
        if len(pv) != len(shared_edges) + 1:
            continue
        if (v1 & v2) != set(pv):
            continue
        union = m1 | m2
        if union not in seen:
            seen[union] = (m1, m2, m1 ^ m2)
    return tuple(seen[k] for k in sorted(seen))


def _mask_sign(negmask: int, mask: int) -> int:
    return -1 if bin(negmask & mask).count("1") % 2 else 1


def negative_mask(g: SignedGraph) -> int:
    return edge_mask(e.id for e in g.edges if e.sign < 0)


def verify_theta_parity(g: SignedGraph) -> Report:
    """Every theta subgraph contains an even number of negative circles."""
    _guard("verify_theta_parity", g.n, THETA_MAX_N)
    thetas = _thetas_of(*_structure(g))
    neg = negative_mask(g)
    counts = {0: 0, 1: 0, 2: 0, 3: 0}
    for tri in thetas:
        k = sum(1 for c in tri if _mask_sign(neg, c) < 0)
        counts[k] += 1
    r = Report("theta-parity", data={"thetas": len(thetas), "negative-count-histogram": counts})
    r.check("even", counts[1] == 0 and counts[3] == 0)
    return r


def theta_subgraphs(g: SignedGraph) -> list[tuple[int, int, int]]:
    _guard("theta_subgraphs", g.n, THETA_MAX_N)
    return list(_thetas_of(*_structure(g)))


# --- walks ----------------------------------------------------------------------

def count_signed_walks(g: SignedGraph, i: int, j: int, l: int) -> tuple[int, int]:
    """``(w⁺, w⁻)``: positive and negative walks of length ``l`` from ``v_i`` to ``v_j``."""
    _guard("count_signed_walks", l, WALK_MAX_L, "l")
    adj = g.adjacency_lists()
    counts = {1: 0, -1: 0}

    def walk(x: int, left: int, sign: int) -> None:
        if left == 0:
            if x == j:
                counts[sign] += 1
            return
        for y, e in adj[x]:
            walk(y, left - 1, sign * e.sign)

    walk(i, l, 1)
    return counts[1], counts[-1]


def check_walk_counts(g: SignedGraph, l: int) -> Report:
    """``(A^l)_ij == w⁺ - w⁻`` for every ordered pair."""
    al = np.linalg.matrix_power(adjacency(g), l) if g.n else np.zeros((0, 0), dtype=int)
    bad = []
    for i in g.vertices:
        for j in g.vertices:
            wp, wn = count_signed_walks(g, i, j, l)
            if al[i - 1, j - 1] != wp - wn:
                bad.append((i, j))
    r = Report(f"walks-l{l}", data={"mismatches": bad})
    r.check("A^l == w+ - w-", not bad)
    return r


# --- pseudoforests ----------------------------------------------------------------

@dataclass(frozen=True)
class PseudoforestComponent:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    circle: Optional[tuple[int, ...]]   # None for a tree component
    circle_sign: Optional[int]

    @property
    def is_tree(self) -> bool:
        return self.circle is None


@dataclass(frozen=True)
class Pseudoforest:
    edges: tuple[int, ...]
    components: tuple[PseudoforestComponent, ...]

    @property
    def c(self) -> int:
        return len(self.components)


def _pseudoforest(g: SignedGraph, eids: tuple[int, ...]) -> Optional[Pseudoforest]:
    """Decompose the spanning subgraph ``(V, eids)``; ``None`` if not a pseudoforest."""
    parent = list(range(g.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k in eids:
        e = g.edges[k - 1]
        parent[find(e.u)] = find(e.v)
    groups: dict[int, list[int]] = {}
    for v in g.vertices:
        groups.setdefault(find(v), []).append(v)
    comps = []
    for root, vs in sorted(groups.items(), key=lambda t: min(t[1])):
        ces = [k for k in eids if find(g.edges[k - 1].u) == root]
        if len(ces) > len(vs):
            return None
        circle = None
        sign = None
        if len(ces) == len(vs):
            # strip pendant edges; what remains is the unique circle
            deg = {v: 0 for v in vs}
            for k in ces:
                e = g.edges[k - 1]
                deg[e.u] += 1
                deg[e.v] += 1
            alive = set(ces)
            changed = True
            while changed:
                changed = False
                for k in list(alive):
                    e = g.edges[k - 1]
                    if deg[e.u] == 1 or deg[e.v] == 1:
                        alive.discard(k)
                        deg[e.u] -= 1
                        deg[e.v] -= 1
                        changed = True
            circle = tuple(sorted(alive))
            sign = _circle_sign(g, circle)
        comps.append(PseudoforestComponent(tuple(vs), tuple(ces), circle, sign))
    return Pseudoforest(tuple(eids), tuple(comps))


def enumerate_unbalanced_pseudoforests(g: SignedGraph) -> list[Pseudoforest]:
    """Spanning ``n``-edge pseudoforests all of whose components are 1-trees with a negative circle."""
    _guard("enumerate_unbalanced_pseudoforests", g.n, PSEUDOFOREST_MAX_N)
    out = []
    for eids in combinations(range(1, g.m + 1), g.n):
        pf = _pseudoforest(g, eids)
        if pf is None:
            continue
        if all(not c.is_tree and c.circle_sign < 0 for c in pf.components):
            out.append(pf)
    return out


def matrix_tree_check(g: SignedGraph) -> Report:
    """``det K`` equals the sum of ``4^{c(F)}`` over unbalanced spanning pseudoforests."""
    forests = enumerate_unbalanced_pseudoforests(g)
    total = sum(4 ** f.c for f in forests)
    det = det_exact(kirchhoff(g))
    r = Report("matrix-tree", data={"det": det, "sum": total, "pseudoforests": len(forests)})
    r.check("det K == sum 4^c(F)", det == total)
    return r


# --- switchings ----------------------------------------------------------------------

def all_switching_functions(n: int):
    for bits in product((1, -1), repeat=n):
        yield SwitchingFunction(bits)


def enumerate_switchings(g: SignedGraph) -> list[SignedGraph]:
    """All distinct signatures reachable by switching, in first-seen order over ``θ``."""
    _guard("enumerate_switchings", g.n, SWITCHINGS_MAX_N)
    seen = {}
    for th in all_switching_functions(g.n):
        h = switch_fn(g, th)
        seen.setdefault(h.signs(), h)
    return list(seen.values())


def find_switching(g1: SignedGraph, g2: SignedGraph) -> Optional[SwitchingFunction]:
    """Exhaustive search for ``θ`` with ``switch_fn(g1, θ) == g2``."""
    _guard("find_switching", g1.n, SWITCHINGS_MAX_N)
    target = g2.signs()
    if [e.pair() for e in g1.edges] != [e.pair() for e in g2.edges]:
        return None
    for th in all_switching_functions(g1.n):
        if switch_fn(g1, th).signs() == target:
            return th
    return None
