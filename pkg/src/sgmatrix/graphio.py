"""Text format for signed graphs and matrix serialization.

A graph file looks like::

    # comments run to end of line
    sg 4 5 simple
    1 2 +
    2 3 -
    ...
    eta
    1 -1 1
    ...

Edge ids are line order.  The optional ``eta`` block gives, for every edge,
the incidence signs at its first and second listed endpoint.
"""
from __future__ import annotations

from typing import Optional

import numpy as np

from .core import MODES, Orientation, SignedGraph, SignedGraphError

_SIGNS = {"+": 1, "-": -1, "+1": 1, "-1": -1, "1": 1}


class GraphFileError(SignedGraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _sign(tok: str, lineno: int) -> int:
    try:
        return _SIGNS[tok]
    except KeyError:
        raise GraphFileError(lineno, f"bad sign {tok!r}") from None


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFileError(lineno, f"expected an integer, got {tok!r}") from None


def read_graph(text: str) -> tuple[SignedGraph, Optional[Orientation]]:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise GraphFileError(1, "empty graph file")
    lineno, head = lines[0]
    if len(head) != 4 or head[0] != "sg":
        raise GraphFileError(lineno, "header must be 'sg <n> <m> <mode>'")
    n, m, mode = _int(head[1], lineno), _int(head[2], lineno), head[3]
    if mode not in MODES:
        raise GraphFileError(lineno, f"mode must be one of {', '.join(MODES)}")
    if n < 0 or m < 0:
        raise GraphFileError(lineno, "negative size")
    body = lines[1:]
    if len(body) < m:
        raise GraphFileError(body[-1][0] if body else lineno, f"expected {m} edge lines")
    edges = []
    for lineno, toks in body[:m]:
        if len(toks) != 3:
            raise GraphFileError(lineno, "edge line must be '<u> <v> <+|->'")
        u, v = _int(toks[0], lineno), _int(toks[1], lineno)
        if toks[2] not in ("+", "-"):
            raise GraphFileError(lineno, f"bad edge sign {toks[2]!r}")
        edges.append((lineno, (u, v, _SIGNS[toks[2]])))
    try:
        g = SignedGraph.from_edges(n, [e for _, e in edges], mode)
    except SignedGraphError:
        # rebuild prefix by prefix to find the offending line
        for k in range(1, m + 1):
            try:
                SignedGraph.from_edges(n, [e for _, e in edges[:k]], mode)
            except SignedGraphError as exc:
                raise GraphFileError(edges[k - 1][0], str(exc)) from None
        raise
    rest = body[m:]
    if not rest:
        return g, None
    lineno, toks = rest[0]
    if toks != ["eta"]:
        raise GraphFileError(lineno, "unexpected content after edge lines")
    ends: dict[int, tuple[int, int]] = {}
    for lineno, toks in rest[1:]:
        if len(toks) != 3:
            raise GraphFileError(lineno, "eta line must be '<edge-index> <eta_u> <eta_v>'")
        eid = _int(toks[0], lineno)
        if not 1 <= eid <= m:
            raise GraphFileError(lineno, f"unknown edge {eid}")
        if eid in ends:
            raise GraphFileError(lineno, f"edge {eid} oriented twice")
        ends[eid] = (_sign(toks[1], lineno), _sign(toks[2], lineno))
        a, b = ends[eid]
        if -a * b != g.edges[eid - 1].sign:
            raise GraphFileError(lineno, f"eta of edge {eid} disagrees with its sign")
    if len(ends) != m:
        missing = min(set(range(1, m + 1)) - set(ends))
        raise GraphFileError(rest[-1][0], f"eta block misses edge {missing}")
    return g, Orientation(g, tuple(ends[k] for k in range(1, m + 1)))


def read_graph_file(path) -> tuple[SignedGraph, Optional[Orientation]]:
    with open(path, encoding="utf-8") as fh:
        return read_graph(fh.read())


def _fmt_eta(x: int) -> str:
    return "1" if x > 0 else "-1"


def write_graph(g: SignedGraph, o: Optional[Orientation] = None) -> str:
    """Canonical text: header, one line per edge, then the ``eta`` block if given."""
    out = [f"sg {g.n} {g.m} {g.mode}"]
    out += [f"{e.u} {e.v} {'+' if e.sign > 0 else '-'}" for e in g.edges]
    if o is not None:
        out.append("eta")
        out += [f"{e.id} {_fmt_eta(a)} {_fmt_eta(b)}" for e, (a, b) in zip(g.edges, o.ends)]
    return "\n".join(out) + "\n"


def write_matrix(m, fmt: str = "plain") -> str:
    """Rows of space-separated (``plain``) or comma-separated (``csv``) entries."""
    if fmt not in ("plain", "csv"):
        raise ValueError(f"unknown matrix format {fmt!r}")
    arr = np.asarray(m)
    if arr.ndim != 2:
        raise ValueError("expected a 2-dimensional matrix")
    sep = " " if fmt == "plain" else ","
    return "".join(sep.join(str(x) for x in row.tolist()) + "\n" for row in arr)
