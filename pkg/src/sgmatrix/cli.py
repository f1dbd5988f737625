"""Command-line interface.

Exit status is 0 on success, 1 when a verification check fails and 2 for
usage, input or parse errors.  Every failure writes one ``error: ...`` or
``FAIL`` line that names the cause.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Iterable, Optional

import numpy as np

from .balance import balanced_component_count, is_balanced, switching_equivalent
from .core import (Orientation, SignedGraph, SignedGraphError, SizeGuardError,
                   SwitchingFunction, switch_fn, switch_orientation)
from .graphio import read_graph, write_graph, write_matrix
from .linegraph import (check_line_eigenvalues, generalized_line_graph, line_adjacency_identity,
                        line_graph, reduce, validate_circle_signs)
from .matrix import adjacency, ar_matrix, incidence, kirchhoff, seidel
from .oracle import check_walk_counts, matrix_tree_check, verify_theta_parity
from .report import Report
from .spectra import (check_kirchhoff_bounds, check_kirchhoff_edge_interlacing, eig_sym,
                      kirchhoff_nullity, rank_gf2, rank_rational)
from .vsr import check_vsr, vsr_combinatorial_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SUITES = ("rank", "matrixtree", "walks", "theta", "linegraph", "kirchhoff-bounds")
WALK_LENGTHS = range(1, 6)


class UsageError(Exception):
    pass


def _load(path: str) -> tuple[SignedGraph, Optional[Orientation]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return read_graph(text)
    except SignedGraphError as exc:
        raise UsageError(f"parse: {path}: {exc}") from None


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


# --- subcommands -------------------------------------------------------------------

def cmd_balance(args, out) -> int:
    g, _ = _load(args.file)
    cert = is_balanced(g)
    if cert.balanced:
        X, Y = cert.bipartition
        out.write("balanced\n")
        out.write("X: " + " ".join(map(str, sorted(X))) + "\n")
        out.write("Y: " + " ".join(map(str, sorted(Y))) + "\n")
    else:
        out.write("unbalanced\n")
        out.write("witness: " + " ".join(map(str, cert.witness)) + "\n")
    return EXIT_OK


def _read_switching(path: str, n: int) -> SwitchingFunction:
    try:
        toks = Path(path).read_text(encoding="utf-8").split()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    table = {"+": 1, "-": -1, "1": 1, "+1": 1, "-1": -1}
    if len(toks) != n or any(t not in table for t in toks):
        raise UsageError(f"switching file must hold {n} signs (+ or -)")
    return SwitchingFunction(tuple(table[t] for t in toks))


def cmd_switch(args, out) -> int:
    g, o = _load(args.file)
    if args.fn is not None:
        theta = _read_switching(args.fn, g.n)
    else:
        theta = SwitchingFunction.from_set(g.n, _int_list(args.set))
    h = switch_fn(g, theta)
    out.write(write_graph(h, switch_orientation(o, theta) if o is not None else None))
    return EXIT_OK


def cmd_matrix(args, out) -> int:
    g, o = _load(args.file)
    kind = args.kind
    if kind == "adj":
        m = adjacency(g)
    elif kind == "seidel":
        if g.is_multigraph():
            raise UsageError("the Seidel matrix needs a simple underlying graph")
        m = seidel(g.underlying())
    elif kind == "incidence":
        m = incidence(g, o)
    elif kind == "kirchhoff":
        m = kirchhoff(g)
    else:
        m = ar_matrix(g)
    out.write(write_matrix(m, args.format))
    return EXIT_OK


def _fmt_float(x: float, digits: int) -> str:
    s = f"{x:.{digits}f}"
    return s[1:] if s.startswith("-") and float(s) == 0 else s


def cmd_spectrum(args, out) -> int:
    g, _ = _load(args.file)
    m = adjacency(g) if args.matrix == "adj" else kirchhoff(g)
    spec = eig_sym(m, args.tol, method=args.method)
    for x in spec.values:
        out.write(_fmt_float(float(x), args.digits) + "\n")
    return EXIT_OK


def cmd_rank(args, out) -> int:
    g, o = _load(args.file)
    h = incidence(g, o)
    out.write(f"{rank_rational(h) if args.field == 'q' else rank_gf2(h)}\n")
    return EXIT_OK


def cmd_linegraph(args, out) -> int:
    g, o = _load(args.file)
    lg = line_graph(g, o)
    if args.reduce:
        out.write(write_graph(reduce(lg)))
    else:
        out.write(write_graph(lg.graph, lg.orientation))
    return EXIT_OK


def cmd_glg(args, out) -> int:
    g, _ = _load(args.file)
    if g.is_multigraph():
        raise UsageError("glg needs a simple base graph")
    m = _int_list(args.m)
    if len(m) != g.n or any(x < 0 for x in m):
        raise UsageError(f"--m needs {g.n} nonnegative integers")
    out.write(write_graph(generalized_line_graph(g.underlying(), m)))
    return EXIT_OK


def cmd_vsr(args, out) -> int:
    g, _ = _load(args.file)
    if g.is_multigraph():
        raise UsageError("very strong regularity needs a signed simple graph")
    params = check_vsr(g)
    if params is None:
        rep = vsr_combinatorial_check(g)
        out.write("not-vsr\n")
        for key in ("violating edges", "violating non-edges"):
            if rep.data[key]:
                i, j = rep.data[key][0]
                out.write(f"violating-pair: {i} {j}\n")
                break
        else:
            failed = ",".join(rep.failed()) or "matrix equation"
            out.write(f"violating: {failed}\n")
        return EXIT_OK
    line = f"t={params.t} k={params.k} p={params.p} rho0={params.rho0} case={params.case_tag}"
    if params.degenerate:
        line += " degenerate"
    out.write(line + "\n")
    return EXIT_OK


# --- verification suites -------------------------------------------------------------

def suite_rank(g: SignedGraph, o: Optional[Orientation]) -> list[Report]:
    b, c = balanced_component_count(g)
    r = Report("rank", data={"n": g.n, "b": b, "c": c})
    for label, orient in (("default", None), ("file", o)):
        if label == "file" and o is None:
            continue
        h = incidence(g, orient)
        r.check(f"rank_Q(H)==n-b [{label}]", rank_rational(h) == g.n - b)
        r.check(f"rank_GF2(H)==n-c [{label}]", rank_gf2(h) == g.n - c)
        r.check(f"HH^T==K [{label}]", np.array_equal(h @ h.T, kirchhoff(g)))
    r.check("nullity(K)==b", kirchhoff_nullity(g) == b)
    return [r]


def suite_matrixtree(g, o) -> list[Report]:
    reports = [matrix_tree_check(g)]
    if not g.is_multigraph():
        reports.append(matrix_tree_check(g.with_signs([1] * g.m)))
        reports[-1].name = "matrix-tree(+|g|)"
        reports[-1].check("det K(+|g|)==0", reports[-1].data["det"] == 0)
    return reports


def suite_walks(g, o) -> list[Report]:
    return [check_walk_counts(g, l) for l in WALK_LENGTHS]


def suite_theta(g, o) -> list[Report]:
    return [verify_theta_parity(g)]


def suite_linegraph(g, o) -> list[Report]:
    reports = [line_adjacency_identity(g)]
    if o is not None:
        rep = line_adjacency_identity(g, o)
        rep.name += "(file eta)"
        reports.append(rep)
        same = Report("line-graph-switching-class")
        same.check("orientations give switching-equivalent line graphs",
                   switching_equivalent(line_graph(g).graph, line_graph(g, o).graph) is not None)
        reports.append(same)
    reports.append(check_line_eigenvalues(g))
    reports.append(validate_circle_signs(line_graph(g, o)))
    return reports


def suite_kirchhoff_bounds(g, o) -> list[Report]:
    if g.is_multigraph():
        raise SizeGuardError("Kirchhoff bounds apply to simple graphs only")
    reports = [check_kirchhoff_bounds(g)]
    inter = Report("kirchhoff-edge-interlacing")
    for e in g.edges:
        inter.check(f"edge {e.id}", check_kirchhoff_edge_interlacing(g, e.id).ok)
    reports.append(inter)
    return reports


SUITE_FUNCS: dict[str, Callable] = {
    "rank": suite_rank,
    "matrixtree": suite_matrixtree,
    "walks": suite_walks,
    "theta": suite_theta,
    "linegraph": suite_linegraph,
    "kirchhoff-bounds": suite_kirchhoff_bounds,
}


def _expand(paths: Iterable[str]) -> list[str]:
    out = []
    for p in paths:
        path = Path(p)
        if path.is_dir():
            out += sorted(str(x) for x in path.glob("*.sg"))
        else:
            out.append(p)
    if not out:
        raise UsageError("no graph files given")
    return out


def cmd_verify(args, out) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    status = EXIT_OK
    for path in _expand(args.files):
        g, o = _load(path)
        for name in suites:
            try:
                reports = SUITE_FUNCS[name](g, o)
            except SizeGuardError as exc:
                out.write(f"{path}: {name}: SKIP reason={exc}\n")
                continue
            for rep in reports:
                out.write(f"{path}: {name}: {rep.summary()}\n")
                if not rep.ok:
                    status = EXIT_FAIL
    return status


# --- entry point -------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: usage: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sgmatrix", description="Matrices and spectra of signed graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("balance", help="balance certificate")
    s.add_argument("file")
    s.set_defaults(func=cmd_balance)

    s = sub.add_parser("switch", help="switch by a vertex set or a switching function")
    s.add_argument("file")
    grp = s.add_mutually_exclusive_group(required=True)
    grp.add_argument("--set", help="comma-separated vertices to switch")
    grp.add_argument("--fn", help="file with one sign per vertex")
    s.set_defaults(func=cmd_switch)

    s = sub.add_parser("matrix", help="print a matrix")
    s.add_argument("file")
    s.add_argument("--kind", required=True,
                   choices=("adj", "seidel", "incidence", "kirchhoff", "ar"))
    s.add_argument("--format", default="plain", choices=("plain", "csv"))
    s.set_defaults(func=cmd_matrix)

    s = sub.add_parser("spectrum", help="eigenvalues in decreasing order")
    s.add_argument("file")
    s.add_argument("--matrix", default="adj", choices=("adj", "kirchhoff"))
    s.add_argument("--tol", type=float, default=1e-10)
    s.add_argument("--method", default="lapack", choices=("lapack", "jacobi"))
    s.add_argument("--digits", type=int, default=10)
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("rank", help="rank of the incidence matrix")
    s.add_argument("file")
    s.add_argument("--field", default="q", choices=("q", "gf2"))
    s.set_defaults(func=cmd_rank)

    s = sub.add_parser("linegraph", help="line graph as a graph file")
    s.add_argument("file")
    s.add_argument("--reduce", action="store_true")
    s.set_defaults(func=cmd_linegraph)

    s = sub.add_parser("glg", help="generalised line graph of the underlying graph")
    s.add_argument("file")
    s.add_argument("--m", required=True, help="comma-separated digon counts per vertex")
    s.set_defaults(func=cmd_glg)

    s = sub.add_parser("vsr", help="very strong regularity parameters")
    s.add_argument("file")
    s.set_defaults(func=cmd_vsr)

    s = sub.add_parser("verify", help="run verification suites")
    s.add_argument("files", nargs="+", metavar="FILE")
    s.add_argument("--suite", default="all", choices=SUITES + ("all",))
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[list[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except SignedGraphError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
