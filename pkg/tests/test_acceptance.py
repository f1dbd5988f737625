"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line."""
import io
import random

import numpy as np
import pytest

from sgmatrix.balance import balanced_component_count, is_balanced
from sgmatrix.cli import main as cli_main
from sgmatrix.core import Orientation, switch_fn
from sgmatrix.corpus import all_signatures, atlas_graphs, multigraph_corpus, signed_corpus
from sgmatrix.graphio import write_matrix
from sgmatrix.linegraph import (check_line_eigenvalues, line_adjacency_identity, line_graph,
                                validate_circle_signs)
from sgmatrix.matrix import adjacency, diag_switching, incidence, kirchhoff
from sgmatrix.named import complete_graph, cycle_graph, petersen_graph, sigma4, sigma4_orientation
from sgmatrix.oracle import (all_switching_functions, check_walk_counts, enumerate_circles,
                             matrix_tree_check, verify_theta_parity)
from sgmatrix.spectra import (acharya_balance, adjacency_spectrum, check_kirchhoff_bounds,
                              check_kirchhoff_edge_interlacing, det_exact, kirchhoff_spectrum,
                              rank_gf2, rank_rational)
from sgmatrix.vsr import (check_srg_equivalence, check_vsr, feasibility_identity,
                          vsr_combinatorial_check)

from conftest import FIXTURES

SIGMA4_A = [[0, 1, -1, 1], [1, 0, -1, 0], [-1, -1, 0, 1], [1, 0, 1, 0]]
SIGMA4_H = [[-1, 0, 0, -1, -1], [1, 1, 0, 0, 0], [0, 1, 1, 0, -1], [0, 0, -1, 1, 0]]
SIGMA4_K = [[3, -1, 1, -1], [-1, 2, 1, 0], [1, 1, 3, -1], [-1, 0, -1, 2]]


@pytest.fixture
def verdict(capsys):
    def emit(label, ok, detail=""):
        with capsys.disabled():
            print(f"\n[acceptance] {label}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
        return ok
    return emit


def test_c01_reference_grids(verdict):
    ok = (adjacency(sigma4()).tolist() == SIGMA4_A
          and incidence(sigma4(), sigma4_orientation()).tolist() == SIGMA4_H
          and kirchhoff(sigma4()).tolist() == SIGMA4_K)
    assert verdict("1 reference grids", ok)


def test_c02_rank_theorem(verdict):
    bad, count = [], 0
    for g in signed_corpus(5):
        b, c = balanced_component_count(g)
        h = incidence(g)
        count += 1
        if rank_rational(h) != g.n - b or rank_gf2(h) != g.n - c:
            bad.append(g)
    assert verdict("2 rank theorem", not bad, f"graphs={count} failures={len(bad)}")


def test_c03_balance_triple(verdict):
    bad, count = [], 0
    for g in signed_corpus(5):
        count += 1
        a = is_balanced(g).balanced
        b = all(c.sign > 0 for c in enumerate_circles(g))
        c = acharya_balance(g, 1e-7)
        if not a == b == c:
            bad.append(g)
    assert verdict("3 balance triple agreement", not bad, f"graphs={count} failures={len(bad)}")


def test_c04_matrix_tree(verdict):
    bad, count = [], 0
    for g in signed_corpus(6, max_edges=10):
        count += 1
        if not matrix_tree_check(g).ok:
            bad.append(g)
    positive = [gamma for gamma in atlas_graphs(7)
                if det_exact(kirchhoff(gamma.with_sign(1))) != 0]
    assert verdict("4 matrix-tree", not bad and not positive,
                   f"graphs={count} failures={len(bad)} nonzero det K(+G)={len(positive)}")


def test_c05_walks(verdict):
    graphs = [g for gamma in atlas_graphs(4) for g in all_signatures(gamma)]
    graphs += list(multigraph_corpus(4))
    bad = [(g, l) for g in graphs for l in range(1, 6) if not check_walk_counts(g, l).ok]
    assert verdict("5 walk theorem", not bad, f"graphs={len(graphs)} failures={len(bad)}")


def test_c06_switching_conjugation(verdict):
    bad, count = 0, 0
    for g in signed_corpus(5):
        a, k = adjacency(g), kirchhoff(g)
        sa, sk = adjacency_spectrum(g), kirchhoff_spectrum(g)
        for theta in all_switching_functions(g.n):
            count += 1
            h = switch_fn(g, theta)
            d = diag_switching(theta, g.n)
            if not np.array_equal(adjacency(h), d @ a @ d):
                bad += 1
            elif not (adjacency_spectrum(h).close_to(sa, 1e-7)
                      and kirchhoff_spectrum(h).close_to(sk, 1e-7)):
                bad += 1
            elif not np.array_equal(kirchhoff(h), d @ k @ d):
                bad += 1
    assert verdict("6 switching conjugation", bad == 0, f"pairs={count} failures={bad}")


def _random_orientation(g, rng):
    base = Orientation.default(g)
    return Orientation(g, tuple((a, b) if rng.random() < 0.5 else (-a, -b)
                                for a, b in base.ends))


def test_c07_line_graph_identity(verdict):
    rng = random.Random(20261016)
    graphs = list(signed_corpus(5)) + list(multigraph_corpus(5))
    bad = 0
    for g in graphs:
        if not check_line_eigenvalues(g, tol=1e-8, width=1e-6).ok:
            bad += 1
            continue
        if not line_adjacency_identity(g).ok:
            bad += 1
            continue
        for _ in range(5):
            if not line_adjacency_identity(g, _random_orientation(g, rng)).ok:
                bad += 1
                break
    assert verdict("7 line-graph identity and eigenvalue 2", bad == 0,
                   f"graphs={len(graphs)} failures={bad}")


def test_c08_line_graph_circle_signs(verdict):
    sources = list(signed_corpus(5))
    sources += list(multigraph_corpus(4, max_edges=10))
    sources += list(multigraph_corpus(5, min_n=5, max_edges=8))
    bad = sum(1 for g in sources if not validate_circle_signs(line_graph(g)).ok)
    assert verdict("8 line-graph circle signs", bad == 0, f"sources={len(sources)} failures={bad}")


def _vsr_instances():
    found = []
    gammas = atlas_graphs(7) + [petersen_graph()]
    for gamma in gammas:
        for sign in (1, -1):
            g = gamma.with_sign(sign)
            p = check_vsr(g)
            if p is not None:
                found.append((g, p))
    for gamma in atlas_graphs(6):
        degs = {gamma.degree(v) for v in range(1, gamma.n + 1)}
        if len(degs) == 1 and gamma.edges:
            for g in all_signatures(gamma):
                if len(set(g.signs())) == 2:
                    p = check_vsr(g)
                    if p is not None:
                        found.append((g, p))
    return found


def test_c09_very_strong_regularity(verdict):
    ok = True
    for sign, expected in ((1, (0, 2, 1, 2)), (-1, (0, 2, 1, -2))):
        g = cycle_graph(5).with_sign(sign)
        counted = vsr_combinatorial_check(g)
        ok &= counted.ok and counted.data["params"] == expected
        ok &= check_vsr(g) is not None and check_vsr(g).as_tuple() == expected
    gammas = atlas_graphs(7) + [petersen_graph()]
    srg_bad = [gm for gm in gammas if not check_srg_equivalence(gm).ok]
    instances = _vsr_instances()
    ident_bad = [(g, p) for g, p in instances
                 if feasibility_identity(p, g.n)[0] != feasibility_identity(p, g.n)[1]]
    ok &= not srg_bad and not ident_bad
    assert verdict("9 VSR parameters, SRG agreement, identity p(n-1-k)=rho0(rho0-t)-k", ok,
                   f"graphs={len(gammas)} srg failures={len(srg_bad)} instances={len(instances)} "
                   f"identity failures={len(ident_bad)}")


@pytest.mark.xfail(strict=True, reason="the identity with rho0(rho0+t) is false; see the "
                                       "corrected form in the previous test")
def test_c09_identity_plus_variant(verdict):
    instances = _vsr_instances()
    bad = [(g, p) for g, p in instances if p.p * (g.n - 1 - p.k) != p.rho0 * (p.rho0 + p.t) - p.k]
    detail = f"instances={len(instances)} failures={len(bad)}"
    if bad:
        g, p = bad[0]
        detail += (f" first: n={g.n} (t,k,p,rho0)={p.as_tuple()} lhs={p.p * (g.n - 1 - p.k)} "
                   f"rhs={p.rho0 * (p.rho0 + p.t) - p.k}")
    assert verdict("9 identity p(n-1-k)=rho0(rho0+t)-k variant", not bad, detail)


def test_c10_kirchhoff_bounds(verdict):
    r = check_kirchhoff_bounds(complete_graph(4).with_sign(-1))
    ok = r.ok and abs(r.data["lambda1"] - 6) <= 1e-7
    bad, pairs, flagged, graphs = 0, 0, 0, 0
    for g in signed_corpus(5):
        graphs += 1
        rep = check_kirchhoff_bounds(g)
        if not rep.ok:
            bad += 1
        if not rep.data["maxdeg holds"]:
            flagged += 1
        for e in g.edges:
            pairs += 1
            if not check_kirchhoff_edge_interlacing(g, e.id, 1e-7).ok:
                bad += 1
    ok &= bad == 0
    assert verdict("10 Kirchhoff bounds and edge interlacing", ok,
                   f"-K4 lambda1={r.data['lambda1']:.10f} graphs={graphs} edge pairs={pairs} "
                   f"failures={bad} maxdeg bound flagged={flagged}")


def test_c11_theta_parity(verdict):
    bad, count = 0, 0
    for g in signed_corpus(6):
        count += 1
        if not verify_theta_parity(g).ok:
            bad += 1
    assert verdict("11 theta parity", bad == 0, f"graphs={count} failures={bad}")


def test_c12_cli(verdict):
    out = io.StringIO()
    code = cli_main(["verify", str(FIXTURES), "--suite", "all"], out=out)
    ok = code == 0
    sigma = str(FIXTURES / "sigma4.sg")
    for kind, grid in (("adj", SIGMA4_A), ("incidence", SIGMA4_H), ("kirchhoff", SIGMA4_K)):
        buf = io.StringIO()
        ok &= cli_main(["matrix", sigma, "--kind", kind], out=buf) == 0
        ok &= buf.getvalue() == write_matrix(np.array(grid))
    assert verdict("12 CLI", ok, f"verify exit={code}")
