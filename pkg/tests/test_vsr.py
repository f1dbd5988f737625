import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sgmatrix.core import Graph, SignedGraph, SignedGraphError, negate, switch_fn
from sgmatrix.matrix import adjacency
from sgmatrix.named import (complete_bipartite_graph, complete_graph, cycle_graph, empty_graph,
                            path_graph, petersen_graph, sigma4, sigma4_digons)
from sgmatrix.vsr import (GENERAL, HOMOGENEOUS, P0, check_case_invariants,
                          check_srg_equivalence, check_vsr, feasibility_identity, first_equation,
                          is_strongly_regular, is_weighing_matrix, vsr_combinatorial_check)

from conftest import signed_graphs


def test_five_cycles_by_counting():
    for sign, rho0 in ((1, 2), (-1, -2)):
        g = cycle_graph(5).with_sign(sign)
        counted = vsr_combinatorial_check(g)
        assert counted.ok and counted.data["params"] == (0, 2, 1, rho0)
        assert check_vsr(g).as_tuple() == (0, 2, 1, rho0)


def test_path_is_not_vsr():
    g = path_graph(3).with_sign(1)
    assert check_vsr(g) is None
    r = vsr_combinatorial_check(g)
    assert not r.ok


def test_sigma4_not_vsr_and_report_names_pair():
    assert check_vsr(sigma4()) is None
    r = vsr_combinatorial_check(sigma4())
    assert not r.ok
    assert r.data["violating edges"] or r.data["violating non-edges"] or r.failed()


def test_positive_k4_counts():
    g = complete_graph(4).with_sign(1)
    params = check_vsr(g)
    assert params.as_tuple() == (2, 3, 0, 3) and params.degenerate
    r = vsr_combinatorial_check(g, params)
    assert r.ok and r.data["violating non-edges"] == []


def test_edgeless_and_empty():
    assert check_vsr(empty_graph(3).with_sign(1)).as_tuple() == (0, 0, 0, 0)
    assert check_vsr(SignedGraph(0, ())).as_tuple() == (0, 0, 0, 0)


def test_multigraph_rejected():
    with pytest.raises(SignedGraphError):
        check_vsr(sigma4_digons())


def test_case_tags():
    assert check_vsr(cycle_graph(5).with_sign(1)).case_tag == HOMOGENEOUS
    c4 = SignedGraph.from_edges(4, [(1, 2, 1), (1, 4, -1), (2, 3, -1), (3, 4, 1)])
    params = check_vsr(c4)
    assert params.as_tuple() == (0, 2, -2, 0) and params.case_tag == GENERAL
    k4 = SignedGraph.from_edges(4, [(1, 2, 1), (1, 3, 1), (1, 4, -1), (2, 3, -1), (2, 4, 1),
                                    (3, 4, 1)])
    params = check_vsr(k4)
    assert params.as_tuple() == (-2, 3, 0, 1) and params.case_tag == P0
    r = check_case_invariants(k4, params)
    assert r.ok and r.data["s"] == 4


def test_p0t0_invariants_on_matching():
    g = SignedGraph.from_edges(4, [(1, 2, 1), (3, 4, 1)])
    params = check_vsr(g)
    assert params.as_tuple() == (0, 1, 0, 1)
    r = check_case_invariants(g, params)
    assert r.ok and "row pattern" in r.checks


def test_weighing_matrices():
    assert is_weighing_matrix(np.eye(3, dtype=int)) == 1
    assert is_weighing_matrix([[1, 1], [1, -1]]) == 2
    assert is_weighing_matrix(adjacency(sigma4())) is None
    assert is_weighing_matrix([[2, 0], [0, 2]]) is None


def test_srg_examples():
    assert is_strongly_regular(cycle_graph(5)) == (2, 0, 1)
    assert is_strongly_regular(petersen_graph()) == (3, 0, 1)
    assert is_strongly_regular(path_graph(4)) is None
    for gamma in (cycle_graph(5), petersen_graph(), path_graph(4), complete_graph(5),
                  complete_bipartite_graph(3, 3), empty_graph(4)):
        assert check_srg_equivalence(gamma).ok


def test_octahedron_identity():
    # K_{2,2,2} is SRG(6, 4, 2, 4)
    gamma = Graph(6, tuple((i, j) for i in range(1, 7) for j in range(i + 1, 7)
                           if (i - 1) // 2 != (j - 1) // 2))
    params = check_vsr(gamma.with_sign(1))
    assert params.as_tuple() == (2, 4, 4, 4)
    lhs, rhs = feasibility_identity(params, 6)
    assert lhs == rhs == 4


@given(signed_graphs(max_n=6))
def test_vsr_agrees_with_counting(g):
    params = check_vsr(g)
    counted = vsr_combinatorial_check(g)
    assert (params is not None) == counted.ok or (params is not None and params.degenerate)
    if params is not None:
        assert vsr_combinatorial_check(g, params).ok
        assert check_case_invariants(g, params).ok


@given(signed_graphs(max_n=6))
def test_negation_covariance(g):
    params = check_vsr(g)
    neg = check_vsr(negate(g))
    assert (params is None) == (neg is None)
    if params is not None:
        assert neg.as_tuple() == (-params.t, params.k, params.p, -params.rho0)


@given(signed_graphs(max_n=6), st.data())
def test_first_equation_with_p_zero_is_switching_invariant(g, data):
    # switching conjugates A and A^2 but not the complement term, so only p = 0 survives
    theta = data.draw(st.lists(st.sampled_from((1, -1)), min_size=g.n, max_size=g.n))
    a = first_equation(g)
    if a is not None and a[2] == 0:
        assert first_equation(switch_fn(g, theta))[:3] == a[:3]


def test_first_equation_not_switching_invariant_when_p_nonzero():
    g = cycle_graph(4).with_sign(1)
    assert first_equation(g)[:3] == (0, 2, 2)
    assert first_equation(switch_fn(g, [1, 1, 1, -1])) is None
