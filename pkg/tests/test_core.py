import pytest
from hypothesis import given
from hypothesis import strategies as st

from sgmatrix.core import (SIMPLY_SIGNED, Graph, Orientation, SignedGraph, SignedGraphError,
                           SwitchingFunction, negate, reorient_edge, switch_fn,
                           switch_orientation, switch_set)
from sgmatrix.named import sigma4, sigma4_orientation

from conftest import multigraphs, signed_graphs


def test_edge_ids_follow_order():
    g = SignedGraph.from_edges(3, [(2, 3, -1), (1, 2, 1)])
    assert [e.id for e in g.edges] == [1, 2]
    assert g.edge(1).ends == (2, 3)
    assert g.signs() == (-1, 1)


@pytest.mark.parametrize("edges, mode", [
    ([(1, 1, 1)], "simple"),
    ([(1, 2, 1), (2, 1, -1)], "simple"),
    ([(1, 2, 1), (1, 2, 1)], SIMPLY_SIGNED),
    ([(1, 2, 1), (1, 2, -1), (1, 2, 1)], SIMPLY_SIGNED),
    ([(1, 4, 1)], "simple"),
    ([(1, 2, 0)], "simple"),
])
def test_constructor_rejects(edges, mode):
    with pytest.raises(SignedGraphError):
        SignedGraph.from_edges(3, edges, mode)


def test_digon_allowed_in_multigraph_mode():
    g = SignedGraph.from_edges(2, [(1, 2, 1), (1, 2, -1)], SIMPLY_SIGNED)
    assert g.is_multigraph()


def test_switch_identity_and_vertex_one():
    g = sigma4()
    assert switch_fn(g, [1, 1, 1, 1]) == g
    h = switch_fn(g, [-1, 1, 1, 1])
    got = {e.pair(): e.sign for e in h.edges}
    assert got == {(1, 2): -1, (1, 3): 1, (1, 4): -1, (2, 3): -1, (3, 4): 1}


def test_switching_function_must_be_total():
    with pytest.raises(SignedGraphError):
        switch_fn(sigma4(), {1: -1, 2: 1})
    with pytest.raises(SignedGraphError):
        switch_fn(sigma4(), [1, 1, 1])


def test_switch_set_matches_function():
    g = sigma4()
    assert switch_set(g, {2, 4}) == switch_fn(g, SwitchingFunction.from_set(4, {2, 4}))


def test_reference_orientation_is_consistent():
    o = sigma4_orientation()
    assert o.eta(1, 5) == -1 and o.eta(3, 5) == -1
    assert o.eta(2, 5) == 0
    for e in o.graph.edges:
        assert -o.eta(e.u, e.id) * o.eta(e.v, e.id) == e.sign


def test_orientation_rejects_inconsistent_ends():
    with pytest.raises(SignedGraphError):
        Orientation(sigma4(), ((1, 1),) + sigma4_orientation().ends[1:])


def test_reorient_edge_keeps_sign():
    o = sigma4_orientation()
    o2 = reorient_edge(o, 2)
    assert o2.ends[1] == (-1, -1)
    assert o2.graph == o.graph
    with pytest.raises(SignedGraphError):
        reorient_edge(o, 9)


def test_graph_complement_and_signing():
    gamma = Graph(4, ((1, 2), (3, 2)))
    assert gamma.edges == ((1, 2), (2, 3))
    assert len(gamma.complement().edges) == 4
    assert gamma.with_sign(-1).signs() == (-1, -1)


@given(signed_graphs(), st.data())
def test_switching_is_an_action(g, data):
    t1 = SwitchingFunction(tuple(data.draw(st.lists(st.sampled_from((1, -1)),
                                                    min_size=g.n, max_size=g.n))))
    t2 = SwitchingFunction(tuple(data.draw(st.lists(st.sampled_from((1, -1)),
                                                    min_size=g.n, max_size=g.n))))
    assert switch_fn(switch_fn(g, t1), t2) == switch_fn(g, t1 * t2)
    assert switch_fn(g, -t1) == switch_fn(g, t1)
    h = switch_fn(g, t1)
    assert [e.pair() for e in h.edges] == [e.pair() for e in g.edges]


@given(multigraphs(), st.data())
def test_switched_orientation_stays_consistent(g, data):
    theta = data.draw(st.lists(st.sampled_from((1, -1)), min_size=g.n, max_size=g.n))
    o = switch_orientation(Orientation.default(g), theta)
    assert o.graph == switch_fn(g, theta)


@given(signed_graphs())
def test_negate_twice(g):
    assert negate(negate(g)) == g
    assert all(a.sign == -b.sign for a, b in zip(g.edges, negate(g).edges))
