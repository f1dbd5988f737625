from sgmatrix.balance import switching_equivalent
from sgmatrix.corpus import (all_signatures, atlas_graphs, multigraph_corpus, signed_corpus,
                             switching_classes)
from sgmatrix.named import complete_graph, cycle_graph


def test_atlas_counts():
    # graphs up to isomorphism on 1..5 vertices: 1, 2, 4, 11, 34
    assert [len(atlas_graphs(n, min_n=n)) for n in range(1, 6)] == [1, 2, 4, 11, 34]


def test_switching_classes_are_distinct_and_complete():
    gamma = complete_graph(4)
    reps = switching_classes(gamma)
    assert len(reps) == 2 ** (6 - 4 + 1)
    for i, a in enumerate(reps):
        for b in reps[i + 1:]:
            assert switching_equivalent(a, b) is None
    for g in all_signatures(gamma):
        assert any(switching_equivalent(g, r) is not None for r in reps)


def test_multigraph_corpus_has_digons():
    gs = list(multigraph_corpus(3))
    assert gs and all(g.is_multigraph() for g in gs)
    # seven graphs on at most 3 vertices, of which only the triangle has two classes
    assert sum(1 for _ in signed_corpus(3)) == 8


def test_cycle_has_two_classes():
    assert len(switching_classes(cycle_graph(5))) == 2
