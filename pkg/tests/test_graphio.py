import pytest
from hypothesis import given

from sgmatrix.core import Orientation, SignedGraph
from sgmatrix.graphio import GraphFileError, read_graph, write_graph, write_matrix
from sgmatrix.matrix import adjacency, kirchhoff
from sgmatrix.named import sigma4, sigma4_orientation

from conftest import FIXTURES, multigraphs


def test_single_edge():
    g, o = read_graph("sg 2 1 simple\n1 2 +\n")
    assert g == SignedGraph.from_edges(2, [(1, 2, 1)])
    assert o is None


def test_sigma4_fixture():
    g, o = read_graph((FIXTURES / "sigma4.sg").read_text())
    assert g == sigma4()
    assert o == sigma4_orientation()
    assert adjacency(g).tolist() == [[0, 1, -1, 1], [1, 0, -1, 0], [-1, -1, 0, 1], [1, 0, 1, 0]]


@pytest.mark.parametrize("text, line", [
    ("sg 2 1 simple\n1 1 +\n", 2),
    ("sg 2 2 simple\n1 2 +\n2 1 -\n", 3),
    ("sg 2 2 simply-signed\n1 2 +\n# c\n1 2 +\n", 4),
    ("sg 2 1 bogus\n1 2 +\n", 1),
    ("graph 2 1\n", 1),
    ("sg 2 1 simple\n1 2 x\n", 2),
    ("sg 2 1 simple\n1 3 +\n", 2),
    ("sg 2 2 simple\n1 2 +\n", 2),
    ("sg 2 1 simple\n1 2 +\neta\n1 1 1\n", 4),
    ("sg 2 1 simple\n1 2 +\neta\n", 3),
    ("sg 2 1 simple\n1 2 +\n2 1 +\n", 3),
    ("", 1),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(GraphFileError) as exc:
        read_graph(text)
    assert exc.value.lineno == line
    assert str(exc.value).startswith(f"line {line}:")


def test_comments_and_blank_lines():
    g, _ = read_graph("# header\n\nsg 3 2 simple   # trailing\n1 2 -\n\n2 3 +\n")
    assert g.signs() == (-1, 1)


def test_canonical_round_trip_is_byte_identical():
    for path in sorted(FIXTURES.glob("*.sg")):
        g, o = read_graph(path.read_text())
        text = write_graph(g, o)
        assert write_graph(*read_graph(text)) == text


@given(multigraphs())
def test_read_write_read(g):
    o = Orientation.default(g)
    assert read_graph(write_graph(g, o)) == (g, o)
    assert read_graph(write_graph(g)) == (g, None)


def test_write_matrix():
    assert write_matrix([[0, 0], [0, 0]]) == "0 0\n0 0\n"
    assert write_matrix([[7]]) == "7\n"
    assert write_matrix(kirchhoff(sigma4()), "csv").splitlines()[0] == "3,-1,1,-1"
    with pytest.raises(ValueError):
        write_matrix([[1]], "tsv")
