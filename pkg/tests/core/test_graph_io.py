import pytest
from hypothesis import given, settings

from tests.strategies import multigraphs, pure_matrices
from zhom.core import (
    MultiGraph,
    PureMatrix,
    complete,
    cycle,
    disjoint_union,
    edgeless,
    format_graph,
    format_matrix,
    format_poly,
    graph_components,
    graph_suite,
    parse_graph,
    parse_matrix,
    parse_poly,
    read_matrix,
    thicken,
    two_coloring,
)
from zhom.gausssum import QuadPoly
from zhom.utils.errors import ParseError


def test_graph_components():
    assert len(graph_components(edgeless(3))) == 3
    parts = graph_components(disjoint_union(complete(2), cycle(3)))
    assert [p.vertices for p in parts] == [(0, 1), (2, 3, 4)]
    assert parts[1].graph == cycle(3)


def test_self_loop_degree():
    G = MultiGraph(1, ((0, 0, 1),))
    assert G.degrees() == [2]
    assert G.degree(0) == 2
    assert MultiGraph(2, ((0, 0, 3), (0, 1, 1))).degrees() == [7, 1]
    assert len(graph_components(G)) == 1


def test_edges_are_merged():
    G = MultiGraph(3, ((1, 0, 1), (0, 1, 2), (2, 2, 1)))
    assert G.edges == ((0, 1, 3), (2, 2, 1))
    assert thicken(G, 2).edges == ((0, 1, 6), (2, 2, 2))
    with pytest.raises(ValueError):
        MultiGraph(2, ((0, 2, 1),))


def test_two_coloring():
    assert two_coloring(cycle(4)) == [0, 1, 0, 1]
    assert two_coloring(cycle(3)) is None
    assert two_coloring(MultiGraph(1, ((0, 0, 1),))) is None
    assert two_coloring(MultiGraph(1)) == [0]


def test_graph_suite_is_deterministic():
    suite = graph_suite(seed=7, count=30, max_vertices=5, max_total_multiplicity=8)
    assert suite == graph_suite(seed=7, count=30, max_vertices=5, max_total_multiplicity=8)
    assert len(suite) == 30
    assert all(len(graph_components(G)) == 1 for G in suite)


def test_parse_matrix():
    text = """
    # Hadamard
    matrix 2
    0 0 1
    0 1 1
    1 1 -1   # sign
    """
    A = parse_matrix(text)
    assert A == PureMatrix.from_rows([[1, 1], [1, -1]])
    assert format_matrix(A) == "matrix 2\n0 0 1/1\n0 1 1/1\n1 1 1/1*w(2,1)\n"


@pytest.mark.parametrize(
    "text, line_no",
    [
        ("matrix 2\n0 0 1\n1 0 1\n", 3),
        ("matrix 2\n0 0 1\n0 0 2\n", 3),
        ("matrix 2\n0 1 3/2*w(8\n", 2),
        ("graph 2\n", 1),
        ("", None),
    ],
)
def test_parse_matrix_errors(text: str, line_no: int | None):
    with pytest.raises(ParseError) as info:
        parse_matrix(text)
    assert info.value.line_no == line_no


def test_parse_graph():
    G = parse_graph("graph 3\n0 1 2\n2 2 1\n")
    assert G == MultiGraph(3, ((0, 1, 2), (2, 2, 1)))
    assert parse_graph(format_graph(G)) == G
    with pytest.raises(ParseError) as info:
        parse_graph("graph 2\n0 1 0\n")
    assert info.value.line_no == 2


def test_parse_poly():
    f = parse_poly("poly q=4 n=2\nq 0 0 1\nq 0 1 2\nl 1 3\nk 5\n")
    assert f == QuadPoly.build(4, 2, {(0, 0): 1, (0, 1): 2}, {1: 3}, 1)
    assert parse_poly(format_poly(f)) == f
    with pytest.raises(ParseError):
        parse_poly("poly q=6 n=1\n")
    with pytest.raises(ParseError):
        parse_poly("poly q=5 n=1\nq 1 0 1\n")


@settings(max_examples=100)
@given(pure_matrices(max_dim=4))
def test_matrix_text_form(A: PureMatrix):
    assert parse_matrix(format_matrix(A)) == A


@settings(max_examples=100)
@given(multigraphs())
def test_graph_text_form(G: MultiGraph):
    assert parse_graph(format_graph(G)) == G


def test_read_matrix(tmp_path):
    path = tmp_path / "vcover.mat"
    path.write_text("matrix 2\n0 1 1\n1 1 1\n", encoding="utf-8")
    assert read_matrix(path) == PureMatrix.from_rows([[0, 1], [1, 1]])
    with pytest.raises(FileNotFoundError):
        read_matrix(tmp_path / "missing.mat")
