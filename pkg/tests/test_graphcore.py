"""Graph text format and multigraph helpers."""

import pytest

from qbichromate.graphcore import Multigraph, ParseError, load_graph, parse_graph
from conftest import fixture_path


def test_parse_basic():
    g = parse_graph("vertices 3\n1 2\n2 3\n")
    assert g.vertex_count == 3
    assert g.edges == ((1, 2), (2, 3))


def test_parse_comments_and_blanks():
    g = parse_graph("# a triangle\nvertices 3\n\n1 2\n# middle\n2 3\n1 3\n")
    assert g.edges == ((1, 2), (2, 3), (1, 3))


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as e:
        parse_graph("vertices 2\n1 3\n")
    assert "line 2" in str(e.value)
    with pytest.raises(ParseError) as e:
        parse_graph("1 2\n")
    assert "line 1" in str(e.value)
    with pytest.raises(ParseError):
        parse_graph("vertices 2\n1 2 3\n")
    with pytest.raises(ParseError):
        parse_graph("")


def test_load_graph(tmp_path):
    g = load_graph(fixture_path("tri.g"))
    assert g.vertex_count == 3
    assert len(g.edges) == 3
    p = tmp_path / "x.g"
    p.write_text(g.to_text())
    assert load_graph(str(p)) == g


def test_components():
    g = Multigraph(4, ((1, 2), (3, 4)))
    full = (1 << len(g.edges)) - 1
    assert g.component_count(full) == 2
    assert g.component_count(0) == 4
    comps = g.components(0b01)
    assert sorted(map(sorted, comps)) == [[1, 2], [3], [4]]


def test_subsets_and_subset_edges():
    g = Multigraph(3, ((1, 2), (2, 3), (1, 3)))
    assert len(list(g.subsets())) == 8
    assert g.subset_size(0b101) == 2
    assert g.subset_edges(0b101) == [(1, 2), (1, 3)]


def test_degree_and_odd_degree():
    g = Multigraph(3, ((1, 2), (1, 2), (2, 3)))
    assert g.degree(2) == 3
    assert g.odd_degree_count((1 << 3) - 1) == 2
    loop = Multigraph(1, ((1, 1),))
    assert loop.has_loop()
    # a loop adds two to its vertex degree
    assert loop.degree(1) == 2
    assert loop.odd_degree_count(1) == 0


def test_neighbors():
    g = Multigraph(3, ((1, 2), (2, 3)))
    assert g.neighbors(2) == {1, 3}


def test_validation():
    with pytest.raises(ValueError):
        Multigraph(2, ((1, 3),))
