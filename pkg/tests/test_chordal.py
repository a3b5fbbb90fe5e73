"""Perfect elimination orders and tree structures."""

import warnings

import pytest

from qbichromate.chordal import (NotChordal, load_structure, parse_structure,
                                 peo, graph_of_structure, str2_pair,
                                 str20_pair, structure_count, tree_structures)
from qbichromate.graphcore import Multigraph, ParseError
from conftest import fixture_path


def test_peo_path():
    g = Multigraph(3, ((1, 2), (2, 3)))
    order, m = peo(g)
    assert order == (1, 2, 3)
    assert m == (0, 1, 1)


def test_peo_triangle():
    g = Multigraph(3, ((1, 2), (2, 3), (1, 3)))
    _, m = peo(g)
    assert sorted(m) == [0, 1, 2]


def test_peo_rejects_cycle():
    g = Multigraph(4, ((1, 2), (2, 3), (3, 4), (1, 4)))
    with pytest.raises(NotChordal) as e:
        peo(g)
    cycle = e.value.cycle
    assert len(cycle) == 4
    # certificate really is a chordless cycle of the graph
    edges = set(map(tuple, map(sorted, g.edges)))
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        assert tuple(sorted((u, v))) in edges


def test_parse_structure():
    parents, a_sets, b_sizes = load_structure(fixture_path("chain.s"))
    assert parents == (0, 1, 2)
    assert a_sets == (frozenset({1, 2}), frozenset({3}), frozenset({4}))
    assert b_sizes == (0, 1, 1)


def test_parse_structure_errors():
    with pytest.raises(ParseError):
        parse_structure("")
    with pytest.raises(ParseError) as e:
        parse_structure("tree 0 1\nA 1 1\nA 2 2\nb 2 1\nb 2 1\n")
    assert "line" in str(e.value)
    with pytest.raises(ParseError):
        parse_structure("A 1 1\n")


def test_structure_count_matches_enumeration():
    parents, a_sets, b_sizes = load_structure(fixture_path("chain.s"))
    ss = list(tree_structures(parents, a_sets, b_sizes))
    assert structure_count(parents, a_sets, b_sizes) == len(ss) == 4
    # structures are distinct
    assert len({tuple(s.bag(i) for i in range(s.node_count)) for s in ss}) == 4


def test_infeasible_instance_warns():
    with warnings.catch_warnings(record=True) as rec:
        warnings.simplefilter("always")
        out = list(tree_structures((0, 1), ({1}, {2}), (0, 3)))
    assert out == []
    assert len(rec) == 1
    assert structure_count((0, 1), ({1}, {2}), (0, 3)) == 0


def test_instance_validation():
    # overlapping A sets do not partition the ground set
    with pytest.raises(ValueError):
        structure_count((0, 1), ({1}, {1}), (0, 1))
    # parent index out of range
    with pytest.raises(ValueError):
        structure_count((0, 5), ({1}, {2}), (0, 0))
    # two roots
    with pytest.raises(ValueError):
        structure_count((0, 0), ({1}, {2}), (0, 0))


def test_graph_of_structure_is_chordal():
    parents, a_sets, b_sizes = load_structure(fixture_path("chain.s"))
    for s in tree_structures(parents, a_sets, b_sizes):
        g = graph_of_structure(s)
        peo(g)


def test_str2_identity():
    parents, a_sets, b_sizes = load_structure(fixture_path("chain.s"))
    for s in tree_structures(parents, a_sets, b_sizes):
        for z in (1, 2, 3):
            lhs, rhs = str2_pair(s, z)
            assert lhs == rhs


def test_str20_identity():
    parents, a_sets, b_sizes = load_structure(fixture_path("chain.s"))
    for z in (1, 2, 3):
        lhs, rhs = str20_pair(parents, a_sets, b_sizes, z)
        assert lhs == rhs
    with pytest.raises(ValueError):
        str20_pair(parents, a_sets, b_sizes, 0)
