"""Planar diagrams, state sums, and the face-graph route."""

from fractions import Fraction

import pytest

from qbichromate.graphcore import ParseError
from qbichromate.knotdiag import (faces, jones, jones_via_bichromate,
                                  kauffman_f, load_pd, median_graph, parse_pd,
                                  prop_mm_check)
from qbichromate.polyq import LaurentPoly
import oracles
from conftest import fixture_path


def read(name):
    with open(fixture_path(name), "r", encoding="utf-8") as handle:
        return handle.read()


def test_parse_pd():
    k = parse_pd("X+ 1 4 2 5\nX+ 3 6 4 1\nX+ 5 2 6 3\n")
    assert len(k.crossings) == 3
    assert k.crossings[0].sign == 1


def test_parse_pd_errors():
    with pytest.raises(ParseError):
        parse_pd("")
    with pytest.raises(ParseError) as e:
        parse_pd("X+ 1 2 3\n")
    assert "line 1" in str(e.value)
    with pytest.raises(ParseError):
        parse_pd("Y+ 1 2 2 1\n")
    # every arc label must appear exactly twice
    with pytest.raises(ParseError):
        parse_pd("X+ 1 2 3 4\n")


def test_face_counts():
    tre = load_pd(fixture_path("trefoil.pd"))
    fig8 = load_pd(fixture_path("fig8.pd"))
    # Euler: crossings - arcs + faces = 2
    assert len(faces(tre)) == 5
    assert len(faces(fig8)) == 6
    kink = load_pd(fixture_path("kink.pd"))
    assert len(faces(kink)) == 3


def test_kink_is_unknotted():
    for name in ("kink.pd", "kinkneg.pd"):
        k = load_pd(fixture_path(name))
        assert kauffman_f(k) == LaurentPoly.constant(1)
        assert jones(k) == LaurentPoly.constant(1)


def test_trefoil_jones():
    t = LaurentPoly.variable("t")
    k = load_pd(fixture_path("trefoil.pd"))
    assert jones(k) == t + t ** 3 - t ** 4


def test_jones_matches_state_sum_oracle():
    for name in ("trefoil.pd", "fig8.pd", "kink.pd"):
        k = load_pd(fixture_path(name))
        expect = oracles.jones_from_bracket(read(name))
        got = jones(k)
        assert {e[0] if e else 0: c for e, c in got.terms.items()} == expect


def test_median_graph_trefoil():
    k = load_pd(fixture_path("trefoil.pd"))
    m = median_graph(k, 0)
    assert m.graph.vertex_count == 3
    assert sorted(m.graph.edges) == [(1, 2), (2, 3), (3, 1)] or \
        sorted(tuple(sorted(e)) for e in m.graph.edges) == [(1, 2), (1, 3), (2, 3)]
    assert m.b == (1, 1, 1)
    assert m.eta == (1, 1, 1)
    assert m.black_faces == (1, 3, 4)
    with pytest.raises(ValueError):
        median_graph(k, 99)


def test_prop_mm():
    for name in ("kink.pd", "kinkneg.pd", "trefoil.pd", "fig8.pd"):
        k = load_pd(fixture_path(name))
        for face in range(len(faces(k))):
            assert prop_mm_check(k, face)


def test_bichromate_route_equals_bracket():
    for name in ("trefoil.pd", "fig8.pd"):
        k = load_pd(fixture_path(name))
        f = kauffman_f(k)
        for face in range(len(faces(k))):
            assert jones_via_bichromate(k, face, route="kk") == f


def test_uniform_sign_route():
    tre = load_pd(fixture_path("trefoil.pd"))
    assert jones_via_bichromate(tre, 0, route="kkk") == kauffman_f(tre)
    fig8 = load_pd(fixture_path("fig8.pd"))
    with pytest.raises(ValueError):
        jones_via_bichromate(fig8, 0, route="kkk")
    with pytest.raises(ValueError):
        jones_via_bichromate(tre, 0, route="bogus")
