"""Graph color-counting polynomials."""

from fractions import Fraction

import pytest

from qbichromate.graphcore import Multigraph
from qbichromate.polyq import LaurentPoly, qbinom, qint
from qbichromate.qchrom import (bichromate, mdef_chord, mq_complete, mq_direct,
                                mq_subset, q_bichromate, tutte)

Q = LaurentPoly.variable("q")


def test_mq_single_edge():
    g = Multigraph(2, ((1, 2),))
    assert mq_direct(g, 2) == 2 * Q
    assert mq_subset(g, 2) == 2 * Q
    # too few colors for a proper coloring
    assert mq_direct(g, 1) == LaurentPoly()


def test_mq_triangle():
    g = Multigraph(3, ((1, 2), (2, 3), (1, 3)))
    assert mq_direct(g, 3) == mq_complete(3, 3)
    assert mq_direct(g, 2) == LaurentPoly()
    assert mq_direct(g, 4) == mq_subset(g, 4) == mq_complete(3, 4)


def test_mq_loop_kills_colorings():
    g = Multigraph(2, ((1, 1), (1, 2)))
    for n in range(1, 5):
        assert mq_direct(g, n) == LaurentPoly()
        assert mq_subset(g, n) == LaurentPoly()


def test_mq_parallel_edges_match_simple():
    simple = Multigraph(2, ((1, 2),))
    doubled = Multigraph(2, ((1, 2), (1, 2)))
    for n in range(1, 5):
        assert mq_direct(doubled, n) == mq_direct(simple, n)
        assert mq_subset(doubled, n) == mq_subset(simple, n)


def test_mq_complete_closed_form():
    import math
    for k in range(1, 5):
        for n in range(k, 6):
            expect = (LaurentPoly.constant(math.factorial(k))
                      * qbinom(n, k) * Q ** (k * (k - 1) // 2))
            assert mq_complete(k, n) == expect
    assert mq_complete(3, 2) == LaurentPoly()


def test_bichromate_single_edge():
    g = Multigraph(2, ((1, 2),))
    a = LaurentPoly.variable("a")
    b = LaurentPoly.variable("b")
    # one edge: the empty subset gives a^2, the full one gives a*b
    assert bichromate(g) == a ** 2 + a * b


def test_tutte_triangle():
    g = Multigraph(3, ((1, 2), (2, 3), (1, 3)))
    x = LaurentPoly.variable("x")
    y = LaurentPoly.variable("y")
    assert tutte(g) == x ** 2 + x + y
    with pytest.raises(ValueError):
        tutte(g, form="nope")


def test_whitney_rank_relates_to_tutte():
    g = Multigraph(3, ((1, 2), (2, 3), (1, 3)))
    r = tutte(g, form="whitney-rank")
    u = LaurentPoly.variable("u")
    v = LaurentPoly.variable("v")
    assert r == 3 + v + 3 * u + u ** 2
    # agrees with the (x-1, y-1) shift of the standard form at sample points
    t = tutte(g)
    for a in (Fraction(2), Fraction(-1), Fraction(1, 2)):
        for b in (Fraction(3), Fraction(0), Fraction(-1, 3)):
            assert (r.evaluate({"u": a, "v": b})
                    == t.evaluate({"x": a + 1, "y": b + 1}))


def test_q_bichromate_reduces_at_q_one():
    g = Multigraph(3, ((1, 2), (2, 3)))
    one = LaurentPoly.constant(1)
    for y in (2, 3):
        lhs = q_bichromate(g, y).substitute("q", one).substitute("x", LaurentPoly.variable("b"))
        rhs = bichromate(g).substitute("a", LaurentPoly.constant(y))
        assert lhs == rhs


def test_q_bichromate_empty_subset_term():
    g = Multigraph(2, ())
    # with no edges only the empty subset survives: qint(y)^2
    assert q_bichromate(g, 3) == qint(3) * qint(3)


class _Diagram:
    def __init__(self, chords, groups):
        self.chords = chords
        self._groups = groups

    def group_of(self, position):
        return self._groups[position]


def test_mdef_chord_crossing_pair():
    # chords [0,2] and [1,3] overlap, so their values must differ; each
    # ordering of the two values loses one defect, leaving weight zero
    d = _Diagram(((0, 2), (1, 3)), (1, 2, 1, 2))
    t = LaurentPoly.variable("t")
    assert mdef_chord(d, 1) == LaurentPoly()
    assert mdef_chord(d, 2) == LaurentPoly.constant(2)
    assert mdef_chord(d, 3) == 2 + 2 * t + 2 * t ** 2


def test_mdef_chord_nested_pair():
    # nested chords [0,3] and [1,2]: only the start of the inner chord is
    # encircled, so the two orderings get different weights
    d = _Diagram(((0, 3), (1, 2)), (1, 2, 2, 1))
    t = LaurentPoly.variable("t")
    assert mdef_chord(d, 2) == 1 + t
    # the number of terms counts the ordered value pairs
    assert sum(mdef_chord(d, 3).terms.values()) == Fraction(6)
