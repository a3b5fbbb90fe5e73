"""Color-weighted graph polynomials via enumeration and subset expansion.

The central object is the q-weighted count of proper colorings with colors
0..n-1, where a coloring contributes q raised to the sum of its colors.
The module computes it two independent ways (direct enumeration and the
inclusion-exclusion subset expansion over edge subsets), provides the
closed form for complete graphs, and carries the related subset-expansion
polynomials: the bichromate, the Whitney rank and Tutte polynomials, and
the q-bichromate.

It also hosts the defect-corrected coloring sum over chord-diagram
intersection graphs (mdef_chord); the diagrams themselves are built in the
arcflow module, which in turn imports this one.
"""

from fractions import Fraction
from itertools import product
from math import factorial

from .polyq import LaurentPoly, qbinom, qint


def mq_direct(g, n):
    """Sum q^(sum of colors) over proper colorings with colors 0..n-1."""
    if n < 1:
        raise ValueError("need n >= 1, got %d" % n)
    terms = {}
    for coloring in product(range(n), repeat=g.vertex_count):
        ok = True
        for u, v in g.edges:
            if coloring[u - 1] == coloring[v - 1]:
                ok = False
                break
        if ok:
            e = sum(coloring)
            terms[(e,)] = terms.get((e,), 0) + 1
    return LaurentPoly(("q",), {e: Fraction(c) for e, c in terms.items()})


def mq_subset(g, n):
    """The same sum by inclusion-exclusion over edge subsets.

    Each subset A contributes (-1)^|A| times the product over components W
    of (V, A) of the quantum integer of n in base q^|W|.
    """
    if n < 1:
        raise ValueError("need n >= 1, got %d" % n)
    q = LaurentPoly.variable("q")
    out = LaurentPoly()
    for mask in g.subsets():
        sign = -1 if g.subset_size(mask) % 2 else 1
        term = LaurentPoly.constant(sign)
        for part in g.components(mask):
            term = term * qint(n, q ** len(part))
        out = out + term
    return out


def mq_complete(k, n):
    """Closed form for the complete graph on k vertices.

    Equals k! times the Gaussian binomial [n choose k] times q^(k(k-1)/2);
    zero when n < k (no proper coloring exists).
    """
    if k < 1 or n < 1:
        raise ValueError("need k, n >= 1")
    if n < k:
        return LaurentPoly()
    q = LaurentPoly.variable("q")
    return factorial(k) * qbinom(n, k, "q") * q ** (k * (k - 1) // 2)


def bichromate(g):
    """The subset-expansion polynomial sum over A of a^c(A) * b^|A|."""
    terms = {}
    for mask in g.subsets():
        key = (g.component_count(mask), g.subset_size(mask))
        terms[key] = terms.get(key, 0) + 1
    return LaurentPoly(("a", "b"), {k: Fraction(c) for k, c in terms.items()})


def tutte(g, form="tutte"):
    """Rank-generating subset expansions, with r(A) = |V| - c(A).

    form="tutte": sum over A of (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A)).
    form="whitney-rank": sum over A of u^(r(E)-r(A)) v^(|A|-r(A)).
    The Tutte form equals the Whitney-rank form with u, v replaced by
    x-1, y-1.
    """
    if form not in ("tutte", "whitney-rank"):
        raise ValueError("form must be 'tutte' or 'whitney-rank', got %r" % form)
    rank_full = g.vertex_count - g.component_count(0 if not g.edges else
                                                   (1 << len(g.edges)) - 1)
    if form == "tutte":
        first = LaurentPoly.variable("x") - 1
        second = LaurentPoly.variable("y") - 1
    else:
        first = LaurentPoly.variable("u")
        second = LaurentPoly.variable("v")
    out = LaurentPoly()
    for mask in g.subsets():
        rank = g.vertex_count - g.component_count(mask)
        out = out + first ** (rank_full - rank) * second ** (g.subset_size(mask) - rank)
    return out


def q_bichromate(g, y):
    """Subset expansion x^|A| times the product over components W of
    the quantum integer of y in base q^|W|.

    y must be a positive integer so every component factor is a polynomial.
    At q=1 this reduces to the bichromate with a specialized to y and b to x.
    """
    if y < 1:
        raise ValueError("need y >= 1, got %d" % y)
    q = LaurentPoly.variable("q")
    x = LaurentPoly.variable("x")
    out = LaurentPoly()
    for mask in g.subsets():
        term = x ** g.subset_size(mask)
        for part in g.components(mask):
            term = term * qint(y, q ** len(part))
        out = out + term
    return out


def mdef_chord(d, n):
    """Defect-corrected coloring sum over a chord diagram's intersection graph.

    Chords are intervals on a line of positions grouped by vertex; two
    chords are adjacent when their intervals are not disjoint (they cross
    or one nests inside the other).  A proper coloring assigns values
    0..n-1 so adjacent chords differ.  Each chord c contributes
    t^(v_c - def1 - def2), where

      def1(c) counts chords strictly containing c's start position that
      carry a smaller value, and
      def2(c) counts chords strictly containing c's end position, whose
      own end lies in a strictly later group, and that carry a smaller
      value.

    A diagram with pairwise disjoint chords therefore yields the plain
    product of quantum integers of n in base t.
    """
    if n < 1:
        raise ValueError("need n >= 1, got %d" % n)
    chords = d.chords
    count = len(chords)
    adjacent = [[False] * count for _ in range(count)]
    for i in range(count):
        si, ei = chords[i]
        for j in range(i + 1, count):
            sj, ej = chords[j]
            lo, hi = (i, j) if si < sj else (j, i)
            # not disjoint: the later start falls before the earlier end
            if chords[hi][0] < chords[lo][1]:
                adjacent[i][j] = adjacent[j][i] = True
    start_encirclers = []
    end_encirclers = []
    for i in range(count):
        si, ei = chords[i]
        end_group = d.group_of(ei)
        starts = []
        ends = []
        for j in range(count):
            if j == i:
                continue
            sj, ej = chords[j]
            if sj < si < ej:
                starts.append(j)
            if sj < ei < ej and d.group_of(ej) > end_group:
                ends.append(j)
        start_encirclers.append(starts)
        end_encirclers.append(ends)
    terms = {}
    for values in product(range(n), repeat=count):
        ok = True
        for i in range(count):
            for j in range(i + 1, count):
                if adjacent[i][j] and values[i] == values[j]:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        exponent = 0
        for i in range(count):
            def1 = sum(1 for j in start_encirclers[i] if values[j] < values[i])
            def2 = sum(1 for j in end_encirclers[i] if values[j] < values[i])
            exponent += values[i] - def1 - def2
        terms[(exponent,)] = terms.get((exponent,), 0) + 1
    return LaurentPoly(("t",), {e: Fraction(c) for e, c in terms.items()})
