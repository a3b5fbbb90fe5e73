"""Potts and Ising partition functions with exact rational couplings.

Couplings never store exponentials.  The Potts form keeps v_e (the
expanded weight e^J - 1) as a rational; the Ising form keeps the
hyperbolic pair (c_e, h_e) = (cosh J_e, sinh J_e) as rationals satisfying
c^2 - h^2 = 1, so e^(+-J_e) = c_e +- h_e is exact.  Every identity in the
module is then a polynomial identity over the rationals.

The q-weighted sums attach q^(sum of spin values) to each state.  For the
k-state model the spin values run over 0..k-1 (see qpotts_pair); for the
Ising model they run over -1, +1.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .graphcore import ParseError
from .polyq import LaurentPoly, qint


@dataclass(frozen=True)
class Couplings:
    """Per-edge couplings, either kind "v" (one rational per edge) or
    kind "ch" (a (cosh, sinh) rational pair per edge)."""

    kind: str
    values: tuple

    def __post_init__(self):
        if self.kind == "v":
            for v in self.values:
                if not isinstance(v, Fraction):
                    raise ValueError("v couplings must be Fractions")
        elif self.kind == "ch":
            for c, h in self.values:
                if not (isinstance(c, Fraction) and isinstance(h, Fraction)):
                    raise ValueError("ch couplings must be Fraction pairs")
                if c * c - h * h != 1 or c <= 0:
                    raise ValueError("invalid hyperbolic pair (%s, %s): "
                                     "need c^2 - h^2 = 1 and c > 0" % (c, h))
        else:
            raise ValueError("coupling kind must be 'v' or 'ch', got %r" % self.kind)

    @classmethod
    def uniform_v(cls, edge_count, v):
        return cls("v", (Fraction(v),) * edge_count)

    @classmethod
    def uniform_ch(cls, edge_count, c, h):
        return cls("ch", ((Fraction(c), Fraction(h)),) * edge_count)

    def check_edge_count(self, g):
        if len(self.values) != g.edge_count:
            raise ValueError("got %d couplings for %d edges"
                             % (len(self.values), g.edge_count))


def parse_couplings(text):
    """Parse the coupling file format: one line per edge id, either
    "v <rational>" or "ch <rational> <rational>"."""
    kind = None
    values = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] not in ("v", "ch"):
            raise ParseError("expected 'v <rational>' or 'ch <rational> <rational>'",
                             lineno)
        if kind is None:
            kind = parts[0]
        elif parts[0] != kind:
            raise ParseError("mixed coupling kinds ('%s' after '%s')"
                             % (parts[0], kind), lineno)
        try:
            rationals = [Fraction(tok) for tok in parts[1:]]
        except (ValueError, ZeroDivisionError):
            raise ParseError("bad rational in %r" % line, lineno) from None
        if kind == "v":
            if len(rationals) != 1:
                raise ParseError("'v' takes exactly one rational", lineno)
            values.append(rationals[0])
        else:
            if len(rationals) != 2:
                raise ParseError("'ch' takes exactly two rationals", lineno)
            values.append((rationals[0], rationals[1]))
    if kind is None:
        raise ParseError("empty coupling file")
    try:
        return Couplings(kind, tuple(values))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def load_couplings(path):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_couplings(handle.read())


def _require_kind(w, kind, what):
    if w.kind != kind:
        raise ValueError("%s needs '%s' couplings, got '%s'" % (what, kind, w.kind))


def potts_direct(g, k, w):
    """State sum over s: V -> {1..k} of the product over edges of
    (1 + v_e) when the endpoints agree and 1 otherwise."""
    if k < 1:
        raise ValueError("need k >= 1")
    _require_kind(w, "v", "potts_direct")
    w.check_edge_count(g)
    total = Fraction(0)
    for s in product(range(1, k + 1), repeat=g.vertex_count):
        weight = Fraction(1)
        for i, (u, v) in enumerate(g.edges):
            if s[u - 1] == s[v - 1]:
                weight *= 1 + w.values[i]
        total += weight
    return total


def potts_fk(g, k, w):
    """Random-cluster form: sum over edge subsets A of k^c(A) times the
    product of v_e over A."""
    if k < 1:
        raise ValueError("need k >= 1")
    _require_kind(w, "v", "potts_fk")
    w.check_edge_count(g)
    total = Fraction(0)
    for mask in g.subsets():
        term = Fraction(k) ** g.component_count(mask)
        for i in range(g.edge_count):
            if mask >> i & 1:
                term *= w.values[i]
        total += term
    return total


def qpotts_pair(g, k, w):
    """The q-weighted Potts identity, both sides computed independently.

    First component (subset form): sum over A of the product over
    components W of the quantum integer of k in base q^|W|, times the
    product of v_e over A.

    Second component (state form): sum over s: V -> {0..k-1} of
    q^(sum s(v)) times the product over edges of (1 + v_e) on agreement.
    The spin values 0..k-1 make the two sides exactly equal; with values
    1..k the state form would pick up an extra factor of q per vertex.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    _require_kind(w, "v", "qpotts_pair")
    w.check_edge_count(g)
    q = LaurentPoly.variable("q")
    subset_form = LaurentPoly()
    for mask in g.subsets():
        term = LaurentPoly.constant(1)
        for part in g.components(mask):
            term = term * qint(k, q ** len(part))
        coeff = Fraction(1)
        for i in range(g.edge_count):
            if mask >> i & 1:
                coeff *= w.values[i]
        subset_form = subset_form + coeff * term
    state_terms = {}
    for s in product(range(k), repeat=g.vertex_count):
        weight = Fraction(1)
        for i, (u, v) in enumerate(g.edges):
            if s[u - 1] == s[v - 1]:
                weight *= 1 + w.values[i]
        e = sum(s)
        state_terms[(e,)] = state_terms.get((e,), Fraction(0)) + weight
    state_form = LaurentPoly(("q",), state_terms)
    return subset_form, state_form


def ising_direct(g, w):
    """Sum over s: V -> {-1,+1} of q^(sum s(v)) times the product over
    edges of (c_e + s(i)s(j) h_e)."""
    _require_kind(w, "ch", "ising_direct")
    w.check_edge_count(g)
    terms = {}
    for s in product((-1, 1), repeat=g.vertex_count):
        weight = Fraction(1)
        for i, (u, v) in enumerate(g.edges):
            c, h = w.values[i]
            weight *= c + s[u - 1] * s[v - 1] * h
        e = sum(s)
        terms[(e,)] = terms.get((e,), Fraction(0)) + weight
    return LaurentPoly(("q",), terms)


def ising_pair(g, w):
    """The q-weighted Ising sum and its Potts-route evaluation.

    First component: ising_direct.  Second: map spins -1,+1 to 0,1, which
    turns each edge factor into e^(-J_e) (1 + v'_e on agreement) with
    v'_e = e^(2 J_e) - 1 = (c_e + h_e)^2 - 1, and the q-weight into
    q^(-|V|) times (q^2)^(sum of 0/1 spins); the 0/1 state sum is then the
    subset form of the q-weighted Potts identity at k=2 with q replaced
    by q^2.
    """
    _require_kind(w, "ch", "ising_pair")
    w.check_edge_count(g)
    direct = ising_direct(g, w)
    vprime = Couplings("v", tuple((c + h) ** 2 - 1 for c, h in w.values))
    subset_form, _ = qpotts_pair(g, 2, vprime)
    q = LaurentPoly.variable("q")
    prefactor = Fraction(1)
    for c, h in w.values:
        prefactor *= c - h
    via_potts = prefactor * q ** (-g.vertex_count) * subset_form.substitute("q", q ** 2)
    return direct, via_potts


def vdw_pair(g, w):
    """The q-weighted Ising sum against its high-temperature expansion.

    Second component: the product of c_e over all edges, times the sum
    over edge subsets A of the product of h_e/c_e over A, times
    (q - q^-1)^o(A) (q + q^-1)^(|V| - o(A)), where o(A) counts odd-degree
    vertices of (V, A).
    """
    _require_kind(w, "ch", "vdw_pair")
    w.check_edge_count(g)
    direct = ising_direct(g, w)
    q = LaurentPoly.variable("q")
    minus = q - q ** -1
    plus = q + q ** -1
    expansion = LaurentPoly()
    for mask in g.subsets():
        coeff = Fraction(1)
        for i in range(g.edge_count):
            if mask >> i & 1:
                c, h = w.values[i]
                coeff *= h / c
        odd = g.odd_degree_count(mask)
        expansion = expansion + coeff * minus ** odd * plus ** (g.vertex_count - odd)
    for c, h in w.values:
        expansion = expansion * c
    return direct, expansion


def lemma_w_eval(g):
    """Spin sum of q^(sum s(v)) times the product of s(i)s(j) over ALL
    edges, against the closed form
    (q - q^-1)^o(E) (q + q^-1)^(|V| - o(E))."""
    terms = {}
    for s in product((-1, 1), repeat=g.vertex_count):
        weight = 1
        for u, v in g.edges:
            weight *= s[u - 1] * s[v - 1]
        e = sum(s)
        terms[(e,)] = terms.get((e,), 0) + weight
    lhs = LaurentPoly(("q",), {e: Fraction(c) for e, c in terms.items()})
    q = LaurentPoly.variable("q")
    full = (1 << g.edge_count) - 1
    odd = g.odd_degree_count(full)
    rhs = (q - q ** -1) ** odd * (q + q ** -1) ** (g.vertex_count - odd)
    return lhs, rhs
