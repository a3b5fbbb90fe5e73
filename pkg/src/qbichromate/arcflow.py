"""Arc graphs of knot diagrams, flows, and the colored Jones function.

The arc graph of an oriented knot diagram with r crossings has vertices
1..r, one per arc between consecutive underpasses, numbered along the
strand.  Vertex v carries the sign of the crossing where arc v ends.
Blue edges join each v to its successor v+1 (cyclically); the red edge
at v points to the arc passing over the crossing that ends v.  All flow
machinery lives on the reduced graph: vertex r and its incident edges
are deleted, so blue edges are (v, v+1) for v = 1..r-2 and red edges are
(u, over(u)) for those u < r with over(u) != r.

Edge weights in the variable t are t^(-sign(v)) on the blue edge leaving
v and 1 - t^(-sign(u)) on the red edge leaving u.  At each vertex the
entering edges are ordered, the blue edge first, then the red edges (by
source by default, or as decorated).  Integer rot values on the reduced
edges and a total rotation number rotK are input decorations that
calibrate the normalization; they enter only through delta exponents.

A flow assigns nonnegative integers to the reduced edges, conserved at
every vertex.  Three routes to the same n-colored invariant are
implemented: a closed per-flow weight (main route), a sum over flow
configurations with values (catmm route), and a sum over chord diagrams
weighted by defect-corrected coloring sums (ma2 route).  The n-cabled
digraph and its cycle families give a fourth description at n = 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product

from .graphcore import ParseError
from .polyq import LaurentPoly, qbinom


def _t_power(e):
    return LaurentPoly(("t",), {(e,): Fraction(1)})


def _one_minus_t_power(e):
    return LaurentPoly.constant(1) - _t_power(e)


class ArcGraph:
    """Arc graph data: signs, over-arc map, and decorations.

    signs[v-1] is the sign (+1 or -1) of the crossing ending arc v; over
    maps each vertex to the target of its red edge.  rot is a mapping
    from reduced edge keys to integers, red_orders optionally overrides
    the order of red edges entering a vertex, and rot_k is the total
    rotation number.  Edge keys are ("b", v) for the blue edge v -> v+1
    and ("r", u) for the red edge u -> over(u).
    """

    def __init__(self, signs, over, rot=None, red_orders=None, rot_k=None):
        signs = tuple(int(s) for s in signs)
        if not signs:
            raise ValueError("need at least one crossing")
        if any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be +1 or -1")
        r = len(signs)
        over = tuple(int(v) for v in over)
        if len(over) != r:
            raise ValueError("need one over-arc per crossing")
        for u, w in enumerate(over, start=1):
            if not 1 <= w <= r:
                raise ValueError("over-arc %d at vertex %d out of range 1..%d"
                                 % (w, u, r))
        self.signs = signs
        self.over = over
        self.rot_k = None if rot_k is None else int(rot_k)
        blues = tuple(("b", v) for v in range(1, r - 1))
        reds = tuple(("r", u) for u in range(1, r) if over[u - 1] != r)
        self.reduced_edges = blues + reds
        self.edge_index = {e: i for i, e in enumerate(self.reduced_edges)}
        self._rot = {}
        for key, value in dict(rot or {}).items():
            key = (key[0], int(key[1]))
            if key not in self.edge_index:
                raise ValueError("rot decoration on unknown edge %s %d"
                                 % key)
            self._rot[key] = int(value)
        red_in = {w: [] for w in range(1, r)}
        for e in reds:
            red_in[self.target(e)].append(e)
        if red_orders:
            for w, order in dict(red_orders).items():
                order = tuple((k, int(i)) for k, i in order)
                if any(k != "r" for k, _ in order):
                    raise ValueError("only red edges can be reordered; the "
                                     "blue edge always enters first")
                if sorted(order) != sorted(red_in.get(w, [])):
                    raise ValueError(
                        "entering order at vertex %d must list exactly its "
                        "red edges" % w)
                red_in[w] = list(order)
        self._red_in = {w: tuple(edges) for w, edges in red_in.items()}
        self._entering = {}
        for w in range(1, r):
            head = (("b", w - 1),) if ("b", w - 1) in self.edge_index else ()
            self._entering[w] = head + self._red_in[w]

    @property
    def r(self):
        return len(self.signs)

    @property
    def vertex_count(self):
        """Vertices of the reduced graph (1..r-1)."""
        return self.r - 1

    def sign(self, v):
        return self.signs[v - 1]

    def source(self, edge):
        return edge[1]

    def target(self, edge):
        kind, v = edge
        return v + 1 if kind == "b" else self.over[v - 1]

    def blue_out(self, v):
        return ("b", v) if ("b", v) in self.edge_index else None

    def blue_in(self, v):
        return ("b", v - 1) if ("b", v - 1) in self.edge_index else None

    def red_out(self, v):
        return ("r", v) if ("r", v) in self.edge_index else None

    def red_in(self, v):
        return self._red_in[v]

    def entering(self, v):
        """Edges entering v, the blue edge first, then ordered reds."""
        return self._entering[v]

    def rot(self, edge):
        if edge not in self._rot:
            raise ValueError("rot decoration missing for edge %s %d"
                             % edge)
        return self._rot[edge]

    def has_full_rot(self):
        return all(e in self._rot for e in self.reduced_edges)

    def flow_value(self, f, edge):
        return 0 if edge is None else f[self.edge_index[edge]]

    def vertex_flow(self, f, v):
        """Total flow through v (the common in/out value)."""
        return (self.flow_value(f, self.blue_out(v))
                + self.flow_value(f, self.red_out(v)))

    def is_conserved(self, f):
        for v in range(1, self.r):
            into = self.flow_value(f, self.blue_in(v)) \
                + sum(f[self.edge_index[e]] for e in self._red_in[v])
            if into != self.vertex_flow(f, v):
                return False
        return True

    def beta(self, edge):
        """Weight of a reduced edge."""
        kind, v = edge
        if kind == "b":
            return _t_power(-self.sign(v))
        return _one_minus_t_power(-self.sign(v))


def build_arcgraph(crossings, rot=None, red_orders=None, rot_k=None):
    """ArcGraph from (sign, over_arc) pairs plus decorations."""
    signs = tuple(s for s, _ in crossings)
    over = tuple(w for _, w in crossings)
    return ArcGraph(signs, over, rot=rot, red_orders=red_orders, rot_k=rot_k)


def parse_arc(text):
    """Parse the arc file format.

    Lines: "crossings r", "signs <+/- tokens>", "over <targets>", then
    optional "rot b <i> <int>" / "rot r <i> <int>", "order <v> r i1 r
    i2 ...", and "rotK <int>" lines.
    """
    r = None
    signs = None
    over = None
    rot = {}
    red_orders = {}
    rot_k = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        word = parts[0]
        if word == "crossings":
            if r is not None:
                raise ParseError("duplicate crossings line", lineno)
            try:
                r = int(parts[1]) if len(parts) == 2 else None
            except ValueError:
                r = None
            if r is None or r < 1:
                raise ParseError("expected 'crossings <positive count>'",
                                 lineno)
        elif word == "signs":
            if r is None:
                raise ParseError("the crossings line must come first", lineno)
            if signs is not None:
                raise ParseError("duplicate signs line", lineno)
            tokens = parts[1:]
            if len(tokens) != r or any(tk not in ("+", "-") for tk in tokens):
                raise ParseError("expected %d sign tokens (+ or -)" % r,
                                 lineno)
            signs = tuple(1 if tk == "+" else -1 for tk in tokens)
        elif word == "over":
            if r is None:
                raise ParseError("the crossings line must come first", lineno)
            if over is not None:
                raise ParseError("duplicate over line", lineno)
            try:
                over = tuple(int(p) for p in parts[1:])
            except ValueError:
                raise ParseError("over-arcs must be integers", lineno) from None
            if len(over) != r:
                raise ParseError("expected %d over-arcs" % r, lineno)
        elif word == "rot":
            if len(parts) != 4 or parts[1] not in ("b", "r"):
                raise ParseError("expected 'rot b|r <edge> <int>'", lineno)
            try:
                key = (parts[1], int(parts[2]))
                value = int(parts[3])
            except ValueError:
                raise ParseError("rot takes integer edge and value",
                                 lineno) from None
            if key in rot:
                raise ParseError("duplicate rot for edge %s %d" % key, lineno)
            rot[key] = value
        elif word == "order":
            try:
                v = int(parts[1])
            except (IndexError, ValueError):
                raise ParseError("expected 'order <vertex> r i1 r i2 ...'",
                                 lineno) from None
            rest = parts[2:]
            if len(rest) % 2 or any(rest[i] != "r" for i in range(0, len(rest), 2)):
                raise ParseError("entering order lists red edges as 'r <i>'",
                                 lineno)
            try:
                order = tuple(("r", int(rest[i + 1]))
                              for i in range(0, len(rest), 2))
            except ValueError:
                raise ParseError("edge numbers must be integers",
                                 lineno) from None
            if v in red_orders:
                raise ParseError("duplicate order line for vertex %d" % v,
                                 lineno)
            red_orders[v] = order
        elif word == "rotK":
            if rot_k is not None:
                raise ParseError("duplicate rotK line", lineno)
            try:
                rot_k = int(parts[1]) if len(parts) == 2 else None
            except ValueError:
                rot_k = None
            if rot_k is None:
                raise ParseError("expected 'rotK <int>'", lineno)
        else:
            raise ParseError("unknown directive %r" % word, lineno)
    if r is None:
        raise ParseError("missing crossings line")
    if signs is None:
        raise ParseError("missing signs line")
    if over is None:
        raise ParseError("missing over line")
    try:
        return ArcGraph(signs, over, rot=rot, red_orders=red_orders,
                        rot_k=rot_k)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def load_arc(path):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_arc(handle.read())


def enumerate_flows(g, n):
    """All conserved flows with at most n through every vertex.

    Flows are tuples aligned with g.reduced_edges.  The zero flow is
    always included; at n = 1 the nonzero flows are exactly the
    characteristic vectors of vertex-disjoint directed cycle unions.
    """
    if n < 1:
        raise ValueError("need n >= 1, got %d" % n)
    flows = []
    for f in product(range(n + 1), repeat=len(g.reduced_edges)):
        if not g.is_conserved(f):
            continue
        if any(g.vertex_flow(f, v) > n for v in range(1, g.r)):
            continue
        flows.append(f)
    return flows


def flow_weight_beta(g, f):
    """Product of edge weights raised to the flow values."""
    out = LaurentPoly.constant(1)
    for e in g.reduced_edges:
        value = g.flow_value(f, e)
        if value:
            out = out * g.beta(e) ** value
    return out


def _exc(g, f):
    total = 0
    for v in range(1, g.r):
        carried = g.flow_value(f, g.blue_out(v))
        red = g.red_out(v)
        if carried == 0 or red is None:
            continue
        ahead = 0
        for e in g.entering(g.target(red)):
            if e == red:
                break
            ahead += g.flow_value(f, e)
        total += g.sign(v) * carried * ahead
    return total


def delta_flow(g, f):
    """exc(f) minus the rot-weighted flow total; needs full rot data."""
    rot_total = sum(f[g.edge_index[e]] * g.rot(e) for e in g.reduced_edges)
    return _exc(g, f) - rot_total


def mult_t(g, f):
    """Product over vertices of the quantum binomial (f(v) choose blue
    out-flow) in base t^(-sign(v))."""
    out = LaurentPoly.constant(1)
    for v in range(1, g.r):
        total = g.vertex_flow(f, v)
        carried = g.flow_value(f, g.blue_out(v))
        base = _t_power(-g.sign(v))
        out = out * qbinom(total, carried, base)
    return out


def main_flow_weight(g, f, n):
    """Closed per-flow weight of the main route, without the t^delta(f)
    normalization (returned separately by delta_flow).

    mult_t times t^(-sign(v) n f(blue out)) over vertices, times, for
    every unit j = 0..f(e)-1 of every red edge e entering w, the factor
    1 - t^(-sign(source)(n - j - s)) where s sums the flow on edges
    entering w before e.  Zero whenever some vertex carries more than n.
    """
    if n < 1:
        raise ValueError("need n >= 1, got %d" % n)
    blue_exponent = 0
    for v in range(1, g.r):
        blue_exponent -= g.sign(v) * n * g.flow_value(f, g.blue_out(v))
    out = mult_t(g, f) * _t_power(blue_exponent)
    for e in g.reduced_edges:
        kind, u = e
        if kind != "r":
            continue
        value = f[g.edge_index[e]]
        if value == 0:
            continue
        ahead = 0
        for prior in g.entering(g.target(e)):
            if prior == e:
                break
            ahead += g.flow_value(f, prior)
        for j in range(value):
            out = out * _one_minus_t_power(-g.sign(u) * (n - j - ahead))
    return out


def red_copies(g, f):
    """Individual units of red flow, ordered by arrival.

    Copies are (edge, index) pairs listed by target vertex, then by the
    entering order of their edge there, then by index.
    """
    copies = []
    for w in range(1, g.r):
        for e in g.red_in(w):
            for idx in range(f[g.edge_index[e]]):
                copies.append((e, idx))
    return tuple(copies)


@dataclass(frozen=True)
class FlowStats:
    """Flow totals split by edge color and source sign (diagnostics)."""

    fb_plus: int
    fb_minus: int
    fr_plus: int
    fr_minus: int


def flow_stats(g, f):
    fb = {1: 0, -1: 0}
    fr = {1: 0, -1: 0}
    for e in g.reduced_edges:
        kind, u = e
        bucket = fb if kind == "b" else fr
        bucket[g.sign(u)] += f[g.edge_index[e]]
    return FlowStats(fb[1], fb[-1], fr[1], fr[-1])


def red_value_sums(g, f, values):
    """Sums of per-copy values split by source sign (diagnostics).

    values is aligned with red_copies(g, f); returns (plus, minus).
    """
    copies = red_copies(g, f)
    plus = minus = 0
    for (e, _), value in zip(copies, values):
        if g.sign(e[1]) == 1:
            plus += value
        else:
            minus += value
    return plus, minus


def flow_configurations(g, f):
    """All carried-set sequences of a flow.

    A configuration picks, for each blue edge i -> i+1, which f(blue)
    red copies ride it: C_i is a subset of C_{i-1} plus the copies
    arriving at i.  The zero flow has exactly one, all-empty,
    configuration.
    """
    arrivals = {w: [] for w in range(1, g.r)}
    for copy in red_copies(g, f):
        arrivals[g.target(copy[0])].append(copy)
    partial = [((), frozenset())]
    for i in range(1, g.r - 1):
        size = g.flow_value(f, ("b", i))
        grown = []
        for config, last in partial:
            pool = sorted(last | set(arrivals[i]))
            for choice in combinations(pool, size):
                chosen = frozenset(choice)
                grown.append((config + (chosen,), chosen))
        partial = grown
    return [config for config, _ in partial]


def _drop(g, config, copy, arrival):
    """Smallest index l >= arrival with the copy absent from C_l.

    Returns r-1 when the copy is carried through the whole sequence (or
    arrives at the last vertex, where there is nothing to ride).
    """
    for l in range(arrival, g.r - 1):
        if copy not in config[l - 1]:
            return l
    return g.r - 1


def admissible_pairs(g, f, n):
    """Configuration/value pairs passing the equal-value drop test.

    Values live in 0..n-1, one per red copy.  For two copies with equal
    values arriving at i <= j, the earlier one must be dropped before j;
    equal values arriving at the same vertex are never admissible.
    """
    if n < 1:
        raise ValueError("need n >= 1, got %d" % n)
    copies = red_copies(g, f)
    arrival = {c: g.target(c[0]) for c in copies}
    pairs = []
    for config in flow_configurations(g, f):
        drop = {c: _drop(g, config, c, arrival[c]) for c in copies}
        for values in product(range(n), repeat=len(copies)):
            ok = True
            for a, b in combinations(range(len(copies)), 2):
                if values[a] != values[b]:
                    continue
                ca, cb = copies[a], copies[b]
                if arrival[ca] == arrival[cb]:
                    ok = False
                    break
                inner, outer = (ca, cb) if arrival[ca] < arrival[cb] \
                    else (cb, ca)
                if drop[inner] >= arrival[outer]:
                    ok = False
                    break
            if ok:
                pairs.append((config, values))
    return pairs


def catmm_flow_sum(g, f, n):
    """Defect-weighted value sum over admissible pairs.

    Each copy contributes t^(value - def1 - def2): def1 counts
    smaller-valued copies it meets on arrival (riding in on the blue
    edge, or arriving earlier at the same vertex), def2 counts
    smaller-valued copies still riding when it is dropped.
    """
    copies = red_copies(g, f)
    arrival = {c: g.target(c[0]) for c in copies}
    same_arrival_earlier = {}
    for pos, c in enumerate(copies):
        same_arrival_earlier[c] = [c2 for c2 in copies[:pos]
                                   if arrival[c2] == arrival[c]]
    terms = {}
    grouped = {}
    for config, values in admissible_pairs(g, f, n):
        if config not in grouped:
            grouped[config] = {c: _drop(g, config, c, arrival[c])
                               for c in copies}
        drop = grouped[config]
        value_of = dict(zip(copies, values))
        exponent = 0
        for c in copies:
            rode_in = config[arrival[c] - 2] if arrival[c] >= 2 else frozenset()
            def1 = sum(1 for c2 in rode_in if value_of[c2] < value_of[c])
            def1 += sum(1 for c2 in same_arrival_earlier[c]
                        if value_of[c2] < value_of[c])
            def2 = 0
            if drop[c] <= g.r - 2:
                def2 = sum(1 for c2 in config[drop[c] - 1]
                           if value_of[c2] < value_of[c])
            exponent += value_of[c] - def1 - def2
        terms[(exponent,)] = terms.get((exponent,), 0) + 1
    return LaurentPoly(("t",), terms)


@dataclass(frozen=True)
class ChordDiagram:
    """Chords over a line of positions grouped per vertex.

    groups[v-1] = (starts, ends) gives the layout: positions run through
    vertex 1's starts, then its ends, then vertex 2's, and so on.
    Chords are (start, end) position pairs, listed by start.
    """

    chords: tuple
    groups: tuple

    def __post_init__(self):
        seen = set()
        for s, e in self.chords:
            if s >= e:
                raise ValueError("chord (%d, %d) must run forward" % (s, e))
            seen.update((s, e))
        if len(seen) != 2 * len(self.chords):
            raise ValueError("chord endpoints must be distinct")
        if list(self.chords) != sorted(self.chords):
            raise ValueError("chords must be listed by starting position")

    def group_of(self, position):
        base = 0
        for v, (starts, ends) in enumerate(self.groups, start=1):
            base += starts + ends
            if position < base:
                return v
        raise ValueError("position %d beyond the layout" % position)


def chord_diagrams(g, f):
    """Distinct diagrams of a flow with their multiplicities.

    Every configuration lays its copies out as intervals: a copy starts
    at its arrival vertex and ends where it is dropped (or at the last
    vertex).  Start positions follow the fixed copy order; end positions
    within a vertex are assigned in every possible order.  Returns
    (diagram, deg) pairs where deg counts the distinct diagrams of that
    configuration, so deg is what the assignment enumeration actually
    produced, not a formula.
    """
    copies = red_copies(g, f)
    arrival = {c: g.target(c[0]) for c in copies}
    results = []
    for config in flow_configurations(g, f):
        drop = {c: _drop(g, config, c, arrival[c]) for c in copies}
        starts_at = {v: [c for c in copies if arrival[c] == v]
                     for v in range(1, g.r)}
        ends_at = {v: [c for c in copies if drop[c] == v]
                   for v in range(1, g.r)}
        start_pos = {}
        end_slots = {}
        groups = []
        position = 0
        for v in range(1, g.r):
            for c in starts_at[v]:
                start_pos[c] = position
                position += 1
            end_slots[v] = list(range(position, position + len(ends_at[v])))
            position += len(ends_at[v])
            groups.append((len(starts_at[v]), len(ends_at[v])))
        diagrams = set()
        orderings = [permutations(ends_at[v]) for v in range(1, g.r)]
        for combo in product(*orderings):
            end_pos = {}
            for v, perm in zip(range(1, g.r), combo):
                for slot, c in zip(end_slots[v], perm):
                    end_pos[c] = slot
            chords = tuple(sorted((start_pos[c], end_pos[c]) for c in copies))
            diagrams.add(chords)
        deg = len(diagrams)
        for chords in sorted(diagrams):
            results.append((ChordDiagram(chords, tuple(groups)), deg))
    return results


def ma2_flow_sum(g, f, n):
    """Average of defect-corrected coloring sums over the flow's
    diagrams: sum of mdef(diagram, n) / deg over chord_diagrams."""
    from .qchrom import mdef_chord

    if n < 1:
        raise ValueError("need n >= 1, got %d" % n)
    total = LaurentPoly()
    for diagram, deg in chord_diagrams(g, f):
        total = total + mdef_chord(diagram, n) * Fraction(1, deg)
    return total


def z_nf(g, f, n):
    """Per-flow prefactor of the chord-diagram route.

    t^delta(f) times t^(n (blue flow from - sources minus from +)),
    times (1-t) per red unit from a - source and (1-t^-1) per red unit
    from a + source, times t^-(n-1-|P|) per + red copy (P the flow
    entering ahead of it), times t^(red out times blue out) at every
    vertex.
    """
    if n < 1:
        raise ValueError("need n >= 1, got %d" % n)
    stats = flow_stats(g, f)
    exponent = delta_flow(g, f) + n * (stats.fb_minus - stats.fb_plus)
    out = (_one_minus_t_power(1) ** stats.fr_minus
           * _one_minus_t_power(-1) ** stats.fr_plus)
    for e, idx in red_copies(g, f):
        if g.sign(e[1]) != 1:
            continue
        ahead = 0
        for prior in g.entering(g.target(e)):
            if prior == e:
                break
            ahead += g.flow_value(f, prior)
        exponent -= n - 1 - (ahead + idx)
    for v in range(1, g.r):
        exponent += (g.flow_value(f, g.red_out(v))
                     * g.flow_value(f, g.blue_out(v)))
    return out * _t_power(exponent)


@dataclass(frozen=True)
class WeightedDigraph:
    """Vertices plus (source, target, weight, label) edges."""

    vertices: tuple
    edges: tuple


def cabled_graph(g, n):
    """The n-stranded cable of the reduced graph.

    Vertices (v, j) for j = 1..n; blue edges join (v, j) to (v+1, j)
    with weight t^(-sign(v) n); each red edge u -> w fans out to all
    strand pairs, entering strand j with weight t^(j-1) (1-t) from a
    negative source and t^-(n-j) (1-t^-1) from a positive one.  Labels
    name the underlying reduced edge; at n = 1 the weights are those of
    the reduced graph itself.
    """
    if n < 1:
        raise ValueError("need n >= 1, got %d" % n)
    vertices = tuple((v, j) for v in range(1, g.r) for j in range(1, n + 1))
    edges = []
    for e in g.reduced_edges:
        kind, u = e
        if kind == "b":
            weight = _t_power(-g.sign(u) * n)
            for j in range(1, n + 1):
                edges.append(((u, j), (u + 1, j), weight, e))
        else:
            w = g.target(e)
            for j in range(1, n + 1):
                if g.sign(u) == 1:
                    weight = _t_power(-(n - j)) * _one_minus_t_power(-1)
                else:
                    weight = _t_power(j - 1) * _one_minus_t_power(1)
                for i in range(1, n + 1):
                    edges.append(((u, i), (w, j), weight, e))
    return WeightedDigraph(vertices, tuple(edges))


def cycle_families(h):
    """Edge-index sets whose components are vertex-disjoint directed
    cycles, the empty family included."""
    rank = {v: i for i, v in enumerate(sorted(h.vertices))}
    out_edges = {v: [] for v in h.vertices}
    for idx, edge in enumerate(h.edges):
        out_edges[edge[0]].append(idx)
    cycles = []

    def explore(start, v, path_vertices, path_edges):
        for idx in out_edges[v]:
            w = h.edges[idx][1]
            if rank[w] < rank[start]:
                continue
            if w == start:
                cycles.append((frozenset(path_edges + [idx]),
                               frozenset(path_vertices)))
            elif w not in path_vertices:
                explore(start, w, path_vertices | {w}, path_edges + [idx])

    for start in sorted(h.vertices):
        explore(start, start, {start}, [])
    families = []

    def assemble(begin, used, acc):
        families.append(acc)
        for i in range(begin, len(cycles)):
            edge_set, vertex_set = cycles[i]
            if used & vertex_set:
                continue
            assemble(i + 1, used | vertex_set, acc | edge_set)

    assemble(0, frozenset(), frozenset())
    return families


def frst_fiber_sum(g, f, n):
    """Weight of the cabled cycle families projecting onto the flow.

    Summing each family's edge-weight product over every family of
    cabled_graph(g, n) whose per-base-edge counts equal f.  The zero
    flow's fiber is the empty family alone, weight 1; at n = 1 each 0/1
    cycle flow lifts uniquely and the sum is flow_weight_beta.
    """
    if n < 1:
        raise ValueError("need n >= 1, got %d" % n)
    h = cabled_graph(g, n)
    total = LaurentPoly()
    for family in cycle_families(h):
        counts = [0] * len(g.reduced_edges)
        for idx in family:
            counts[g.edge_index[h.edges[idx][3]]] += 1
        if tuple(counts) != tuple(f):
            continue
        weight = LaurentPoly.constant(1)
        for idx in family:
            weight = weight * h.edges[idx][2]
        total = total + weight
    return total


def _delta_kn(g, n):
    if g.rot_k is None:
        raise ValueError("rotK decoration required")
    numerator = n * n * sum(g.signs) + n * g.rot_k
    if numerator % 2:
        raise ValueError(
            "signs and rotK give the half-integer normalization exponent "
            "%d/2" % numerator)
    return numerator // 2


def arcjones(g):
    """The n = 1 invariant: t^delta(K,1) times the sum over cycle flows
    of t^delta(f) beta(f)."""
    total = LaurentPoly()
    for f in enumerate_flows(g, 1):
        total = total + _t_power(delta_flow(g, f)) * flow_weight_beta(g, f)
    return _t_power(_delta_kn(g, 1)) * total


def colored_jones(g, n, route="ma2"):
    """The n-colored invariant of the arc graph, by any of three routes.

    t^delta(K,n) times the flow total, where delta(K,n) is half of
    n^2 (sign sum) + n rotK.  Routes: "main" sums t^delta(f) times
    main_flow_weight; "catmm" sums z_nf times catmm_flow_sum; "ma2"
    sums z_nf times ma2_flow_sum.  All three agree.
    """
    if n < 1:
        raise ValueError("need n >= 1, got %d" % n)
    if route not in ("main", "catmm", "ma2"):
        raise ValueError("route must be 'main', 'catmm' or 'ma2', got %r"
                         % route)
    prefactor = _t_power(_delta_kn(g, n))
    total = LaurentPoly()
    for f in enumerate_flows(g, n):
        if route == "main":
            term = _t_power(delta_flow(g, f)) * main_flow_weight(g, f, n)
        elif route == "catmm":
            term = z_nf(g, f, n) * catmm_flow_sum(g, f, n)
        else:
            term = z_nf(g, f, n) * ma2_flow_sum(g, f, n)
        total = total + term
    return prefactor * total
