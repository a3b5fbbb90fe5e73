"""Oriented knot diagrams: bracket state sum, Jones polynomial, and the
checkerboard (median) graph.

A diagram is a list of crossings.  Each crossing records its sign and the
four arc labels around it in counterclockwise planar order starting from
the incoming under-strand (slot 0).  The under-strand leaves at slot 2;
the over-strand enters at slot 1 for a positive crossing and at slot 3
for a negative one.

Smoothings are slot pairings: the A-smoothing connects slots 0-3 and 1-2
(merging the corners between slots 0,1 and 2,3), the B-smoothing connects
slots 0-1 and 2-3.  Loops of a fully smoothed diagram are counted by
following the port pairings, with no geometry involved.

Faces are traced from the rotation system the slot order defines, so the
combinatorial planar structure (faces, checkerboard shading, median
graph) comes from the crossing list alone.  The outer face is an explicit
input: the caller picks which face is declared outside, and that face's
color class becomes white.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .graphcore import Multigraph, ParseError
from .polyq import LaurentPoly


@dataclass(frozen=True)
class Crossing:
    sign: int
    slots: tuple

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("crossing sign must be +1 or -1")
        if len(self.slots) != 4:
            raise ValueError("a crossing has exactly four slots")

    @property
    def over_in(self):
        return 1 if self.sign == 1 else 3

    @property
    def over_out(self):
        return 3 if self.sign == 1 else 1


@dataclass(frozen=True)
class KnotPD:
    crossings: tuple

    @property
    def r(self):
        return len(self.crossings)

    @property
    def writhe(self):
        return sum(c.sign for c in self.crossings)


def parse_pd(text):
    """Parse the PD file format: one line per crossing, "X<sign> a b c d"."""
    crossings = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] not in ("X+", "X-"):
            raise ParseError("expected 'X+' or 'X-', got %r" % parts[0], lineno)
        if len(parts) != 5:
            raise ParseError("expected four arc labels", lineno)
        try:
            slots = tuple(int(p) for p in parts[1:])
        except ValueError:
            raise ParseError("arc labels must be integers", lineno) from None
        sign = 1 if parts[0] == "X+" else -1
        crossings.append(Crossing(sign, slots))
    if not crossings:
        raise ParseError("empty PD file")
    k = KnotPD(tuple(crossings))
    try:
        _validate(k)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return k


def load_pd(path):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_pd(handle.read())


def _port_maps(k):
    """Return (entry port, exit port) maps per arc label.

    A port is a (crossing index, slot) pair.  Entry ports are slot 0 and
    the over-in slot; exit ports are slot 2 and the over-out slot.
    """
    arc_in = {}
    arc_out = {}
    for ci, c in enumerate(k.crossings):
        for slot, label in enumerate(c.slots):
            if slot in (0, c.over_in):
                if label in arc_in:
                    raise ValueError("arc %d enters two crossings" % label)
                arc_in[label] = (ci, slot)
            else:
                if label in arc_out:
                    raise ValueError("arc %d leaves two crossings" % label)
                arc_out[label] = (ci, slot)
    return arc_in, arc_out


def _validate(k):
    labels = {}
    for c in k.crossings:
        for label in c.slots:
            labels[label] = labels.get(label, 0) + 1
    expected = set(range(1, 2 * k.r + 1))
    if set(labels) != expected or any(n != 2 for n in labels.values()):
        raise ValueError("arc labels must be 1..%d, each exactly twice" % (2 * k.r))
    arc_in, arc_out = _port_maps(k)
    if set(arc_in) != expected or set(arc_out) != expected:
        raise ValueError("each arc label must occur once as an entry and "
                         "once as an exit")
    # The strand must close into a single component.
    seen = set()
    label = 1
    while label not in seen:
        seen.add(label)
        ci, slot = arc_in[label]
        c = k.crossings[ci]
        label = c.slots[2] if slot == 0 else c.slots[c.over_out]
    if len(seen) != 2 * k.r:
        raise ValueError("strand closes after %d of %d arcs; "
                         "diagram is not a single knot" % (len(seen), 2 * k.r))


@dataclass(frozen=True)
class Face:
    id: int
    corners: tuple
    arcs: tuple


class _Embedding:
    """Traced faces plus the lookup tables the shading machinery needs."""

    def __init__(self, k):
        arc_in, arc_out = _port_maps(k)
        tail_to_head = {}
        tail_label = {}
        tail_forward = {}
        for label in arc_out:
            out_port = arc_out[label]
            in_port = arc_in[label]
            tail_to_head[out_port] = in_port
            tail_label[out_port] = label
            tail_forward[out_port] = True
            tail_to_head[in_port] = out_port
            tail_label[in_port] = label
            tail_forward[in_port] = False
        self.arc_in = arc_in
        self.arc_out = arc_out
        self.faces = []
        self.face_of_corner = {}
        self.face_of_tail = {}
        visited = set()
        for start in sorted(tail_to_head):
            if start in visited:
                continue
            fid = len(self.faces)
            corners = []
            arcs = []
            port = start
            while True:
                visited.add(port)
                self.face_of_tail[port] = fid
                arcs.append((tail_label[port], tail_forward[port]))
                ci, slot = tail_to_head[port]
                corners.append((ci, slot))
                self.face_of_corner[(ci, slot)] = fid
                port = (ci, (slot + 1) % 4)
                if port == start:
                    break
            self.faces.append(Face(fid, tuple(corners), tuple(arcs)))
        if len(self.faces) != k.r + 2:
            raise AssertionError("traced %d faces, expected %d"
                                 % (len(self.faces), k.r + 2))

    def colors(self, outer_face):
        """Checkerboard 2-coloring; the outer face's class is white (0)."""
        if not 0 <= outer_face < len(self.faces):
            raise ValueError("outer face id %d out of range 0..%d"
                             % (outer_face, len(self.faces) - 1))
        adjacency = {f.id: set() for f in self.faces}
        for label, out_port in self.arc_out.items():
            f1 = self.face_of_tail[out_port]
            f2 = self.face_of_tail[self.arc_in[label]]
            adjacency[f1].add(f2)
            adjacency[f2].add(f1)
        colors = {outer_face: 0}
        queue = [outer_face]
        while queue:
            fid = queue.pop()
            for other in adjacency[fid]:
                if other not in colors:
                    colors[other] = 1 - colors[fid]
                    queue.append(other)
                elif colors[other] == colors[fid]:
                    raise AssertionError("faces are not checkerboard colorable")
        if len(colors) != len(self.faces):
            raise AssertionError("face adjacency is not connected")
        return colors


def faces(k):
    """Trace the faces of the diagram from the slot rotation system.

    A corner (ci, j) is the sector of crossing ci between slots j and
    j+1 (mod 4); every corner belongs to exactly one face, and the face
    count is always r + 2.
    """
    return _Embedding(k).faces


@dataclass(frozen=True)
class MedianGraph:
    """Graph on the black faces, one edge per crossing.

    b[i] is the sign of crossing i; eta[i] is +1 when the A-smoothing at
    crossing i joins the two black corners (corners 0 and 2), -1 when the
    B-smoothing does.  black_faces[j] is the face id of graph vertex j+1.
    """

    graph: Multigraph
    b: tuple
    eta: tuple
    black_faces: tuple
    outer_face: int


def median_graph(k, outer_face):
    emb = _Embedding(k)
    colors = emb.colors(outer_face)
    black = tuple(sorted(fid for fid, color in colors.items() if color == 1))
    vertex_of = {fid: i + 1 for i, fid in enumerate(black)}
    edges = []
    b = []
    eta = []
    for ci, c in enumerate(k.crossings):
        corner_color = [colors[emb.face_of_corner[(ci, j)]] for j in range(4)]
        if corner_color[0] != corner_color[2] or corner_color[1] != corner_color[3] \
                or corner_color[0] == corner_color[1]:
            raise AssertionError("corner colors do not alternate at crossing %d" % ci)
        if corner_color[0] == 1:
            pair = (0, 2)
            eta.append(1)
        else:
            pair = (1, 3)
            eta.append(-1)
        u = vertex_of[emb.face_of_corner[(ci, pair[0])]]
        v = vertex_of[emb.face_of_corner[(ci, pair[1])]]
        edges.append((u, v))
        b.append(c.sign)
    return MedianGraph(Multigraph(len(black), tuple(edges)),
                       tuple(b), tuple(eta), black, outer_face)


def bracket_states(r):
    """All 2^r smoothing choices; +1 picks the A-smoothing, -1 the B."""
    return product((1, -1), repeat=r)


def state_loop_count(k, s):
    """Number of loops after smoothing every crossing as s prescribes.

    Ports are joined pairwise by the smoothing arcs and by the diagram
    arcs; the loops are the cycles of that pairing.
    """
    arc_in, arc_out = _port_maps(k)
    parent = {}

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(x, y):
        parent[find(x)] = find(y)

    for ci in range(k.r):
        for slot in range(4):
            parent[(ci, slot)] = (ci, slot)
    for ci, tau in enumerate(s):
        pairs = ((0, 3), (1, 2)) if tau == 1 else ((0, 1), (2, 3))
        for a, b in pairs:
            union((ci, a), (ci, b))
    for label, out_port in arc_out.items():
        union(out_port, arc_in[label])
    return len({find(p) for p in parent})


def _loop_variable():
    a = LaurentPoly.variable("A")
    return -(a ** 2) - a ** -2


def kauffman_f(k):
    """Writhe-normalized bracket state sum in the variable A.

    Sum over states of (-A^2 - A^-2)^(S(s)-1) * A^(#A - #B), multiplied
    by (-A)^(-3 W) where W is the writhe.  The result is 1 on any diagram
    of the unknot.
    """
    d = _loop_variable()
    a = LaurentPoly.variable("A")
    total = LaurentPoly()
    for s in bracket_states(k.r):
        loops = state_loop_count(k, s)
        total = total + d ** (loops - 1) * a ** sum(s)
    w = k.writhe
    sign = -1 if w % 2 else 1
    return sign * a ** (-3 * w) * total


def jones(k):
    """The Jones polynomial in t, from kauffman_f by A^-4 -> t.

    Every A-exponent of a knot's bracket is divisible by 4; a
    non-divisible exponent signals a bug and raises.
    """
    f = kauffman_f(k)
    terms = {}
    for exps, coeff in f.terms.items():
        e = exps[0] if exps else 0
        if e % 4:
            raise AssertionError("bracket exponent %d not divisible by 4" % e)
        terms[(-(e // 4),)] = coeff
    return LaurentPoly(("t",), terms)


def state_edge_subset(k, s, m):
    """Edge subset of the median graph joined by the state s.

    Crossing i's median edge is kept exactly when the chosen smoothing
    joins the two black corners there, i.e. when s[i] * eta[i] = +1.
    Distinct states map to distinct subsets (a bijection).
    """
    mask = 0
    for ci in range(k.r):
        if s[ci] * m.eta[ci] == 1:
            mask |= 1 << ci
    return mask


def prop_mm_check(k, outer_face):
    """Check S(s) = 2 c(E(s)) + |E(s)| - |V| over all states.

    The loop count comes from strand smoothing alone, the right side from
    the median graph of the chosen shading.
    """
    m = median_graph(k, outer_face)
    nv = m.graph.vertex_count
    for s in bracket_states(k.r):
        loops = state_loop_count(k, s)
        mask = state_edge_subset(k, s, m)
        predicted = (2 * m.graph.component_count(mask)
                     + m.graph.subset_size(mask) - nv)
        if loops != predicted:
            return False
    return True


def jones_via_bichromate(k, outer_face, route="kk"):
    """kauffman_f computed through the median graph.

    route="kk" (any signs): sum over median edge subsets B of
    (-A^2-A^-2)^(2c(B)+|B|-|V|-1) * A^(2 * sum of eta over B), times the
    prefactor (-A)^(-3W) * A^(-sum of eta).

    route="kkk": the same sum read off the bichromate polynomial of the
    median graph; valid only when all crossing signs agree and all eta
    values agree, otherwise a ValueError is raised.

    The per-crossing exponent uses eta (which smoothing joins the black
    faces), not the crossing sign; the two coincide for some shadings but
    not in general, and only the eta form reproduces kauffman_f for both
    shadings of every diagram.
    """
    from .qchrom import bichromate

    m = median_graph(k, outer_face)
    d = _loop_variable()
    a = LaurentPoly.variable("A")
    nv = m.graph.vertex_count
    w = k.writhe
    sign = -1 if w % 2 else 1
    prefactor = sign * a ** (-3 * w) * a ** (-sum(m.eta))
    if route == "kk":
        total = LaurentPoly()
        for mask in m.graph.subsets():
            exponent = (2 * m.graph.component_count(mask)
                        + m.graph.subset_size(mask) - nv - 1)
            if exponent < 0:
                raise AssertionError("negative loop exponent %d" % exponent)
            eta_sum = sum(m.eta[i] for i in range(k.r) if mask >> i & 1)
            total = total + d ** exponent * a ** (2 * eta_sum)
        return prefactor * total
    if route == "kkk":
        if len(set(m.b)) > 1:
            raise ValueError("bichromate route needs uniform crossing signs")
        if len(set(m.eta)) > 1:
            raise ValueError("bichromate route needs uniform eta")
        eta0 = m.eta[0] if m.eta else 1
        poly = bichromate(m.graph)
        total = LaurentPoly()
        for exps, coeff in poly.terms.items():
            comp = dict(zip(poly.variables, exps))
            c_count = comp.get("a", 0)
            j_count = comp.get("b", 0)
            exponent = 2 * c_count + j_count - nv - 1
            if exponent < 0:
                raise AssertionError("negative loop exponent %d" % exponent)
            total = total + coeff * d ** exponent * a ** (2 * eta0 * j_count)
        return prefactor * total
    raise ValueError("route must be 'kk' or 'kkk', got %r" % route)
