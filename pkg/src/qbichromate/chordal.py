"""Chordal graphs, tree structures, and their exact coloring identities.

A tree structure lives on a rooted tree.  Every node w owns a set A_w of
ground elements (the sets A_w partition the ordered ground set 1..k) and
carries a set B_w of elements inherited from its ancestors, of a
prescribed size b_w.  The bag of w is A_w together with B_w; each B_w is
chosen from the parent's bag, the root inheriting nothing.  Ground
labels must grow away from the root: an element owned by a node is
larger than every element owned by a strict ancestor.

The bags determine a graph on the ground set (two elements are adjacent
exactly when they share a bag); that graph is always chordal, and peo
recovers a perfect elimination order for any chordal graph.

Two identities are implemented as computable pairs, both sides exact
polynomials in q:

- str2_pair: the sum of q^(colors minus defects) over bag-injective
  colorings equals a product of q-integers (z - m(x))_q, where m(x)
  counts the bag elements below x in x's owning bag.  The left side
  depends only on the prescribed sizes, not on which structure was
  chosen; the plain (non-defected) color sum has no such invariance.
- str20_pair: the q-chromatic polynomials of all structures of an
  instance, summed with a fixed rational-in-q weight, equal the number
  of structures times the same q-integer product.
"""

import math
import warnings
from dataclasses import dataclass
from itertools import combinations, product

from .graphcore import Multigraph, ParseError, _content_lines
from .polyq import LaurentPoly, qint


class NotChordal(Exception):
    """Raised by peo on a graph with a chordless cycle of length >= 4.

    The certificate cycle is the .cycle attribute, vertices in cyclic
    order.
    """

    def __init__(self, cycle):
        super().__init__("chordless cycle of length %d: %s"
                         % (len(cycle), " ".join(str(v) for v in cycle)))
        self.cycle = tuple(cycle)


def peo(g):
    """Perfect elimination order of a simple chordal graph.

    Returns (order, m) where order is a vertex sequence in which every
    vertex's earlier neighbors form a clique and m[i] is the number of
    earlier neighbors of order[i].  Deterministic: the largest simplicial
    vertex of the remaining graph is eliminated first and placed last.

    Raises NotChordal with a certificate cycle when no such order
    exists, and ValueError on loops or parallel edges.
    """
    adj = {v: set() for v in range(1, g.vertex_count + 1)}
    for u, v in g.edges:
        if u == v:
            raise ValueError("chordality is about simple graphs; "
                             "vertex %d has a loop" % u)
        if v in adj[u]:
            raise ValueError("chordality is about simple graphs; "
                             "edge %d %d repeats" % (u, v))
        adj[u].add(v)
        adj[v].add(u)
    full = {v: frozenset(nbrs) for v, nbrs in adj.items()}
    order = []
    while adj:
        simplicial = None
        for v in sorted(adj, reverse=True):
            if all(b in adj[a] for a, b in combinations(adj[v], 2)):
                simplicial = v
                break
        if simplicial is None:
            raise NotChordal(_chordless_cycle(adj))
        order.append(simplicial)
        for u in adj[simplicial]:
            adj[u].discard(simplicial)
        del adj[simplicial]
    order.reverse()
    seen = set()
    m = []
    for v in order:
        m.append(len(full[v] & seen))
        seen.add(v)
    return tuple(order), tuple(m)


def _chordless_cycle(adj):
    """Certificate extraction from a graph with no simplicial vertex.

    For a vertex v with non-adjacent neighbors a, b, any shortest a-b
    path avoiding the rest of v's closed neighborhood closes with v into
    a chordless cycle of length at least four.  Such a triple with a
    connecting path always exists here.
    """
    for v in sorted(adj):
        for a, b in combinations(sorted(adj[v]), 2):
            if b in adj[a]:
                continue
            blocked = (adj[v] | {v}) - {a, b}
            path = _shortest_path(adj, a, b, blocked)
            if path is not None:
                return (v,) + tuple(path)
    raise AssertionError("no simplicial vertex but no chordless cycle found")


def _shortest_path(adj, a, b, blocked):
    prev = {a: None}
    queue = [a]
    while queue:
        following = []
        for u in queue:
            for w in sorted(adj[u]):
                if w in blocked or w in prev:
                    continue
                prev[w] = u
                if w == b:
                    path = [b]
                    while prev[path[-1]] is not None:
                        path.append(prev[path[-1]])
                    path.reverse()
                    return path
                following.append(w)
        queue = following
    return None


@dataclass(frozen=True)
class TreeStructure:
    """One choice of inherited sets on a rooted tree.

    parents[w-1] is the parent of node w (0 marks the root); a_sets and
    b_sets hold frozensets per node.  Ground elements are 1..k.
    """

    parents: tuple
    a_sets: tuple
    b_sets: tuple

    @property
    def node_count(self):
        return len(self.parents)

    @property
    def root(self):
        return self.parents.index(0) + 1

    @property
    def ground_size(self):
        return sum(len(s) for s in self.a_sets)

    def bag(self, w):
        return self.a_sets[w - 1] | self.b_sets[w - 1]

    def owner(self, x):
        for w in range(1, self.node_count + 1):
            if x in self.a_sets[w - 1]:
                return w
        raise ValueError("element %d is not owned by any node" % x)

    def m(self, x):
        """Bag elements below x in x's owning bag.

        Equals b_w plus the number of smaller elements of A_w, so it
        depends only on the prescribed sizes, not on the chosen B sets.
        """
        w = self.owner(x)
        return (len(self.b_sets[w - 1])
                + sum(1 for y in self.a_sets[w - 1] if y < x))


def _instance(parents, a_sets, b_sizes):
    """Validate instance data; return (root, topdown, a_sets, b_sizes)."""
    parents = tuple(int(p) for p in parents)
    n = len(parents)
    if len(a_sets) != n or len(b_sizes) != n:
        raise ValueError("need one A set and one b size per tree node")
    roots = [w for w in range(1, n + 1) if parents[w - 1] == 0]
    if len(roots) != 1:
        raise ValueError("exactly one node must have parent 0")
    root = roots[0]
    children = {w: [] for w in range(1, n + 1)}
    for w in range(1, n + 1):
        if w == root:
            continue
        p = parents[w - 1]
        if not 1 <= p <= n or p == w:
            raise ValueError("node %d has invalid parent %d" % (w, p))
        children[p].append(w)
    topdown = [root]
    i = 0
    while i < len(topdown):
        topdown.extend(sorted(children[topdown[i]]))
        i += 1
    if len(topdown) != n:
        raise ValueError("the parent map does not form a tree")
    a_sets = tuple(frozenset(int(x) for x in s) for s in a_sets)
    ground = sorted(x for s in a_sets for x in s)
    k = len(ground)
    if ground != list(range(1, k + 1)):
        raise ValueError("the A sets must partition the ground set 1..k")
    b_sizes = tuple(int(b) for b in b_sizes)
    if any(b < 0 for b in b_sizes):
        raise ValueError("b sizes must be nonnegative")
    if b_sizes[root - 1] != 0:
        raise ValueError("the root inherits nothing; its b size must be 0")
    for w in range(1, n + 1):
        i = parents[w - 1]
        while i != 0:
            if a_sets[i - 1] and a_sets[w - 1] \
                    and max(a_sets[i - 1]) > min(a_sets[w - 1]):
                raise ValueError(
                    "ground labels must grow away from the root: node %d "
                    "owns a larger element than its descendant node %d"
                    % (i, w))
            i = parents[i - 1]
    return root, tuple(topdown), a_sets, b_sizes


def structure_count(parents, a_sets, b_sizes):
    """Closed-form number of structures of an instance.

    The product over non-root nodes of C(a_p + b_p, b_w), p the parent.
    """
    root, topdown, a_sets, b_sizes = _instance(parents, a_sets, b_sizes)
    count = 1
    for w in topdown:
        if w == root:
            continue
        p = parents[w - 1]
        count *= math.comb(len(a_sets[p - 1]) + b_sizes[p - 1], b_sizes[w - 1])
    return count


def tree_structures(parents, a_sets, b_sizes):
    """Enumerate all structures of an instance, in a deterministic order.

    Top-down, each non-root node w takes every b_w-element subset of its
    parent's bag.  Instances whose sizes admit no choice at some node
    yield an empty list with a warning; malformed instances raise
    ValueError.
    """
    root, topdown, a_sets, b_sizes = _instance(parents, a_sets, b_sizes)
    parents = tuple(int(p) for p in parents)
    n = len(parents)
    for w in topdown:
        if w == root:
            continue
        p = parents[w - 1]
        if b_sizes[w - 1] > len(a_sets[p - 1]) + b_sizes[p - 1]:
            warnings.warn(
                "no structures: node %d needs %d inherited elements but its "
                "parent bag only has %d"
                % (w, b_sizes[w - 1], len(a_sets[p - 1]) + b_sizes[p - 1]),
                stacklevel=2)
            return []
    results = []
    b_sets = {root: frozenset()}

    def extend(pos):
        if pos == len(topdown):
            final = tuple(b_sets[w] for w in range(1, n + 1))
            s = TreeStructure(parents, a_sets, final)
            _check_heredity(s)
            results.append(s)
            return
        w = topdown[pos]
        p = parents[w - 1]
        pool = sorted(a_sets[p - 1] | b_sets[p])
        for choice in combinations(pool, b_sizes[w - 1]):
            b_sets[w] = frozenset(choice)
            extend(pos + 1)
        del b_sets[w]

    extend(1)
    return results


def _check_heredity(s):
    """Inherited elements persist along the tree path from their owner.

    Guaranteed by the top-down construction; checked as a sanity
    assertion.
    """
    for j in range(1, s.node_count + 1):
        for x in s.b_sets[j - 1]:
            i = s.parents[j - 1]
            while i != 0 and x not in s.a_sets[i - 1]:
                if x not in s.b_sets[i - 1]:
                    raise AssertionError(
                        "element %d skipped node %d on its way to node %d"
                        % (x, i, j))
                i = s.parents[i - 1]


def graph_of_structure(s):
    """The graph whose edges are the pairs sharing a bag.

    Always chordal: peo accepts it for every structure.
    """
    edges = set()
    for w in range(1, s.node_count + 1):
        for x, y in combinations(sorted(s.bag(w)), 2):
            edges.add((x, y))
    return Multigraph(s.ground_size, tuple(sorted(edges)))


def _qint_product(values):
    """Product of (v)_q over the values; zero if any value is <= 0."""
    if any(v <= 0 for v in values):
        return LaurentPoly()
    out = LaurentPoly.constant(1)
    for v in values:
        out = out * qint(v)
    return out


def _defected_sum(s, z):
    """Sum of q^(sum of v_x - def(x)) over bag-injective colorings v of
    the ground set with colors 0..z-1, where def(x) counts elements y
    below x in x's owning bag with v_y < v_x."""
    k = s.ground_size
    bags = [tuple(sorted(s.bag(w))) for w in range(1, s.node_count + 1)]
    owner_bag = {x: bags[s.owner(x) - 1] for x in range(1, k + 1)}
    terms = {}
    for v in product(range(z), repeat=k):
        if any(len({v[x - 1] for x in bag}) != len(bag) for bag in bags):
            continue
        expo = 0
        for x in range(1, k + 1):
            defect = sum(1 for y in owner_bag[x]
                         if y < x and v[y - 1] < v[x - 1])
            expo += v[x - 1] - defect
        terms[(expo,)] = terms.get((expo,), 0) + 1
    return LaurentPoly(("q",), terms)


def str2_pair(s, z):
    """Both sides of the defected color-sum identity at z colors.

    Left: the defected coloring sum of the structure.  Right: the
    product over ground elements of (z - m(x))_q.
    """
    if z < 1:
        raise ValueError("z must be a positive integer")
    lhs = _defected_sum(s, z)
    rhs = _qint_product([z - s.m(x) for x in range(1, s.ground_size + 1)])
    return lhs, rhs


def str20_pair(parents, a_sets, b_sizes, z):
    """Both sides of the aggregated defected color-sum identity.

    Left: the defected coloring sum (the left side of str2_pair),
    totalled over every structure of the instance.  Right: the
    structure count times the product over ground elements of
    (z - m(x))_q.  Both the per-structure value and the count admit
    closed forms, so the aggregate does too; computing the left side by
    plain enumeration keeps the two sides independent.
    """
    if z < 1:
        raise ValueError("z must be a positive integer")
    root, topdown, a_norm, b_norm = _instance(parents, a_sets, b_sizes)
    lhs = LaurentPoly()
    for s in tree_structures(parents, a_sets, b_sizes):
        lhs = lhs + _defected_sum(s, z)
    m_by_x = _m_values(a_norm, b_norm)
    rhs = (LaurentPoly.constant(structure_count(parents, a_sets, b_sizes))
           * _qint_product([z - m_by_x[x] for x in sorted(m_by_x)]))
    return lhs, rhs


def _m_values(a_sets, b_sizes):
    """m(x) per ground element, from the prescribed sizes alone."""
    out = {}
    for w, owned in enumerate(a_sets, start=1):
        for x in owned:
            out[x] = b_sizes[w - 1] + sum(1 for y in owned if y < x)
    return out


def parse_structure(text):
    """Parse the structure text format into (parents, a_sets, b_sizes).

    Lines: "tree <parent per node, 0 for the root>", then "A <node>
    <elements...>" and "b <node> <size>" lines.  Nodes without an A line
    own nothing; without a b line they inherit nothing.
    """
    parents = None
    a_lines = {}
    b_lines = {}
    for lineno, line in _content_lines(text):
        parts = line.split()
        if parts[0] == "tree":
            if parents is not None:
                raise ParseError("duplicate tree line", lineno)
            try:
                parents = tuple(int(p) for p in parts[1:])
            except ValueError:
                raise ParseError("parents must be integers", lineno) from None
            if not parents:
                raise ParseError("tree line needs at least one node", lineno)
        elif parts[0] in ("A", "b"):
            if parents is None:
                raise ParseError("the tree line must come first", lineno)
            try:
                node = int(parts[1]) if len(parts) > 1 else 0
            except ValueError:
                raise ParseError("node id must be an integer", lineno) from None
            if not 1 <= node <= len(parents):
                raise ParseError("node id %r out of range" % parts[1:2], lineno)
            target = a_lines if parts[0] == "A" else b_lines
            if node in target:
                raise ParseError("duplicate %s line for node %d"
                                 % (parts[0], node), lineno)
            try:
                values = [int(p) for p in parts[2:]]
            except ValueError:
                raise ParseError("elements must be integers", lineno) from None
            if parts[0] == "b":
                if len(values) != 1:
                    raise ParseError("b line needs exactly one size", lineno)
                target[node] = values[0]
            else:
                target[node] = frozenset(values)
        else:
            raise ParseError("unknown directive %r" % parts[0], lineno)
    if parents is None:
        raise ParseError("missing tree line")
    n = len(parents)
    a_sets = tuple(a_lines.get(w, frozenset()) for w in range(1, n + 1))
    b_sizes = tuple(b_lines.get(w, 0) for w in range(1, n + 1))
    return parents, a_sets, b_sizes


def load_structure(path):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_structure(handle.read())
