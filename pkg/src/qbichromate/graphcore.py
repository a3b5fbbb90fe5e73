"""Multigraphs, edge subsets as bitmasks, and the shared text format.

Graphs are undirected multigraphs on vertices 1..vertex_count; loops and
parallel edges are allowed.  Edge subsets are represented as integer
bitmasks where bit i selects edges[i], which keeps subset enumeration and
set algebra cheap inside the exponential-size sums used elsewhere.

Text format, one declaration per line (blank lines and '#' comments skipped):

    vertices 4
    1 2
    2 3
    2 3
    4 4
"""

from dataclasses import dataclass


class ParseError(ValueError):
    """Raised for malformed input files, with a 1-based line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: tuple

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be >= 0")
        for u, v in self.edges:
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                raise ValueError("edge (%d, %d) out of range 1..%d"
                                 % (u, v, self.vertex_count))

    @property
    def edge_count(self):
        return len(self.edges)

    def subsets(self):
        """Iterate over all edge subsets as bitmasks, 0 .. 2^m - 1."""
        for mask in range(1 << len(self.edges)):
            yield mask

    def subset_size(self, mask):
        return bin(mask).count("1")

    def subset_edges(self, mask):
        return [self.edges[i] for i in range(len(self.edges)) if mask >> i & 1]

    def components(self, mask):
        """Vertex sets of the components of (V, selected edges).

        Isolated vertices count as singleton components.  Returned as a
        list of sorted vertex lists, ordered by smallest vertex.
        """
        parent = list(range(self.vertex_count + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, (u, v) in enumerate(self.edges):
            if mask >> i & 1:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
        groups = {}
        for v in range(1, self.vertex_count + 1):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def component_count(self, mask):
        return len(self.components(mask))

    def odd_degree_count(self, mask):
        """Number of vertices with odd degree in the selected subgraph.

        A loop adds 2 to its vertex's degree, so loops never change parity.
        """
        degree = [0] * (self.vertex_count + 1)
        for i, (u, v) in enumerate(self.edges):
            if mask >> i & 1:
                degree[u] += 1
                degree[v] += 1
        return sum(1 for v in range(1, self.vertex_count + 1) if degree[v] % 2)

    def has_loop(self):
        return any(u == v for u, v in self.edges)

    def degree(self, vertex):
        total = 0
        for u, v in self.edges:
            if u == vertex:
                total += 1
            if v == vertex:
                total += 1
        return total

    def neighbors(self, vertex):
        """Distinct neighbors of a vertex, excluding the vertex itself."""
        out = set()
        for u, v in self.edges:
            if u == vertex and v != vertex:
                out.add(v)
            elif v == vertex and u != vertex:
                out.add(u)
        return out

    def to_text(self):
        lines = ["vertices %d" % self.vertex_count]
        lines.extend("%d %d" % (u, v) for u, v in self.edges)
        return "\n".join(lines) + "\n"


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_graph(text):
    """Parse the graph text format into a Multigraph."""
    vertex_count = None
    edges = []
    for lineno, line in _content_lines(text):
        parts = line.split()
        if vertex_count is None:
            if len(parts) != 2 or parts[0] != "vertices":
                raise ParseError("expected 'vertices <count>'", lineno)
            try:
                vertex_count = int(parts[1])
            except ValueError:
                raise ParseError("vertex count %r is not an integer" % parts[1],
                                 lineno) from None
            if vertex_count < 0:
                raise ParseError("vertex count must be >= 0", lineno)
            continue
        if len(parts) != 2:
            raise ParseError("expected an edge 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("edge endpoints %r are not integers" % line,
                             lineno) from None
        if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
            raise ParseError("edge (%d, %d) out of range 1..%d"
                             % (u, v, vertex_count), lineno)
        edges.append((u, v))
    if vertex_count is None:
        raise ParseError("missing 'vertices <count>' header")
    return Multigraph(vertex_count, tuple(edges))


def load_graph(path):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_graph(handle.read())
