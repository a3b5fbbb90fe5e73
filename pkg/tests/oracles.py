"""Independent reference implementations used only by the tests.

These deliberately avoid the package's own data structures and
algorithms so that agreement is meaningful: the chromatic oracle uses
deletion-contraction (the package counts colorings directly), and the
bracket oracle re-parses PD text and walks loops through explicit port
pairings (the package uses union-find), with plain dict Laurent
arithmetic in one variable.
"""

from fractions import Fraction


def chromatic_count(vertex_count, edges, n):
    """Number of proper n-colorings, by deletion-contraction."""
    edges = list(edges)
    for u, v in edges:
        if u == v:
            return 0
    if not edges:
        return n ** vertex_count
    lo, hi = sorted(edges[0])
    rest = edges[1:]
    deleted = chromatic_count(vertex_count, rest, n)

    def relabel(w):
        if w == hi:
            return lo
        return w - 1 if w > hi else w

    contracted = chromatic_count(
        vertex_count - 1, [(relabel(a), relabel(b)) for a, b in rest], n)
    return deleted - contracted


def _parse_pd_ports(text):
    """(signs, port pairs) from PD text, independent of the package.

    Ports are (crossing, slot) with slots 0..3; each arc label pairs the
    two ports it appears at.
    """
    signs = []
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        signs.append(1 if parts[0] == "X+" else -1)
        rows.append(tuple(int(p) for p in parts[1:]))
    by_label = {}
    for ci, row in enumerate(rows):
        for slot, label in enumerate(row):
            by_label.setdefault(label, []).append((ci, slot))
    arc_pairs = [tuple(ports) for ports in by_label.values()]
    return signs, arc_pairs


def _mul(p1, p2):
    out = {}
    for e1, c1 in p1.items():
        for e2, c2 in p2.items():
            key = e1 + e2
            out[key] = out.get(key, 0) + c1 * c2
            if out[key] == 0:
                del out[key]
    return out


def _loop_count(r, arc_pairs, state):
    pairs = list(arc_pairs)
    for ci, tau in enumerate(state):
        if tau == 1:
            pairs.extend([((ci, 0), (ci, 3)), ((ci, 1), (ci, 2))])
        else:
            pairs.extend([((ci, 0), (ci, 1)), ((ci, 2), (ci, 3))])
    adjacent = {}
    for a, b in pairs:
        adjacent.setdefault(a, []).append(b)
        adjacent.setdefault(b, []).append(a)
    seen = set()
    loops = 0
    for port in adjacent:
        if port in seen:
            continue
        loops += 1
        stack = [port]
        while stack:
            p = stack.pop()
            if p in seen:
                continue
            seen.add(p)
            stack.extend(adjacent[p])
    return loops


def bracket_f(text):
    """Normalized bracket of a PD text as a dict {A-exponent: coeff}."""
    signs, arc_pairs = _parse_pd_ports(text)
    r = len(signs)
    total = {}
    for mask in range(1 << r):
        state = [1 if mask >> i & 1 else -1 for i in range(r)]
        loops = _loop_count(r, arc_pairs, state)
        term = {sum(state): 1}
        d = {2: -1, -2: -1}
        for _ in range(loops - 1):
            term = _mul(term, d)
        for e, c in term.items():
            total[e] = total.get(e, 0) + c
            if total[e] == 0:
                del total[e]
    w = sum(signs)
    sign = -1 if w % 2 else 1
    return {e - 3 * w: sign * c for e, c in total.items()}


def jones_from_bracket(text):
    """Jones polynomial as a dict {t-exponent: coeff} via bracket_f."""
    out = {}
    for e, c in bracket_f(text).items():
        assert e % 4 == 0, "A-exponent %d not a multiple of 4" % e
        out[-e // 4] = Fraction(c)
    return out
