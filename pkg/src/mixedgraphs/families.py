"""Constructors for the infinite (1,1,k)-mixed graph families.

Every constructor returns a LabeledMixedGraph, retaining the human-readable
vertex labels the family is defined with (alphabet strings, walk strings,
Moore-tree words) for debugging and for cross-family isomorphism tests.
Classical digraphs (line digraph, De Bruijn, Kautz) are provided alongside.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import MixedGraph, ColoredDigraph, BLUE, RED, GraphError
from .search import moore_words


@dataclass(frozen=True)
class LabeledMixedGraph:
    """A mixed graph together with unique per-vertex labels."""

    graph: MixedGraph
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.labels) != self.graph.n:
            raise GraphError("label count must equal vertex count")
        if len(set(self.labels)) != len(self.labels):
            raise GraphError("labels must be unique")

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def label_map(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @property
    def n(self) -> int:
        return self.graph.n


def _sign_str(a: int) -> str:
    return "+1" if a > 0 else "-1"


# ---------------------------------------------------------------------------
# E(n): completed Moore tree
# ---------------------------------------------------------------------------

def build_E(n: int) -> LabeledMixedGraph:
    """Moore tree of radius n completed into a mixed graph.

    The arc-entered boundary vertices are matched among themselves and get
    arcs back to the root; edge-entered boundary vertices keep out-degree 0.
    When the boundary count f_n is odd, the vertex missed by the matching is
    tied to one extra vertex whose arc feeds the root, raising the order to
    M(1,1,n) + 1 and the diameter from 2n to 2n + 1.

    Words serve as labels; the root is the empty word, shown as ".".
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    words = moore_words(n)
    labels = ["." if w == "" else w for w in words]
    idx = {w: i for i, w in enumerate(words)}

    edges = []
    arcs = []
    for w in words:
        if len(w) < n:
            if (w == "" or not w.endswith("0")) and w + "0" in idx:
                edges.append((idx[w], idx[w + "0"]))
            arcs.append((idx[w], idx[w + "1"]))

    boundary_arc_entered = sorted(w for w in words if len(w) == n and w.endswith("1"))
    root = idx[""]
    for w in boundary_arc_entered:
        arcs.append((idx[w], root))

    # on an odd boundary, leave out the lexicographically first vertex: it
    # lies in the branch under "0", which keeps the auxiliary vertex at the
    # full distance 2n+1 from the level-1 vertex "1"
    leftover = None
    matched = boundary_arc_entered
    if len(boundary_arc_entered) % 2:
        leftover, matched = boundary_arc_entered[0], boundary_arc_entered[1:]
    for i in range(0, len(matched), 2):
        edges.append((idx[matched[i]], idx[matched[i + 1]]))

    if leftover is None:
        return LabeledMixedGraph(MixedGraph(len(words), edges, arcs), tuple(labels))

    extra = len(words)
    labels.append("aux")
    edges.append((idx[leftover], extra))
    arcs.append((extra, root))
    return LabeledMixedGraph(MixedGraph(len(words) + 1, edges, arcs), tuple(labels))


# ---------------------------------------------------------------------------
# F(n) and its numeric presentation F[n]
# ---------------------------------------------------------------------------

def _f_vertices(n: int):
    """Labels a|x_1..x_n: a in {+1,-1}, digits in Z_3, adjacent digits differ."""
    digit_runs = [
        digits
        for digits in product(range(3), repeat=n)
        if all(digits[i] != digits[i + 1] for i in range(n - 1))
    ]
    return [(a, digits) for a in (1, -1) for digits in digit_runs]


def _f_label(a: int, digits) -> str:
    return _sign_str(a) + "|" + "".join(str(d) for d in digits)


def build_F(n: int) -> LabeledMixedGraph:
    """Out-regular family on 3*2^n vertices with diameter 2n.

    Edges flip the sign; the arc shifts the digits and appends x_n + a
    (mod 3).  Not in-regular.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    verts = _f_vertices(n)
    idx = {v: i for i, v in enumerate(verts)}
    edges = [(idx[(1, d)], idx[(-1, d)]) for (a, d) in verts if a == 1]
    arcs = []
    for (a, d) in verts:
        target = d[1:] + ((d[-1] + a) % 3,)
        arcs.append((idx[(a, d)], idx[(a, target)]))
    labels = tuple(_f_label(a, d) for (a, d) in verts)
    return LabeledMixedGraph(MixedGraph(len(verts), edges, arcs), labels)


def build_F_numeric(n: int) -> LabeledMixedGraph:
    """Numeric presentation: vertices alpha|i, alpha in {1,2}, i in Z_{N'}.

    Edges swap alpha; arcs send alpha|i to alpha|(-2i + alpha).  Isomorphic
    to build_F(n) for n >= 2.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    nprime = 3 * 2 ** (n - 1)
    verts = [(alpha, i) for alpha in (1, 2) for i in range(nprime)]
    idx = {v: j for j, v in enumerate(verts)}
    edges = [(idx[(1, i)], idx[(2, i)]) for i in range(nprime)]
    arcs = [
        (idx[(alpha, i)], idx[(alpha, (-2 * i + alpha) % nprime)])
        for (alpha, i) in verts
    ]
    labels = tuple(f"{alpha}|{i}" for (alpha, i) in verts)
    return LabeledMixedGraph(MixedGraph(len(verts), edges, arcs), labels)


# ---------------------------------------------------------------------------
# F*(n): the totally regular variant, plus its alternative presentation
# ---------------------------------------------------------------------------

def _pm1(x: int) -> int:
    """Map a nonzero residue mod 3 to +1 or -1."""
    r = x % 3
    if r == 1:
        return 1
    if r == 2:
        return -1
    raise ValueError("difference of adjacent digits cannot be 0")


def build_Fstar(n: int) -> LabeledMixedGraph:
    """Totally (1,1)-regular variant of F(n); it has exactly three digons.

    The appended digit is x_n + a*(x_2 - x_1) with the difference normalized
    to +1 or -1 mod 3.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    verts = _f_vertices(n)
    idx = {v: i for i, v in enumerate(verts)}
    edges = [(idx[(1, d)], idx[(-1, d)]) for (a, d) in verts if a == 1]
    arcs = []
    for (a, d) in verts:
        s = _pm1(d[1] - d[0])
        target = d[1:] + ((d[-1] + a * s) % 3,)
        arcs.append((idx[(a, d)], idx[(a, target)]))
    labels = tuple(_f_label(a, d) for (a, d) in verts)
    return LabeledMixedGraph(MixedGraph(len(verts), edges, arcs), labels)


def build_Fstar_alt(n: int) -> LabeledMixedGraph:
    """Difference presentation a|b:a_1..a_{n-1} of the same graph.

    b = x_1 and a_i = x_{i+1} - x_i (as +1/-1); the arc adds a_1 to b,
    shifts the differences and appends a*a_1.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    verts = [
        (a, b, diffs)
        for a in (1, -1)
        for b in range(3)
        for diffs in product((1, -1), repeat=n - 1)
    ]
    idx = {v: i for i, v in enumerate(verts)}
    edges = [(idx[(1, b, d)], idx[(-1, b, d)]) for (a, b, d) in verts if a == 1]
    arcs = []
    for (a, b, d) in verts:
        target = (a, (b + d[0]) % 3, d[1:] + (a * d[0],))
        arcs.append((idx[(a, b, d)], idx[target]))
    labels = tuple(
        _sign_str(a) + "|" + str(b) + ":" + "".join("+" if x > 0 else "-" for x in d)
        for (a, b, d) in verts
    )
    return LabeledMixedGraph(MixedGraph(len(verts), edges, arcs), labels)


def fstar_alt_Phi(n: int):
    """The involutive automorphism of the difference presentation.

    Swaps residues 0 and 1 in b and negates every difference.
    """
    phi_b = {0: 1, 1: 0, 2: 2}

    def act(v):
        a, b, d = v
        return (a, phi_b[b], tuple(-x for x in d))

    return act


def fstar_alt_Psi(n: int):
    """The order-three automorphism b -> b + 1 of the difference presentation."""

    def act(v):
        a, b, d = v
        return (a, (b + 1) % 3, d)

    return act


def fstar_alt_vertices(n: int):
    return [
        (a, b, diffs)
        for a in (1, -1)
        for b in range(3)
        for diffs in product((1, -1), repeat=n - 1)
    ]


# ---------------------------------------------------------------------------
# F'(n): digons removed
# ---------------------------------------------------------------------------

def _digon_pairs(g: MixedGraph) -> list[tuple[int, int]]:
    return sorted(
        (u, v) for (u, v) in g.arcs if u < v and (v, u) in g.arcs
    )


def build_Fprime(n: int) -> LabeledMixedGraph:
    """F*(n) with the six digon endpoints removed.

    Each digon's two endpoints are deleted; their edge partners, left
    without an edge, are joined to each other.  Totally (1,1)-regular and
    digon-free on 3*2^n - 6 vertices.
    """
    star = build_Fstar(n)
    g = star.graph
    digons = _digon_pairs(g)
    if len(digons) != 3:
        raise GraphError(f"expected 3 digons in the base graph, found {len(digons)}")
    removed = sorted({v for pair in digons for v in pair})
    new_edges = []
    for (u, v) in digons:
        (pu,) = g.edge_neighbors(u)
        (pv,) = g.edge_neighbors(v)
        new_edges.append((pu, pv))

    keep = [v for v in range(g.n) if v not in set(removed)]
    remap = {v: i for i, v in enumerate(keep)}
    removed_set = set(removed)
    edges = [
        (remap[u], remap[v])
        for (u, v) in g.edges
        if u not in removed_set and v not in removed_set
    ]
    edges += [(remap[u], remap[v]) for (u, v) in new_edges]
    arcs = [
        (remap[u], remap[v])
        for (u, v) in g.arcs
        if u not in removed_set and v not in removed_set
    ]
    labels = tuple(star.labels[v] for v in keep)
    return LabeledMixedGraph(MixedGraph(len(keep), edges, arcs), labels)


# ---------------------------------------------------------------------------
# G+(n) and G(n) on binary strings
# ---------------------------------------------------------------------------

def build_Gplus(n: int) -> LabeledMixedGraph:
    """All 2^(n+1) vertices x0|x1..xn: edges flip x0, arcs shift and append
    x1 + x0.  Contains two self-loops and one digon; diameter 2n for n > 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    verts = [(x0,) + rest for x0 in (0, 1) for rest in product((0, 1), repeat=n)]
    idx = {v: i for i, v in enumerate(verts)}
    edges = [
        (idx[v], idx[(1,) + v[1:]])
        for v in verts
        if v[0] == 0
    ]
    arcs = [
        (idx[v], idx[(v[0],) + v[2:] + ((v[1] + v[0]) % 2,)])
        for v in verts
    ]
    labels = tuple(f"{v[0]}|" + "".join(map(str, v[1:])) for v in verts)
    return LabeledMixedGraph(MixedGraph(len(verts), edges, arcs), labels)


def build_G(n: int) -> LabeledMixedGraph:
    """The totally regular graph on 2^(n+1) - 4 vertices derived from G+(n).

    The two loop vertices and the two digon endpoints are deleted; their
    edge partners are paired up (loop orphans together, digon orphans
    together).  Loop-free and digon-free.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    plus = build_Gplus(n)
    g = plus.graph
    loops = sorted(u for (u, v) in g.arcs if u == v)
    digons = _digon_pairs(g)
    if len(loops) != 2 or len(digons) != 1:
        raise GraphError("expected exactly two loops and one digon")
    removed = set(loops) | set(digons[0])

    def partner(v: int) -> int:
        (p,) = g.edge_neighbors(v)
        return p

    new_edges = [
        (partner(loops[0]), partner(loops[1])),
        (partner(digons[0][0]), partner(digons[0][1])),
    ]
    keep = [v for v in range(g.n) if v not in removed]
    remap = {v: i for i, v in enumerate(keep)}
    edges = [
        (remap[u], remap[v])
        for (u, v) in g.edges
        if u not in removed and v not in removed
    ]
    edges += [(remap[u], remap[v]) for (u, v) in new_edges]
    arcs = [
        (remap[u], remap[v])
        for (u, v) in g.arcs
        if u not in removed and v not in removed
    ]
    labels = tuple(plus.labels[v] for v in keep)
    return LabeledMixedGraph(MixedGraph(len(keep), edges, arcs), labels)


def gplus_psi0(label: str) -> str:
    """Edge move on a G+(n) label: flip the leading digit."""
    x0, rest = label.split("|")
    return f"{1 - int(x0)}|{rest}"


def gplus_psi1(label: str) -> str:
    """Arc move on a G+(n) label: shift digits, append x0 + x1."""
    x0s, rest = label.split("|")
    x0 = int(x0s)
    bits = [int(c) for c in rest]
    new = bits[1:] + [(x0 + bits[0]) % 2]
    return f"{x0}|" + "".join(map(str, new))


def gplus_mask(label: str, mask) -> str:
    """Flip the digit positions selected by the mask (x0 untouched)."""
    x0s, rest = label.split("|")
    bits = [(int(c) + m) % 2 for c, m in zip(rest, mask)]
    return f"{x0s}|" + "".join(map(str, bits))


# ---------------------------------------------------------------------------
# n-line mixed graphs H_n(G)
# ---------------------------------------------------------------------------

def two_colored_k3() -> ColoredDigraph:
    """Complete symmetric digraph on Z_3: blue arcs i -> i+1, red i -> i-1."""
    arcs = {}
    for i in range(3):
        arcs[(i, (i + 1) % 3)] = BLUE
        arcs[(i, (i - 1) % 3)] = RED
    return ColoredDigraph(3, arcs)


class NotOneFactorizedError(GraphError):
    pass


class NotStronglyConnectedError(GraphError):
    pass


def build_H(n: int, base: ColoredDigraph) -> LabeledMixedGraph:
    """Mixed graph on the n-walks of a 2-regular 1-factorized digraph.

    A walk's edge partner swaps the first vertex for the other-colored
    in-neighbour of the second; its arc appends the successor whose colour
    is red exactly when the first and last walk arcs share a colour.
    Totally (1,1)-regular with no digons, on (base order) * 2^(n-1)
    vertices.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if not base.is_one_factorized():
        raise NotOneFactorizedError("base digraph has no valid blue/red 1-factorization")
    if not base.is_strongly_connected():
        raise NotStronglyConnectedError("base digraph must be strongly connected")

    succ = {BLUE: {}, RED: {}}
    pred = {BLUE: {}, RED: {}}
    for (u, v), c in base.arcs.items():
        succ[c][u] = v
        pred[c][v] = u

    walks = []
    for start in range(base.n):
        for colors in product((BLUE, RED), repeat=n - 1):
            w = [start]
            for c in colors:
                w.append(succ[c][w[-1]])
            walks.append(tuple(w))
    idx = {w: i for i, w in enumerate(walks)}

    sep = "" if base.n <= 10 else ","
    labels = tuple(sep.join(map(str, w)) for w in walks)

    def color(u, v):
        return base.arcs[(u, v)]

    edges = []
    arcs = []
    for w in walks:
        c_first = color(w[0], w[1])
        c_last = color(w[-2], w[-1])
        other = RED if c_first == BLUE else BLUE
        mate = (pred[other][w[1]],) + w[1:]
        if idx[w] < idx[mate]:
            edges.append((idx[w], idx[mate]))
        out_color = RED if c_first == c_last else BLUE
        target = w[1:] + (succ[out_color][w[-1]],)
        arcs.append((idx[w], idx[target]))
    return LabeledMixedGraph(MixedGraph(len(walks), edges, arcs), labels)


# ---------------------------------------------------------------------------
# classical digraphs
# ---------------------------------------------------------------------------

def line_digraph(d: ColoredDigraph) -> ColoredDigraph:
    """Line digraph: vertices are arcs, adjacency by head-tail concatenation."""
    if not d.arcs:
        raise ValueError("line digraph of an arcless digraph is empty")
    arcs = sorted(d.arcs)
    idx = {a: i for i, a in enumerate(arcs)}
    new = []
    for (u, v) in arcs:
        for w in d.out_neighbors(v):
            new.append((idx[(u, v)], idx[(v, w)]))
    return ColoredDigraph(len(arcs), sorted(new))


def de_bruijn(d: int, k: int) -> ColoredDigraph:
    """B(d,k): words of length k over d symbols, arcs shift and append."""
    if d < 1 or k < 1:
        raise ValueError("need d >= 1 and k >= 1")
    words = list(product(range(d), repeat=k))
    idx = {w: i for i, w in enumerate(words)}
    arcs = [
        (idx[w], idx[w[1:] + (a,)])
        for w in words
        for a in range(d)
    ]
    return ColoredDigraph(len(words), sorted(arcs))


def kautz(d: int, k: int) -> ColoredDigraph:
    """K(d,k): words of length k over d+1 symbols, adjacent symbols distinct.

    Order d^k + d^(k-1); diameter k.
    """
    if d < 1 or k < 1:
        raise ValueError("need d >= 1 and k >= 1")
    words = [
        w
        for w in product(range(d + 1), repeat=k)
        if all(w[i] != w[i + 1] for i in range(k - 1))
    ]
    idx = {w: i for i, w in enumerate(words)}
    arcs = [
        (idx[w], idx[w[1:] + (a,)])
        for w in words
        for a in range(d + 1)
        if a != w[-1]
    ]
    return ColoredDigraph(len(words), sorted(arcs))


def symmetric_cycle(m: int) -> ColoredDigraph:
    """The cycle C_m as a symmetric digraph (each edge a digon)."""
    if m < 3:
        raise ValueError("m must be >= 3")
    arcs = [(i, (i + 1) % m) for i in range(m)] + [(i, (i - 1) % m) for i in range(m)]
    return ColoredDigraph(m, sorted(arcs))
