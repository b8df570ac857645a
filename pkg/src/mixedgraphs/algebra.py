"""Finite groups as multiplication tables; Cayley and voltage-lift graphs.

Groups are materialized as numpy index tables with verified axioms, which is
plenty at the orders used here (a few thousand elements at most).  Element
names are kept for voltage-file literals and diagnostics.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

import numpy as np

from . import canon
from .core import MixedGraph, GraphError


class AlgebraError(ValueError):
    pass


class InvalidActionError(AlgebraError):
    """Semidirect-product action t is incompatible with the factor orders."""


class UnsupportedFieldError(AlgebraError):
    pass


class S1NotSymmetricError(AlgebraError):
    pass


class S2MeetsInverseError(AlgebraError):
    pass


class NoInvolutionError(AlgebraError):
    pass


class NonInvolutoryLoopVoltageError(AlgebraError):
    pass


class GroupTooLargeError(AlgebraError):
    pass


# orders above the cap would need multi-hundred-MB multiplication tables
_TABLE_CAP = 8192


class FiniteGroup:
    """A finite group given by its multiplication table.

    mul[a, b] is the index of the product a*b.  Axioms are verified at
    construction: identity and inverses exhaustively, associativity
    exhaustively up to order 200 and on random triples above that.
    """

    def __init__(self, mul, name: str, element_names=None):
        table = np.asarray(mul, dtype=np.int32)
        n = table.shape[0]
        if table.shape != (n, n):
            raise AlgebraError("multiplication table must be square")
        if n == 0:
            raise AlgebraError("empty group")
        self.order = n
        self.mul = table
        self.name = name
        self.element_names = (
            tuple(element_names) if element_names is not None
            else tuple(str(i) for i in range(n))
        )
        if len(self.element_names) != n:
            raise AlgebraError("element name count mismatch")
        self.identity = self._find_identity()
        self.inv = self._find_inverses()
        self._verify_associativity()

    def _find_identity(self) -> int:
        rng = np.arange(self.order)
        for e in range(self.order):
            if (self.mul[e] == rng).all() and (self.mul[:, e] == rng).all():
                return e
        raise AlgebraError("no identity element")

    def _find_inverses(self) -> np.ndarray:
        inv = np.full(self.order, -1, dtype=np.int32)
        where = np.argwhere(self.mul == self.identity)
        for a, b in where:
            inv[a] = b
        for a in range(self.order):
            b = inv[a]
            if b < 0 or self.mul[a, b] != self.identity or self.mul[b, a] != self.identity:
                raise AlgebraError(f"element {a} has no two-sided inverse")
        return inv

    def _verify_associativity(self) -> None:
        n = self.order
        t = self.mul
        if n <= 200:
            left = t[t]            # left[a,b,c] = (a*b)*c
            right = t[:, t]        # right[a,b,c] = a*(b*c)
            if not (left == right).all():
                raise AlgebraError("multiplication table is not associative")
        else:
            rng = random.Random(0xA55)
            for _ in range(20000):
                a = rng.randrange(n)
                b = rng.randrange(n)
                c = rng.randrange(n)
                if t[t[a, b], c] != t[a, t[b, c]]:
                    raise AlgebraError("multiplication table is not associative")

    # -- convenience ----------------------------------------------------

    def op(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inv[a])

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.op(x, a)
            k += 1
        return k

    def involutions(self) -> list[int]:
        """Elements of order exactly two."""
        return [
            a for a in range(self.order)
            if a != self.identity and self.inv[a] == a
        ]

    def name_of(self, a: int) -> str:
        return self.element_names[a]

    def index_of(self, name: str) -> int:
        try:
            return self.element_names.index(name)
        except ValueError:
            raise AlgebraError(f"unknown element literal {name!r}") from None

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


def _group_from_elements(elements, compose, name, namer=None) -> FiniteGroup:
    """Build a table from hashable element values and a composition map."""
    if len(elements) > _TABLE_CAP:
        raise GroupTooLargeError(
            f"order {len(elements)} exceeds the table cap {_TABLE_CAP}"
        )
    index = {g: i for i, g in enumerate(elements)}
    if len(index) != len(elements):
        raise AlgebraError("duplicate elements")
    n = len(elements)
    table = np.empty((n, n), dtype=np.int32)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            table[i, j] = index[compose(a, b)]
    names = [namer(g) if namer else str(g) for g in elements]
    return FiniteGroup(table, name, names)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise AlgebraError("order must be positive")
    table = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return FiniteGroup(table, f"Z{n}", [str(i) for i in range(n)])


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group given by its ORDER (2m): symmetries of an m-gon.

    Elements are Rot(k) and Ref(k) for 0 <= k < m, acting on vertex labels
    0..m-1 placed clockwise: Rot(k) sends p to p - k (a counter-clockwise
    turn), Ref(k) reflects about the axis through vertex k.  Products are
    function composition, (a*b)(p) = a(b(p)); this convention reproduces
    the published diameter of the order-72 dihedral lift.
    """
    if order < 2 or order % 2:
        raise AlgebraError("dihedral order must be even and >= 2")
    m = order // 2
    elements = [("rot", k) for k in range(m)] + [("ref", k) for k in range(m)]

    def as_perm(g):
        kind, k = g
        if kind == "rot":
            return tuple((p - k) % m for p in range(m))
        return tuple((2 * k - p) % m for p in range(m))

    perm_of = {g: as_perm(g) for g in elements}
    elt_of_perm = {p: g for g, p in perm_of.items()}

    def compose(a, b):
        pa, pb = perm_of[a], perm_of[b]
        return elt_of_perm[tuple(pa[pb[p]] for p in range(m))]

    def namer(g):
        return ("Rot(%d)" if g[0] == "rot" else "Ref(%d)") % g[1]

    return _group_from_elements(elements, compose, f"D(order {order})", namer)


def semidirect_cyclic(m: int, k: int, t: int) -> FiniteGroup:
    """Z_m : Z_k with the action x -> t*x; requires t^k = 1 (mod m).

    Elements are pairs (x, y); (x1,y1)*(x2,y2) = (x1 + t^y1 x2 mod m,
    y1 + y2 mod k).
    """
    if m < 1 or k < 1:
        raise AlgebraError("factor orders must be positive")
    if math.gcd(t, m) != 1 or pow(t, k, m) != 1:
        raise InvalidActionError(f"t={t} is not an order-dividing unit: t^{k} != 1 (mod {m})")
    elements = [(x, y) for x in range(m) for y in range(k)]

    def compose(a, b):
        x1, y1 = a
        x2, y2 = b
        return ((x1 + pow(t, y1, m) * x2) % m, (y1 + y2) % k)

    return _group_from_elements(
        elements, compose, f"Z{m}:Z{k} (t={t})", lambda g: f"{g[0]},{g[1]}"
    )


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    if g.order * h.order > _TABLE_CAP:
        raise GroupTooLargeError("product order exceeds the table cap")
    n = g.order * h.order
    a = np.arange(n)
    ga, ha = a // h.order, a % h.order
    table = g.mul[np.ix_(ga, ga)] * h.order + h.mul[np.ix_(ha, ha)]
    names = [
        f"({g.element_names[i]}|{h.element_names[j]})"
        for i in range(g.order)
        for j in range(h.order)
    ]
    return FiniteGroup(table, f"{g.name} x {h.name}", names)


def alternating5() -> FiniteGroup:
    """A5 as even permutations of 5 points."""
    elements = [p for p in itertools.permutations(range(5)) if _is_even(p)]

    def compose(a, b):
        return tuple(b[a[i]] for i in range(5))

    return _group_from_elements(elements, compose, "A5",
                                lambda p: "".join(map(str, p)))


def _is_even(p) -> bool:
    inv = sum(
        1
        for i in range(len(p))
        for j in range(i + 1, len(p))
        if p[i] > p[j]
    )
    return inv % 2 == 0


# GF(8) as polynomials over GF(2) modulo x^3 + x + 1 (bitmask encoding)
def _gf8_mul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & 0b1000:
            a ^= 0b1011
    return r


def agl1_8() -> FiniteGroup:
    """AGL(1,8): maps x -> a x + b over GF(8), a != 0.  Order 56."""
    elements = [(a, b) for a in range(1, 8) for b in range(8)]

    def compose(f, g):
        # apply f then g: x -> g_a (f_a x + f_b) + g_b
        fa, fb = f
        ga, gb = g
        return (_gf8_mul(ga, fa), _gf8_mul(ga, fb) ^ gb)

    return _group_from_elements(elements, compose, "AGL(1,8)",
                                lambda e: f"{e[0]}x+{e[1]}")


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    for p in range(2, int(q ** 0.5) + 1):
        if q % p == 0:
            return False
    return True


def _projective_matrices(q: int, det_square: bool):
    """Canonical 2x2 matrices over GF(q) modulo scalars."""
    squares = {(x * x) % q for x in range(1, q)}
    elements = []
    for a, b, c, d in itertools.product(range(q), repeat=4):
        det = (a * d - b * c) % q
        if det == 0:
            continue
        if det_square and det not in squares:
            continue
        first = next(x for x in (a, b, c, d) if x)
        if first != 1:
            continue  # scalar-normalized representative
        elements.append((a, b, c, d))
    return elements


def _pgl_compose(q: int):
    def compose(m1, m2):
        a1, b1, c1, d1 = m1
        a2, b2, c2, d2 = m2
        a = (a1 * a2 + b1 * c2) % q
        b = (a1 * b2 + b1 * d2) % q
        c = (c1 * a2 + d1 * c2) % q
        d = (c1 * b2 + d1 * d2) % q
        first = next(x for x in (a, b, c, d) if x)
        s = pow(first, q - 2, q)
        return ((a * s) % q, (b * s) % q, (c * s) % q, (d * s) % q)

    return compose


def pgl2(q: int) -> FiniteGroup:
    """PGL(2,q) for prime q <= 31 (subject to the table cap)."""
    if not _is_prime(q) or q > 31:
        raise UnsupportedFieldError("q must be a prime <= 31")
    elements = _projective_matrices(q, det_square=False)
    return _group_from_elements(elements, _pgl_compose(q), f"PGL(2,{q})")


def psl2(q: int) -> FiniteGroup:
    """PSL(2,q) for prime q <= 31 (subject to the table cap)."""
    if not _is_prime(q) or q > 31:
        raise UnsupportedFieldError("q must be a prime <= 31")
    elements = _projective_matrices(q, det_square=True)
    return _group_from_elements(elements, _pgl_compose(q), f"PSL(2,{q})")


# ---------------------------------------------------------------------------
# Cayley mixed graphs
# ---------------------------------------------------------------------------

def cayley_mixed(group: FiniteGroup, s1, s2) -> MixedGraph:
    """Cay(G, S1 | S2): edges w ~ w*s for s in S1, arcs w -> w*s for s in S2.

    S1 must be inverse-closed and identity-free; S2 must avoid its own
    inverses.  A non-generating union just yields a disconnected graph.
    """
    s1 = sorted(set(s1))
    s2 = sorted(set(s2))
    for s in s1:
        if group.inverse(s) not in s1 or s == group.identity:
            raise S1NotSymmetricError("S1 must be inverse-closed and exclude the identity")
    for s in s2:
        if group.inverse(s) in s2:
            raise S2MeetsInverseError("S2 must be disjoint from its inverses")
    edges = set()
    arcs = []
    for w in range(group.order):
        for s in s1:
            edges.add(tuple(sorted((w, group.op(w, s)))))
        for s in s2:
            arcs.append((w, group.op(w, s)))
    return MixedGraph(group.order, sorted(edges), arcs)


def cayley_search(group: FiniteGroup, target_k: int):
    """All (involution, generator) pairs whose Cayley graph has diameter
    <= target_k, deduplicated by canonical form.

    Returns [(s, a, diameter)] sorted by (diameter, s, a).
    """
    invs = group.involutions()
    if not invs:
        raise NoInvolutionError(f"{group.name} has no involution")
    found = []
    seen = set()
    for s in invs:
        for a in range(group.order):
            if a == group.identity or group.inverse(a) == a:
                continue
            g = cayley_mixed(group, [s], [a])
            diam = g.diameter()
            if diam <= target_k:
                form = canon.canonical_form(g)
                if form not in seen:
                    seen.add(form)
                    found.append((s, a, int(diam)))
    return sorted(found, key=lambda t: (t[2], t[0], t[1]))


# ---------------------------------------------------------------------------
# voltage lifts
# ---------------------------------------------------------------------------

@dataclass
class VoltageBaseGraph:
    """A small mixed base graph with group voltages on every carrier.

    Carriers are edges {u,v}, arcs (u,v) (including directed loops) and
    undirected loops at a vertex.  Undirected loops must carry involutory
    voltages or the lift has no 1-regular undirected part.
    """

    n: int
    edges: list = field(default_factory=list)   # ((u, v), voltage)
    arcs: list = field(default_factory=list)    # ((u, v), voltage)
    uloops: list = field(default_factory=list)  # (u, voltage)

    def carriers(self):
        """(kind, site) for every voltage carrier, in file order."""
        return (
            [("e", (u, v)) for ((u, v), _) in self.edges]
            + [("a", (u, v)) for ((u, v), _) in self.arcs]
            + [("uloop", u) for (u, _) in self.uloops]
        )

    def validate(self, group: FiniteGroup) -> None:
        for (u, v), _ in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
                raise GraphError(f"bad base edge ({u},{v})")
        for (u, v), _ in self.arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"bad base arc ({u},{v})")
        for u, h in self.uloops:
            if not 0 <= u < self.n:
                raise GraphError(f"bad base loop at {u}")
            if h == group.identity or group.inverse(h) != h:
                raise NonInvolutoryLoopVoltageError(
                    f"undirected loop at {u} carries a non-involutory voltage"
                )


def lift(vb: VoltageBaseGraph, group: FiniteGroup) -> MixedGraph:
    """The lift: vertices (u, g); each carrier is translated across the group.

    Arc (u,v) with voltage s gives arcs (u,g) -> (v, g*s); edge {u,v} gives
    edges {(u,g), (v, g*s)}; an undirected loop at u with involution h gives
    edges {(u,g), (u, g*h)}.
    """
    vb.validate(group)
    n = group.order

    def vid(u: int, g: int) -> int:
        return u * n + g

    edges = set()
    arcs = []
    for (u, v), s in vb.edges:
        for g in range(n):
            a, b = vid(u, g), vid(v, group.op(g, s))
            edges.add((a, b) if a < b else (b, a))
    for u, h in vb.uloops:
        for g in range(n):
            a, b = vid(u, g), vid(u, group.op(g, h))
            edges.add((a, b) if a < b else (b, a))
    for (u, v), s in vb.arcs:
        for g in range(n):
            arcs.append((vid(u, g), vid(v, group.op(g, s))))
    return MixedGraph(vb.n * n, sorted(edges), arcs)


def lift_vertex_labels(vb: VoltageBaseGraph, group: FiniteGroup) -> list[str]:
    return [
        f"{u}:{group.name_of(g)}"
        for u in range(vb.n)
        for g in range(group.order)
    ]


def fig7_base(group: FiniteGroup) -> VoltageBaseGraph:
    """The published 4-vertex base of the order-72 diameter-8 lift over the
    dihedral group of order 18 (vertices A,B,C,D = 0,1,2,3)."""
    r = group.index_of
    return VoltageBaseGraph(
        n=4,
        edges=[((0, 3), r("Rot(3)"))],
        arcs=[
            ((0, 1), r("Rot(8)")),
            ((1, 2), r("Ref(2)")),
            ((2, 3), r("Ref(0)")),
            ((3, 3), r("Rot(4)")),
        ],
        uloops=[(1, r("Ref(1)")), (2, r("Ref(4)"))],
    )


def fig8_base_shape() -> VoltageBaseGraph:
    """The 4-vertex base shape of the published order-544 diameter-13 lift:
    a directed 4-cycle with edges across {v1,v2} and {v3,v4}.  Voltages are
    left as identities; the published assignment is not available."""
    return VoltageBaseGraph(
        n=4,
        edges=[((0, 1), 0), ((2, 3), 0)],
        arcs=[((0, 1), 0), ((1, 2), 0), ((2, 3), 0), ((3, 0), 0)],
        uloops=[],
    )


def cayley_as_lift(group: FiniteGroup, s1, s2) -> MixedGraph:
    """Cay(G, S1|S2) realized as a lift of a one-vertex base with loops."""
    seen = set()
    uloops = []
    for s in s1:
        key = frozenset((s, group.inverse(s)))
        if key not in seen:
            seen.add(key)
            uloops.append((0, s))
    vb = VoltageBaseGraph(
        n=1,
        edges=[],
        arcs=[((0, 0), s) for s in sorted(set(s2))],
        uloops=uloops,
    )
    return lift(vb, group)


@dataclass
class VoltageSearchResult:
    """Best lift diameter found over a voltage-assignment space."""

    best_diameter: int | None
    best_assignments: list  # assignments achieving best_diameter, capped
    examined: int
    exhaustive: bool
    target_k: int

    @property
    def reached_target(self) -> bool:
        return self.best_diameter is not None and self.best_diameter <= self.target_k


def voltage_search(shape: VoltageBaseGraph, group: FiniteGroup, target_k: int,
                   budget: int = 10000, seed: int | None = None,
                   keep: int = 25) -> VoltageSearchResult:
    """Search voltage assignments on a base shape, ranked by lift diameter.

    A spanning tree of the shape is gauged to the identity.  The remaining
    carriers are enumerated exhaustively when the assignment space fits in
    the budget; otherwise they are sampled, which requires a seed.  An
    assignment maps carrier index (in carriers() order) to a group element.
    """
    carriers = shape.carriers()
    tree = _gauge_tree(shape)
    free = [i for i in range(len(carriers)) if i not in tree]
    domains = []
    for i in free:
        kind, _ = carriers[i]
        if kind == "uloop":
            domains.append(group.involutions())
        else:
            domains.append(list(range(group.order)))
    space = 1
    for d in domains:
        space *= len(d)
    exhaustive = space <= budget

    if exhaustive:
        combos = itertools.product(*domains)
    else:
        if seed is None:
            raise AlgebraError("sampled voltage search requires a seed")
        rng = random.Random(seed)
        combos = (
            tuple(rng.choice(d) for d in domains) for _ in range(budget)
        )

    order = group.order
    mul_cols = [[int(x) for x in group.mul[:, s]] for s in range(order)]
    n_lift = shape.n * order
    examined = 0
    best = None
    best_assignments: list = []
    for combo in combos:
        examined += 1
        assignment = {i: group.identity for i in tree}
        assignment.update(zip(free, combo))
        rows = [0] * n_lift
        for ci, (kind, site) in enumerate(carriers):
            col = mul_cols[assignment[ci]]
            if kind == "a":
                u, v = site
                for g in range(order):
                    rows[u * order + g] |= 1 << (v * order + col[g])
            elif kind == "e":
                u, v = site
                for g in range(order):
                    a, b = u * order + g, v * order + col[g]
                    rows[a] |= 1 << b
                    rows[b] |= 1 << a
            else:
                u = site
                for g in range(order):
                    a, b = u * order + g, u * order + col[g]
                    rows[a] |= 1 << b
                    rows[b] |= 1 << a
        diam = _rows_diameter(rows, n_lift)
        if diam is None:
            continue
        if best is None or diam < best:
            best = diam
            best_assignments = [tuple(sorted(assignment.items()))]
        elif diam == best and len(best_assignments) < keep:
            best_assignments.append(tuple(sorted(assignment.items())))
    return VoltageSearchResult(best, best_assignments, examined, exhaustive, target_k)


def _rows_diameter(rows: list[int], n: int) -> int | None:
    """Exact diameter of the digraph given by adjacency bit rows."""
    full = (1 << n) - 1
    worst = 0
    for s in range(n):
        seen = 1 << s
        frontier = seen
        depth = 0
        while seen != full:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                nxt |= rows[b.bit_length() - 1]
                m ^= b
            nxt &= ~seen
            if not nxt:
                return None
            seen |= nxt
            frontier = nxt
            depth += 1
        if depth > worst:
            worst = depth
    return worst


def _gauge_tree(shape: VoltageBaseGraph) -> set[int]:
    """Indices of carriers forming a spanning tree (gauge freedom)."""
    parent = list(range(shape.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree = set()
    for i, (kind, site) in enumerate(shape.carriers()):
        if kind == "uloop":
            continue
        u, v = site
        if u == v:
            continue
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            tree.add(i)
    return tree


def apply_assignment(shape: VoltageBaseGraph, assignment) -> VoltageBaseGraph:
    """Rebuild a voltage base graph from a carrier-index assignment."""
    return _apply_assignment(shape, dict(assignment))


def _apply_assignment(shape: VoltageBaseGraph, assignment: dict) -> VoltageBaseGraph:
    carriers = shape.carriers()
    edges, arcs, uloops = [], [], []
    for i, (kind, site) in enumerate(carriers):
        volt = assignment[i]
        if kind == "e":
            edges.append((site, volt))
        elif kind == "a":
            arcs.append((site, volt))
        else:
            uloops.append((site, volt))
    return VoltageBaseGraph(shape.n, edges, arcs, uloops)
