"""Canonical forms and automorphism counting for (colored) digraphs.

One engine serves both mixed graphs and digraphs.  A graph is presented as a
list of arc relations ("colors"); canonicalization runs partition refinement
plus backtracking over individualizations, returning the lexicographically
smallest relabeled image (nauty-style, with a node-invariant ordering and
automorphism-based orbit pruning at the root).

Mixed graphs use two encodings, selected by digon content:
  - digon-free graphs become a plain digraph where each edge is a digon
    (faithful because real digons are excluded), matching the digraph6 view;
  - graphs with digons keep two relations: symmetrized edges vs. arcs.
The returned byte strings embed the encoding route, so values from the two
routes never collide.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import MixedGraph, ColoredDigraph, TooLargeError


@dataclass(frozen=True)
class CanonicalForm:
    """Byte string equal for two graphs iff they are isomorphic."""

    data: bytes

    def __lt__(self, other: "CanonicalForm") -> bool:
        return self.data < other.data

    def hex(self) -> str:
        return self.data.hex()


# ---------------------------------------------------------------------------
# search engine
# ---------------------------------------------------------------------------

class _Canonizer:
    def __init__(self, n: int, relations):
        self.n = n
        self.rels = []
        for rel in relations:
            out = [set() for _ in range(n)]
            inn = [set() for _ in range(n)]
            for (u, v) in rel:
                out[u].add(v)
                inn[v].add(u)
            self.rels.append((out, inn))
        # best = (trace, encoding, labeling); canonical = minimum over leaves
        self.best_trace = None
        self.best_enc = None
        self.best_lab = None
        self.aut_parent = list(range(n))  # union-find over discovered orbits

    # -- union-find for root orbit pruning --

    def _find(self, x: int) -> int:
        p = self.aut_parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def _union(self, a: int, b: int) -> None:
        ra, rb = self._find(a), self._find(b)
        if ra != rb:
            self.aut_parent[ra] = rb

    # -- refinement --

    def refine(self, cells: list[list[int]]) -> list[list[int]]:
        n = self.n
        while True:
            pos = [0] * n
            for ci, cell in enumerate(cells):
                for v in cell:
                    pos[v] = ci
            sigs = {}
            for v in range(n):
                sig = []
                for (out, inn) in self.rels:
                    oc: dict[int, int] = {}
                    for w in out[v]:
                        oc[pos[w]] = oc.get(pos[w], 0) + 1
                    ic: dict[int, int] = {}
                    for w in inn[v]:
                        ic[pos[w]] = ic.get(pos[w], 0) + 1
                    sig.append((tuple(sorted(oc.items())), tuple(sorted(ic.items()))))
                sigs[v] = tuple(sig)
            new_cells: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                groups: dict[tuple, list[int]] = {}
                for v in cell:
                    groups.setdefault(sigs[v], []).append(v)
                for key in sorted(groups):
                    new_cells.append(groups[key])
            if len(new_cells) == len(cells):
                return new_cells
            cells = new_cells

    # -- leaf handling --

    def _encode(self, lab: list[int]) -> tuple:
        return tuple(
            tuple(sorted((lab[u], lab[v]) for u in range(self.n) for v in out[u]))
            for (out, _) in self.rels
        )

    def _leaf(self, cells: list[list[int]], trace: tuple) -> None:
        lab = [0] * self.n
        for i, cell in enumerate(cells):
            lab[cell[0]] = i
        enc = self._encode(lab)
        key = (trace, enc)
        if self.best_enc is None or key < (self.best_trace, self.best_enc):
            self.best_trace, self.best_enc, self.best_lab = trace, enc, lab
        elif key == (self.best_trace, self.best_enc):
            # equal images give an automorphism: v -> best_lab^{-1}[lab[v]]
            inv = [0] * self.n
            for v, p in enumerate(self.best_lab):
                inv[p] = v
            for v in range(self.n):
                self._union(v, inv[lab[v]])

    def _search(self, cells: list[list[int]], trace: tuple, depth: int) -> None:
        cells = self.refine(cells)
        trace = trace + (tuple(len(c) for c in cells),)
        # every leaf below extends `trace`, so a branch whose trace already
        # compares greater than the best leaf's trace cannot hold the minimum
        if self.best_trace is not None and trace > self.best_trace:
            return
        target = None
        for ci, cell in enumerate(cells):
            if len(cell) > 1:
                target = ci
                break
        if target is None:
            self._leaf(cells, trace)
            return
        tried_roots: list[int] = []
        for v in cells[target]:
            if depth == 0:
                # orbit pruning is sound at the root, where the stabilizer
                # of the (empty) path is the full discovered group
                if any(self._find(v) == self._find(t) for t in tried_roots):
                    continue
                tried_roots.append(v)
            branch = (
                cells[:target]
                + [[v], [w for w in cells[target] if w != v]]
                + cells[target + 1:]
            )
            self._search(branch, trace, depth + 1)

    def run(self) -> list[int]:
        if self.n == 0:
            self.best_lab = []
            self.best_enc = tuple(() for _ in self.rels)
            return []
        self._search([list(range(self.n))], (), 0)
        return self.best_lab


def canonical_labeling(n: int, relations) -> list[int]:
    """lab[v] = canonical position of v."""
    return _Canonizer(n, relations).run()


def _pack_bits(bits: list[int]) -> bytes:
    out = bytearray()
    acc = 0
    k = 0
    for b in bits:
        acc = (acc << 1) | b
        k += 1
        if k == 8:
            out.append(acc)
            acc, k = 0, 0
    if k:
        out.append(acc << (8 - k))
    return bytes(out)


def canonical_bytes(n: int, relations) -> bytes:
    """Canonical byte string of a digraph with colored arc relations."""
    lab = canonical_labeling(n, relations)
    chunks = [b"%d;%d" % (n, len(relations))]
    for rel in relations:
        mat = [0] * (n * n)
        for (u, v) in rel:
            mat[lab[u] * n + lab[v]] = 1
        chunks.append(_pack_bits(mat))
    return b"|".join(chunks)


# ---------------------------------------------------------------------------
# public surface for MixedGraph / ColoredDigraph
# ---------------------------------------------------------------------------

def _mixed_relations(g: MixedGraph, two_color: bool | None):
    has_digon = g.digons_and_loops()[0] > 0
    if two_color is None:
        two_color = has_digon
    if not two_color and has_digon:
        raise ValueError(
            "single-relation canonicalization requires a digon-free graph"
        )
    if two_color:
        sym = [(u, v) for (u, v) in g.edges] + [(v, u) for (u, v) in g.edges]
        return "M2", [sym, list(g.arcs)]
    rel = [(v, u) for (u, v) in g.edges] + [(u, v) for (u, v) in g.edges]
    rel += list(g.arcs)
    return "M1", [rel]


def canonical_form(g: MixedGraph, two_color: bool | None = None) -> CanonicalForm:
    """Canonical form of a mixed graph (edge/arc-type preserving)."""
    route, rels = _mixed_relations(g, two_color)
    return CanonicalForm(route.encode() + b":" + canonical_bytes(g.n, rels))


def canonical_form_digraph(d: ColoredDigraph) -> CanonicalForm:
    """Canonical form of a digraph; blue/red classes (if any) are preserved."""
    colors = {c for c in d.arcs.values()}
    if colors <= {None}:
        rels = [list(d.arcs)]
        route = b"D1"
    else:
        by = {c: [] for c in ("blue", "red", None)}
        for a, c in d.arcs.items():
            by[c].append(a)
        rels = [by["blue"], by["red"], by[None]]
        route = b"D3"
    return CanonicalForm(route + b":" + canonical_bytes(d.n, rels))


def isomorphic(g1: MixedGraph, g2: MixedGraph) -> bool:
    return canonical_form(g1) == canonical_form(g2)


def automorphism_count(g: MixedGraph, cap: int = 256) -> int:
    """Order of the edge/arc-preserving automorphism group."""
    if g.n > cap:
        raise TooLargeError(f"n={g.n} exceeds automorphism cap {cap}")
    _, rels = _mixed_relations(g, None)
    return automorphism_count_relations(g.n, rels)


def automorphism_count_relations(n: int, relations) -> int:
    """Count automorphisms by refinement-guided backtracking."""
    if n == 0:
        return 1
    eng = _Canonizer(n, relations)
    cells = eng.refine([list(range(n))])
    cell_of = [0] * n
    for ci, cell in enumerate(cells):
        for v in cell:
            cell_of[v] = ci

    out_sets = [out for (out, _) in eng.rels]
    in_sets = [inn for (_, inn) in eng.rels]

    # map vertices in an order that keeps each new vertex attached to the
    # already-mapped region whenever the graph is connected
    order: list[int] = []
    placed = [False] * n
    for start in range(n):
        if placed[start]:
            continue
        placed[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            order.append(u)
            nbrs: set[int] = set()
            for r in range(len(eng.rels)):
                nbrs |= out_sets[r][u] | in_sets[r][u]
            for w in sorted(nbrs):
                if not placed[w]:
                    placed[w] = True
                    queue.append(w)

    image = [-1] * n
    preimage = [-1] * n
    used = [False] * n
    count = 0

    def consistent_full(u: int, w: int) -> bool:
        for r in range(len(eng.rels)):
            ou, iu = out_sets[r][u], in_sets[r][u]
            ow, iw = out_sets[r][w], in_sets[r][w]
            if len(ou) != len(ow) or len(iu) != len(iw):
                return False
            for v in ou:
                t = image[v]
                if t >= 0 and t not in ow:
                    return False
            for v in iu:
                t = image[v]
                if t >= 0 and t not in iw:
                    return False
            for t in ow:
                v = preimage[t]
                if v >= 0 and v not in ou:
                    return False
            for t in iw:
                v = preimage[t]
                if v >= 0 and v not in iu:
                    return False
        return True

    def backtrack(i: int) -> None:
        nonlocal count
        if i == n:
            count += 1
            return
        u = order[i]
        for w in cells[cell_of[u]]:
            if used[w]:
                continue
            if consistent_full(u, w):
                image[u] = w
                preimage[w] = u
                used[w] = True
                backtrack(i + 1)
                used[w] = False
                preimage[w] = -1
                image[u] = -1

    backtrack(0)
    return count
