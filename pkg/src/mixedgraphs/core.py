"""Mixed-graph data model: graphs with both undirected edges and directed arcs.

A mixed graph on vertices 0..n-1 carries a set of edges (unordered pairs,
traversable both ways) and a set of arcs (ordered pairs, traversable forward
only).  Distances count every traversed edge or arc as one step.  Self-loops
are permitted as arcs (u, u); edges must join distinct vertices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

INFINITY = float("inf")


class GraphError(ValueError):
    """Base class for mixed-graph construction and usage errors."""


class DuplicateElementError(GraphError):
    """An edge or arc was supplied more than once."""


class EdgeDigonClashError(GraphError):
    """A pair of vertices is joined both by an edge and by a digon."""


class IndexOutOfRangeError(GraphError):
    """A vertex index is outside 0..n-1."""


class NotAPerfectMatchingError(GraphError):
    """Edge contraction requires the edge set to be a perfect matching."""


class DiameterExceedsKError(GraphError):
    """Distance matrices were requested for k below the actual diameter."""


class TooLargeError(GraphError):
    """The graph exceeds a configured size cap for this operation."""


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class MixedGraph:
    """Immutable mixed graph with O(degree) adjacency queries.

    Adjacency is stored as sorted per-vertex tuples (edge neighbours,
    out-neighbours, in-neighbours); at the degrees used here arrays beat
    hash sets for BFS.
    """

    __slots__ = ("n", "edges", "arcs", "_enbr", "_out", "_in")

    def __init__(self, n: int, edges: Iterable, arcs: Iterable):
        if n < 0:
            raise IndexOutOfRangeError("vertex count must be non-negative")
        self.n = n

        eset: set[tuple[int, int]] = set()
        for pair in edges:
            u, v = pair
            self._check_index(u)
            self._check_index(v)
            if u == v:
                raise GraphError(f"edge endpoints must differ, got {{{u},{v}}}")
            e = _normalize_edge(u, v)
            if e in eset:
                raise DuplicateElementError(f"duplicate edge {{{u},{v}}}")
            eset.add(e)

        aset: set[tuple[int, int]] = set()
        for pair in arcs:
            u, v = pair
            self._check_index(u)
            self._check_index(v)
            a = (u, v)
            if a in aset:
                raise DuplicateElementError(f"duplicate arc ({u},{v})")
            aset.add(a)

        for (u, v) in aset:
            if u < v and (v, u) in aset and (u, v) in eset:
                raise EdgeDigonClashError(
                    f"pair {{{u},{v}}} appears both as an edge and as a digon"
                )

        self.edges = frozenset(eset)
        self.arcs = frozenset(aset)

        enbr: list[list[int]] = [[] for _ in range(n)]
        out: list[list[int]] = [[] for _ in range(n)]
        inn: list[list[int]] = [[] for _ in range(n)]
        for (u, v) in eset:
            enbr[u].append(v)
            enbr[v].append(u)
        for (u, v) in aset:
            out[u].append(v)
            inn[v].append(u)
        self._enbr = tuple(tuple(sorted(s)) for s in enbr)
        self._out = tuple(tuple(sorted(s)) for s in out)
        self._in = tuple(tuple(sorted(s)) for s in inn)

    def _check_index(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexOutOfRangeError(f"vertex {v} out of range 0..{self.n - 1}")

    # -- degrees and neighbourhoods ------------------------------------

    def edge_neighbors(self, v: int) -> tuple[int, ...]:
        return self._enbr[v]

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def undirected_degree(self, v: int) -> int:
        return len(self._enbr[v])

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    def is_totally_regular(self, r: int, z: int) -> bool:
        """True iff every vertex has undirected degree r and in- = out-degree z."""
        return all(
            len(self._enbr[v]) == r
            and len(self._out[v]) == z
            and len(self._in[v]) == z
            for v in range(self.n)
        )

    def digons_and_loops(self) -> tuple[int, int]:
        """Count of opposite arc pairs and of self-loops."""
        loops = sum(1 for (u, v) in self.arcs if u == v)
        digons = sum(
            1 for (u, v) in self.arcs if u < v and (v, u) in self.arcs
        )
        return digons, loops

    # -- distances ------------------------------------------------------

    def bfs(self, source: int) -> "DistanceTable":
        """Shortest mixed-path distances: edges both ways, arcs forward only."""
        self._check_index(source)
        dist: list[int | None] = [None] * self.n
        dist[source] = 0
        queue = deque([source])
        enbr, out = self._enbr, self._out
        while queue:
            u = queue.popleft()
            d = dist[u] + 1
            for w in enbr[u]:
                if dist[w] is None:
                    dist[w] = d
                    queue.append(w)
            for w in out[u]:
                if dist[w] is None:
                    dist[w] = d
                    queue.append(w)
        return DistanceTable(source, tuple(dist))

    def eccentricity(self, source: int) -> int | float:
        return self.bfs(source).eccentricity()

    def diameter(self) -> int | float:
        """Max distance over ordered pairs; INFINITY if not strongly connected."""
        best = 0
        for s in range(self.n):
            ecc = self.bfs(s).eccentricity()
            if ecc == INFINITY:
                return INFINITY
            if ecc > best:
                best = ecc
        return best

    def is_strongly_connected(self) -> bool:
        if self.n == 0:
            return True
        if None in self.bfs(0).dist:
            return False
        # reverse reachability: edges stay, arcs flip
        rev = MixedGraph(self.n, self.edges, [(v, u) for (u, v) in self.arcs])
        return None not in rev.bfs(0).dist

    def weak_components(self) -> list[frozenset[int]]:
        """Connected components of the underlying undirected skeleton."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = []
            queue = deque([s])
            seen[s] = True
            while queue:
                u = queue.popleft()
                comp.append(u)
                for w in self._enbr[u] + self._out[u] + self._in[u]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
            comps.append(frozenset(comp))
        return comps

    def adjacency_matrix(self) -> np.ndarray:
        """0/1 adjacency: an edge contributes symmetric entries, an arc one."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for (u, v) in self.edges:
            a[u, v] = 1
            a[v, u] = 1
        for (u, v) in self.arcs:
            a[u, v] = 1
        return a

    def distance_matrices(self, k: int) -> list[np.ndarray]:
        """Distance matrices A_0..A_k; A_0 = I, A_1 = adjacency.

        Raises DiameterExceedsKError if some ordered pair is farther than k
        (or unreachable).
        """
        mats = [np.zeros((self.n, self.n), dtype=np.int64) for _ in range(k + 1)]
        for s in range(self.n):
            for v, d in enumerate(self.bfs(s).dist):
                if d is None or d > k:
                    raise DiameterExceedsKError(
                        f"pair ({s},{v}) is farther than k={k}"
                    )
                mats[d][s, v] = 1
        return mats

    # -- structure ------------------------------------------------------

    def contract_edges(self) -> "ColoredDigraph":
        """Contract a perfect-matching edge set; parallel arcs merge.

        Returns an uncoloured digraph with one vertex per edge.
        """
        if self.n % 2 or any(len(self._enbr[v]) != 1 for v in range(self.n)):
            raise NotAPerfectMatchingError("edge set is not a perfect matching")
        rep = [0] * self.n
        classes = sorted(self.edges)
        for i, (u, v) in enumerate(classes):
            rep[u] = i
            rep[v] = i
        arcs = {(rep[u], rep[v]) for (u, v) in self.arcs}
        return ColoredDigraph(len(classes), {a: None for a in sorted(arcs)})

    def relabel(self, perm: Sequence[int]) -> "MixedGraph":
        """Image under the permutation v -> perm[v]."""
        return MixedGraph(
            self.n,
            [(perm[u], perm[v]) for (u, v) in self.edges],
            [(perm[u], perm[v]) for (u, v) in self.arcs],
        )

    def canonical_form(self, two_color: bool | None = None) -> "CanonicalForm":
        from . import canon

        return canon.canonical_form(self, two_color=two_color)

    def automorphism_count(self, cap: int = 256) -> int:
        from . import canon

        return canon.automorphism_count(self, cap=cap)

    # -- plain-text format ----------------------------------------------

    def to_text(self) -> str:
        lines = [f"mixed {self.n}"]
        lines += [f"e {u} {v}" for (u, v) in sorted(self.edges)]
        lines += [f"a {u} {v}" for (u, v) in sorted(self.arcs)]
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str) -> "MixedGraph":
        n = None
        edges: list[tuple[int, int]] = []
        arcs: list[tuple[int, int]] = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "mixed":
                if n is not None:
                    raise GraphError("repeated 'mixed' header")
                n = int(parts[1])
            elif parts[0] == "e":
                edges.append((int(parts[1]), int(parts[2])))
            elif parts[0] == "a":
                arcs.append((int(parts[1]), int(parts[2])))
            else:
                raise GraphError(f"unrecognized line: {raw!r}")
        if n is None:
            raise GraphError("missing 'mixed <n>' header")
        return MixedGraph(n, edges, arcs)

    # -- misc -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MixedGraph)
            and self.n == other.n
            and self.edges == other.edges
            and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges, self.arcs))

    def __repr__(self) -> str:
        return f"MixedGraph(n={self.n}, edges={len(self.edges)}, arcs={len(self.arcs)})"


def build(n: int, edges: Iterable, arcs: Iterable) -> MixedGraph:
    """Validate and build a mixed graph (constructor alias)."""
    return MixedGraph(n, edges, arcs)


@dataclass(frozen=True)
class DistanceTable:
    """BFS distances from one source; None marks an unreachable vertex."""

    source: int
    dist: tuple

    def eccentricity(self) -> int | float:
        if any(d is None for d in self.dist):
            return INFINITY
        return max(self.dist) if self.dist else 0

    def __getitem__(self, v: int):
        return self.dist[v]


BLUE = "blue"
RED = "red"


class ColoredDigraph:
    """Digraph whose arcs may carry a blue/red 2-colouring.

    `arcs` maps (u, v) to BLUE, RED or None (uncoloured).  A proper
    1-factorization means each colour class is a spanning permutation.
    """

    __slots__ = ("n", "arcs", "_out", "_in")

    def __init__(self, n: int, arcs):
        self.n = n
        if not isinstance(arcs, dict):
            arcs = {a: None for a in arcs}
        self.arcs = dict(arcs)
        out: list[list[int]] = [[] for _ in range(n)]
        inn: list[list[int]] = [[] for _ in range(n)]
        for (u, v), color in self.arcs.items():
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRangeError(f"arc ({u},{v}) out of range")
            if color not in (BLUE, RED, None):
                raise GraphError(f"bad arc color {color!r}")
            out[u].append(v)
            inn[v].append(u)
        self._out = tuple(tuple(sorted(s)) for s in out)
        self._in = tuple(tuple(sorted(s)) for s in inn)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def color(self, u: int, v: int):
        return self.arcs[(u, v)]

    def is_one_factorized(self) -> bool:
        """Each colour class must be a 1-regular spanning subdigraph."""
        for color in (BLUE, RED):
            outd = [0] * self.n
            ind = [0] * self.n
            for (u, v), c in self.arcs.items():
                if c == color:
                    outd[u] += 1
                    ind[v] += 1
            if any(d != 1 for d in outd) or any(d != 1 for d in ind):
                return False
        return len(self.arcs) == 2 * self.n

    def is_strongly_connected(self) -> bool:
        return self.as_mixed().is_strongly_connected()

    def diameter(self) -> int | float:
        return self.as_mixed().diameter()

    def as_mixed(self, digons_to_edges: bool = False) -> MixedGraph:
        """View as a mixed graph.

        With digons_to_edges, every opposite arc pair becomes one edge
        (the convention used when a symmetric digraph is read as a mixed
        graph); otherwise arcs are kept verbatim and the edge set is empty.
        """
        if not digons_to_edges:
            return MixedGraph(self.n, [], list(self.arcs))
        edges = []
        arcs = []
        for (u, v) in self.arcs:
            if u < v and (v, u) in self.arcs:
                edges.append((u, v))
            elif (v, u) not in self.arcs or u == v:
                arcs.append((u, v))
        return MixedGraph(self.n, edges, arcs)

    def canonical_form(self):
        from . import canon

        return canon.canonical_form_digraph(self)

    def __repr__(self) -> str:
        return f"ColoredDigraph(n={self.n}, arcs={len(self.arcs)})"
