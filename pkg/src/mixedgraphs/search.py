"""Exhaustive searches for extremal (1,1,k)-mixed graphs.

The search space is organized around the Moore tree labeled by binary words
without two consecutive zeros: word w is joined by an edge to w0 (when w does
not already end in 0) and by an arc to w1.  A candidate graph is the tree
minus a removal set, plus a perfect matching on the vertices left without an
edge, plus one out-arc for every vertex left without one.  Candidates are
filtered by diameter and deduplicated by canonical form.

Arc completions are enumerated depth-first; a branch is pruned as soon as the
optimistic closure (unassigned sources treated as able to reach everything in
one step) fails to cover some ordered pair within k steps.  That test is
exact once every source is assigned.
"""

from __future__ import annotations

import itertools
import multiprocessing
import time
from dataclasses import dataclass, field

from . import canon
from . import _fastsearch
from .core import MixedGraph
from .bounds import moore_11, level_counts

# searches run through the compiled kernel when numba is importable; the
# pure-Python engine below is the reference implementation and fallback
USE_FAST_ENGINE = _fastsearch.HAVE_NUMBA


# ---------------------------------------------------------------------------
# Moore tree on binary words without "00"
# ---------------------------------------------------------------------------

def moore_words(k: int) -> list[str]:
    """All binary words of length <= k with no two consecutive zeros.

    Sorted by (length, lexicographic); the empty word is the root.
    """
    words = [""]
    level = [""]
    for _ in range(k):
        nxt = []
        for w in level:
            if not w.endswith("0"):
                nxt.append(w + "0")
            nxt.append(w + "1")
        nxt.sort()
        words.extend(nxt)
        level = nxt
    return words


@dataclass(frozen=True)
class MooreTree:
    """The labeled Moore tree of depth k."""

    k: int
    words: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]  # (w, w0)
    arcs: tuple[tuple[str, str], ...]   # (w, w1)

    @property
    def n(self) -> int:
        return len(self.words)

    def level_sizes(self) -> list[int]:
        sizes = [0] * (self.k + 1)
        for w in self.words:
            sizes[len(w)] += 1
        return sizes


def moore_tree(k: int) -> MooreTree:
    if k < 1:
        raise ValueError("k must be >= 1")
    words = moore_words(k)
    wset = set(words)
    edges = tuple((w, w + "0") for w in words if not w.endswith("0") and w + "0" in wset)
    arcs = tuple((w, w + "1") for w in words if w + "1" in wset)
    tree = MooreTree(k, tuple(words), edges, arcs)
    assert tree.n == moore_11(k)
    return tree


# ---------------------------------------------------------------------------
# outcome container
# ---------------------------------------------------------------------------

@dataclass
class SearchOutcome:
    """Result of one exhaustive search."""

    target_order: int
    k: int
    examined: int
    survivors: list  # [(CanonicalForm, MixedGraph)], sorted by form
    wall_time: float
    complete: bool = True

    @property
    def survivor_forms(self) -> list:
        return [f for f, _ in self.survivors]

    @property
    def survivor_graphs(self) -> list[MixedGraph]:
        return [g for _, g in self.survivors]


def _merge_survivors(chunks) -> list:
    seen = {}
    for form, graph in chunks:
        if form not in seen:
            seen[form] = graph
    return sorted(seen.items(), key=lambda p: p[0].data)


# ---------------------------------------------------------------------------
# bitset closure
# ---------------------------------------------------------------------------

def _compose(p: list[int], q: list[int]) -> list[int]:
    out = []
    for m in p:
        acc = m
        while m:
            b = m & -m
            acc |= q[b.bit_length() - 1]
            m ^= b
        out.append(acc)
    return out


def _ball_rows(rows: list[int], k: int) -> list[int]:
    """Rows of the <=k-step reachability relation (rows must include self)."""
    result = rows
    done = 1
    while done < k:
        if 2 * done <= k:
            result = _compose(result, result)
            done *= 2
        else:
            result = _compose(result, rows)
            done += 1
    return result


def _all_pairs_within(rows: list[int], k: int, full: int) -> bool:
    """True iff every vertex reaches every vertex within k steps.

    The last composition is evaluated lazily row by row so that a failing
    source aborts the check early (the common case while pruning).
    """
    if k <= 1:
        return all(r == full for r in rows)
    half = k // 2
    a = _ball_rows(rows, k - half)
    b = a if 2 * half == k else _ball_rows(rows, half)
    for m in a:
        acc = m
        while m and acc != full:
            bit = m & -m
            acc |= b[bit.bit_length() - 1]
            m ^= bit
        if acc != full:
            return False
    return True


# ---------------------------------------------------------------------------
# generic DFS over arc completions
# ---------------------------------------------------------------------------

class _ArcCompletionDFS:
    """Assign one out-arc to each source, pruning by optimistic closure.

    static_rows already contain self bits, edges (both ways) and fixed arcs.
    domains[i] lists allowed targets for sources[i] (never the source itself).
    With injective=True the completion is permutation-style (distinct targets)
    and two-cycles are forbidden; otherwise digons are allowed except across
    an edge, which would not be a valid mixed graph.
    """

    def __init__(self, n, k, static_rows, edge_mask, arc_pred_mask,
                 sources, domains, injective, budget=None):
        self.n = n
        self.k = k
        self.full = (1 << n) - 1
        self.static = static_rows
        self.edge_mask = edge_mask     # edge_mask[u] = bitmask of edge nbrs
        self.arc_pred = arc_pred_mask  # arc_pred[u] = bitmask of v with arc v->u
        self.sources = sources
        self.domains = domains
        self.injective = injective
        self.budget = budget
        self.examined = 0
        self.exhausted = False
        self.results: list[tuple[int, ...]] = []

    def run(self, first_choices=None):
        rows = list(self.static)
        for s in self.sources:
            rows[s] = self.full  # wildcard until assigned
        choices0 = list(self.domains[0]) if first_choices is None else first_choices
        self._dfs(0, rows, 0, {}, choices0)
        return self

    def _dfs(self, i, rows, used, assigned, choices):
        u = self.sources[i]
        last = i + 1 == len(self.sources)
        for t in choices:
            if self.injective and (used >> t) & 1:
                continue
            # is the reverse arc t->u already present?
            reverse = ((self.arc_pred[u] >> t) & 1) or assigned.get(t) == u
            if reverse:
                if self.injective:
                    continue  # permutation searches exclude all 2-cycles
                if (self.edge_mask[u] >> t) & 1:
                    continue  # edge + digon on one pair: not a mixed graph
            saved = rows[u]
            rows[u] = self.static[u] | (1 << t)
            assigned[u] = t
            if last:
                if self.budget is not None and self.examined >= self.budget:
                    self.exhausted = True
                else:
                    self.examined += 1
                    if _all_pairs_within(rows, self.k, self.full):
                        self.results.append(tuple(assigned[s] for s in self.sources))
            elif _all_pairs_within(rows, self.k, self.full):
                self._dfs(i + 1, rows, used | (1 << t), assigned, self.domains[i + 1])
            rows[u] = saved
            del assigned[u]
            if self.exhausted:
                return


# ---------------------------------------------------------------------------
# scenarios: one matching choice over one removal set
# ---------------------------------------------------------------------------

def _matchings(items: list):
    """All perfect matchings of a sorted list, as lists of pairs."""
    if not items:
        yield []
        return
    first = items[0]
    for j in range(1, len(items)):
        rest = items[1:j] + items[j + 1:]
        for sub in _matchings(rest):
            yield [(first, items[j])] + sub


def _tree_scenarios(k: int, removal: frozenset):
    """Completion scenarios (one per matching) for a pruned Moore tree.

    The removal set must be closed under taking children.  An odd number of
    unmatched vertices means no completion exists (the infeasible case) and
    yields nothing.
    """
    words = moore_words(k)
    wset = set(words)
    for w in removal:
        if w not in wset:
            raise ValueError(f"{w!r} is not a Moore-tree word")
        for child in (w + "0", w + "1"):
            if len(child) <= k and child in wset and not child.endswith("00"):
                if child not in removal:
                    raise ValueError(f"removal not subtree-closed at {w!r}")
    kept = [w for w in words if w not in removal]
    idx = {w: i for i, w in enumerate(kept)}
    n = len(kept)

    tree_edges = []
    tree_arcs = []
    has_edge = [False] * n
    has_arc = [False] * n
    for w in kept:
        if (w == "" or not w.endswith("0")) and len(w) < k:
            child = w + "0"
            if child in idx:
                tree_edges.append((idx[w], idx[child]))
                has_edge[idx[w]] = True
                has_edge[idx[child]] = True
        if len(w) < k and w + "1" in idx:
            tree_arcs.append((idx[w], idx[w + "1"]))
            has_arc[idx[w]] = True

    unmatched = [w for w in kept if not has_edge[idx[w]]]
    sources = [w for w in kept if not has_arc[idx[w]]]
    if len(unmatched) % 2:
        return  # infeasible: zero candidates

    domains = []
    for w in sources:
        banned = {idx[w]}
        if len(w) == k and w[:-1] in idx:
            banned.add(idx[w[:-1]])  # no assignation to the tree predecessor
        domains.append(tuple(t for t in range(n) if t not in banned))

    base = {
        "n": n,
        "k": k,
        "arcs": tuple(tree_arcs),
        "sources": tuple(idx[w] for w in sources),
        "domains": tuple(domains),
        "injective": False,
        "first": None,
        "budget": None,
    }
    for matching in _matchings(unmatched):
        scen = dict(base)
        scen["edges"] = tuple(tree_edges) + tuple(
            (idx[a], idx[b]) for (a, b) in matching
        )
        yield scen


def _run_scenario(scen: dict):
    """Run one completion DFS; returns (examined, exhausted, survivors)."""
    n, k = scen["n"], scen["k"]
    static = [1 << v for v in range(n)]
    edge_mask = [0] * n
    arc_pred = [0] * n
    for (a, b) in scen["edges"]:
        static[a] |= 1 << b
        static[b] |= 1 << a
        edge_mask[a] |= 1 << b
        edge_mask[b] |= 1 << a
    for (a, b) in scen["arcs"]:
        static[a] |= 1 << b
        arc_pred[b] |= 1 << a
    domains = [list(d) for d in scen["domains"]]
    if scen["first"] is not None and domains:
        domains[0] = [t for t in domains[0] if t in set(scen["first"])]

    if USE_FAST_ENGINE and not scen.get("force_python"):
        examined, exhausted, results = _fastsearch.run_completion(
            n, k, static, edge_mask, arc_pred,
            list(scen["sources"]), domains,
            scen["injective"], budget=scen["budget"],
        )
    else:
        dfs = _ArcCompletionDFS(
            n, k, static, edge_mask, arc_pred,
            list(scen["sources"]), domains,
            scen["injective"], budget=scen["budget"],
        ).run()
        examined, exhausted, results = dfs.examined, dfs.exhausted, dfs.results

    survivors = []
    for assignment in results:
        arcs = list(scen["arcs"]) + list(zip(scen["sources"], assignment))
        g = MixedGraph(n, scen["edges"], arcs)
        assert g.diameter() == k
        survivors.append((canon.canonical_form(g), g))
    return examined, exhausted, survivors


def _run_scenarios(scenarios: list[dict], jobs: int):
    if jobs and jobs > 1 and len(scenarios) > 1:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(jobs) as pool:
            outs = pool.map(_run_scenario, scenarios)
    else:
        outs = [_run_scenario(s) for s in scenarios]
    examined = sum(o[0] for o in outs)
    exhausted = any(o[1] for o in outs)
    survivors = _merge_survivors(
        (f, g) for o in outs for (f, g) in o[2]
    )
    return examined, exhausted, survivors


# ---------------------------------------------------------------------------
# the searches
# ---------------------------------------------------------------------------

def search_almost_moore(k: int, jobs: int = 1, budget: int | None = None) -> SearchOutcome:
    """Exhaust order M(1,1,k)-1 candidates: one Moore-tree leaf removed.

    k is restricted to 3 or 4 unless an explicit budget is supplied.
    """
    if k not in (3, 4) and budget is None:
        raise ValueError("k outside {3,4} requires an explicit budget")
    t0 = time.perf_counter()
    leaves = [w for w in moore_words(k) if len(w) == k]
    assert len(leaves) == level_counts(k)[0]
    scenarios = []
    for leaf in leaves:
        for scen in _tree_scenarios(k, frozenset({leaf})):
            scen["budget"] = budget
            scenarios.append(scen)
    examined, exhausted, survivors = _run_scenarios(scenarios, jobs)
    return SearchOutcome(
        target_order=moore_11(k) - 1,
        k=k,
        examined=examined,
        survivors=survivors,
        wall_time=time.perf_counter() - t0,
        complete=not exhausted,
    )


def _order16_removals() -> list[frozenset]:
    """Removal shapes for order M(1,1,4)-3 = 16.

    Either three distinct depth-4 words, or a depth-3 word with its subtree
    (plus one more depth-4 word when the subtree has only two vertices).
    """
    leaves = [w for w in moore_words(4) if len(w) == 4]
    out = [frozenset(c) for c in itertools.combinations(leaves, 3)]
    for w in moore_words(4):
        if len(w) != 3:
            continue
        if w.endswith("0"):
            for other in leaves:
                if other != w + "1":
                    out.append(frozenset({w, w + "1", other}))
        else:
            out.append(frozenset({w, w + "0", w + "1"}))
    return out


def search_order16_k4(jobs: int = 1) -> SearchOutcome:
    """Exhaust order-16 diameter-4 candidates (defect 3)."""
    t0 = time.perf_counter()
    scenarios = []
    for removal in _order16_removals():
        scenarios.extend(_tree_scenarios(4, removal))
    examined, exhausted, survivors = _run_scenarios(scenarios, jobs)
    return SearchOutcome(
        target_order=16,
        k=4,
        examined=examined,
        survivors=survivors,
        wall_time=time.perf_counter() - t0,
        complete=not exhausted,
    )


def search_generic(order: int, k: int, seeds=(), budget: int | None = None,
                   jobs: int = 1) -> SearchOutcome:
    """Fixed-matching search: edges {2i, 2i+1}, arcs a seeded permutation.

    Enumerates fixed-point-free arc permutations with no 2-cycles and no arc
    parallel to a matching edge (either orientation), extending the given
    seed arcs; keeps graphs of diameter exactly k.
    """
    if order % 2 or order <= 0:
        raise ValueError("order must be positive and even")
    t0 = time.perf_counter()
    partner = [v ^ 1 for v in range(order)]
    seed_map = {}
    for (u, v) in seeds:
        if not (0 <= u < order and 0 <= v < order):
            raise ValueError(f"seed arc ({u},{v}) out of range")
        if u in seed_map:
            raise ValueError(f"two seed arcs out of {u}")
        if v == u or v == partner[u]:
            raise ValueError(f"seed arc ({u},{v}) clashes with the matching")
        if seed_map.get(v) == u:
            raise ValueError(f"seed arcs contain the 2-cycle {u},{v}")
        seed_map[u] = v
    used_targets = set(seed_map.values())
    if len(used_targets) != len(seed_map):
        raise ValueError("seed arcs must have distinct targets")

    edges = tuple((v, v + 1) for v in range(0, order, 2))
    arcs = tuple(sorted(seed_map.items()))
    sources = tuple(v for v in range(order) if v not in seed_map)
    domains = tuple(
        tuple(t for t in range(order)
              if t != u and t != partner[u] and t not in used_targets)
        for u in sources
    )
    base = {
        "n": order, "k": k, "edges": edges, "arcs": arcs,
        "sources": sources, "domains": domains,
        "injective": True, "first": None, "budget": budget,
    }
    if jobs and jobs > 1 and sources:
        scenarios = []
        for t in domains[0]:
            scen = dict(base)
            scen["first"] = (t,)
            scenarios.append(scen)
    else:
        scenarios = [base]
    examined, exhausted, survivors = _run_scenarios(scenarios, jobs)
    return SearchOutcome(
        target_order=order,
        k=k,
        examined=examined,
        survivors=survivors,
        wall_time=time.perf_counter() - t0,
        complete=not exhausted,
    )


def search_order14_k4(jobs: int = 1) -> SearchOutcome:
    """The seeded exhaustive search for the largest diameter-4 graphs."""
    return search_generic(14, 4, seeds=((0, 2), (1, 5), (5, 7)), jobs=jobs)
