"""Command-line interface.

Subcommands: bound, construct, diameter, spectrum, search, codec, cayley,
lift, voltage-search, verify.  Exit codes: 0 success / all checks pass,
1 check failure, 2 usage error.  Output is deterministic; the trailing
timing line is suppressed by --no-timing.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import bounds, codec, canon, families, algebra, search, spectra, tables
from .core import MixedGraph, GraphError


class UsageError(Exception):
    pass


def _read_graph(path: str) -> MixedGraph:
    with open(path) as fh:
        text = fh.read()
    stripped = text.strip()
    if stripped.startswith("mixed") or stripped.startswith("#"):
        return MixedGraph.from_text(text)
    return codec.decode(stripped.splitlines()[0])


def _write_graph(g: MixedGraph, path: str | None, fmt: str) -> None:
    if fmt == "d6":
        payload = codec.encode(g) + "\n"
    else:
        payload = g.to_text()
    if path is None:
        sys.stdout.write(payload)
    else:
        with open(path, "w") as fh:
            fh.write(payload)


def parse_group(spec: str) -> algebra.FiniteGroup:
    """Mini-language: cyclic:n, dihedral:m, semidirect:m:k:t,
    product:<spec>,<spec>, a5, agl1_8, pgl2:q, psl2:q."""
    if spec == "a5":
        return algebra.alternating5()
    if spec == "agl1_8":
        return algebra.agl1_8()
    head, _, rest = spec.partition(":")
    if head == "cyclic":
        return algebra.cyclic(int(rest))
    if head == "dihedral":
        return algebra.dihedral(int(rest))
    if head == "semidirect":
        m, k, t = rest.split(":")
        return algebra.semidirect_cyclic(int(m), int(k), int(t))
    if head == "pgl2":
        return algebra.pgl2(int(rest))
    if head == "psl2":
        return algebra.psl2(int(rest))
    if head == "product":
        left, _, right = rest.partition(",")
        return algebra.direct_product(parse_group(left), parse_group(right))
    raise UsageError(f"unknown group spec {spec!r}")


def parse_element(group: algebra.FiniteGroup, literal: str) -> int:
    """Group-element literal: '#<index>' always works; otherwise the
    constructor's element name (e.g. Rot(3), '4,1', plain integers)."""
    if literal.startswith("#"):
        i = int(literal[1:])
        if not 0 <= i < group.order:
            raise UsageError(f"element index {i} out of range")
        return i
    return group.index_of(literal)


def read_voltage_base(path: str, group: algebra.FiniteGroup) -> algebra.VoltageBaseGraph:
    """Voltage base file: 'base <n>' then e/a/uloop/dloop lines with element
    literals."""
    n = None
    edges, arcs, uloops = [], [], []
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "base":
                n = int(parts[1])
            elif parts[0] == "e":
                edges.append(((int(parts[1]), int(parts[2])), parse_element(group, parts[3])))
            elif parts[0] == "a":
                arcs.append(((int(parts[1]), int(parts[2])), parse_element(group, parts[3])))
            elif parts[0] == "uloop":
                uloops.append((int(parts[1]), parse_element(group, parts[2])))
            elif parts[0] == "dloop":
                u = int(parts[1])
                arcs.append(((u, u), parse_element(group, parts[2])))
            else:
                raise UsageError(f"unrecognized voltage line: {raw!r}")
    if n is None:
        raise UsageError("missing 'base <n>' header")
    return algebra.VoltageBaseGraph(n, edges, arcs, uloops)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_bound(args) -> int:
    if (args.r is None) != (args.z is None):
        raise UsageError("--r and --z must be given together")
    if args.r is not None:
        m = bounds.moore_mixed(args.r, args.z, args.k)
        print(f"{'r':>6} {'z':>6} {'k':>6} {'moore':>10}")
        print(f"{args.r:>6} {args.z:>6} {args.k:>6} {m:>10}")
        print(f"r={args.r}")
        print(f"z={args.z}")
        print(f"k={args.k}")
        print(f"moore={m}")
        return 0
    rep = bounds.report(args.k)
    lower = rep.lower if rep.lower is not None else "-"
    print(f"{'k':>4} {'lower':>8} {'upper':>8} {'moore':>8} {'defect':>8}")
    print(f"{rep.k:>4} {lower:>8} {rep.upper:>8} {rep.moore:>8} {rep.defect_lower:>8}")
    for line in rep.as_lines():
        print(line)
    return 0


_FAMILIES = {
    "E": lambda n, d: families.build_E(n),
    "F": lambda n, d: families.build_F(n),
    "Fnum": lambda n, d: families.build_F_numeric(n),
    "Fstar": lambda n, d: families.build_Fstar(n),
    "FstarAlt": lambda n, d: families.build_Fstar_alt(n),
    "Fprime": lambda n, d: families.build_Fprime(n),
    "G": lambda n, d: families.build_G(n),
    "Gplus": lambda n, d: families.build_Gplus(n),
    "H-K3": lambda n, d: families.build_H(n, families.two_colored_k3()),
}


def _cmd_construct(args) -> int:
    if args.family in _FAMILIES:
        built = _FAMILIES[args.family](args.n, args.d)
        g = built.graph
    elif args.family == "debruijn":
        g = families.de_bruijn(args.d or 2, args.n).as_mixed()
    elif args.family == "kautz":
        g = families.kautz(args.d or 2, args.n).as_mixed()
    else:
        raise UsageError(f"unknown family {args.family!r}")
    _write_graph(g, args.out, args.format)
    return 0


def _cmd_diameter(args) -> int:
    g = _read_graph(args.infile)
    print(g.diameter())
    return 0


def _cmd_spectrum(args) -> int:
    g = _read_graph(args.infile)
    p = spectra.char_poly(g)
    print("charpoly:", p.pretty())
    print("coeffs_low_first:", ",".join(str(c) for c in p.coeffs))
    if g.n == 14:
        cl = spectra.classify(g)
        print("class:", cl.class_id if cl else "unclassified")
    return 0


def _cmd_search(args) -> int:
    mode = args.mode
    if mode == "almost-moore":
        out = search.search_almost_moore(args.k, jobs=args.jobs, budget=args.budget)
    elif mode == "order16":
        out = search.search_order16_k4(jobs=args.jobs)
    elif mode == "order14":
        out = search.search_order14_k4(jobs=args.jobs)
    else:
        seeds = _parse_seed_arcs(args.seed_arcs) if args.seed_arcs else ()
        if args.order is None:
            raise UsageError("generic mode requires --order")
        out = search.search_generic(args.order, args.k, seeds=seeds,
                                    budget=args.budget, jobs=args.jobs)
    print(f"examined={out.examined}")
    print(f"survivors={len(out.survivors)}")
    print(f"complete={'yes' if out.complete else 'no'}")
    lines = [codec.encode(g) for _, g in out.survivors]
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("".join(line + "\n" for line in lines))
    else:
        for line in lines:
            print(line)
    return 0


def _parse_seed_arcs(text: str):
    pairs = []
    for chunk in text.replace("(", " ").replace(")", " ").split(","):
        chunk = chunk.strip()
        if chunk:
            pairs.append(int(chunk))
    if len(pairs) % 2:
        raise UsageError("seed arcs need an even count of integers")
    return tuple(zip(pairs[::2], pairs[1::2]))


def _cmd_codec(args) -> int:
    if args.decode == args.encode:
        raise UsageError("exactly one of --decode/--encode is required")
    with open(args.infile) as fh:
        text = fh.read()
    if args.decode:
        graphs = [codec.decode(line) for line in text.splitlines() if line.strip()]
        payload = "".join(g.to_text() + "\n" for g in graphs)
    else:
        g = MixedGraph.from_text(text)
        payload = codec.encode(g, emit_amp=args.amp) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return 0


def _cmd_cayley(args) -> int:
    group = parse_group(args.group)
    if args.search_k is not None:
        found = algebra.cayley_search(group, args.search_k)
        print(f"group={group.name} order={group.order}")
        print(f"classes={len(found)}")
        for s, a, diam in found:
            print(f"s={group.name_of(s)} a={group.name_of(a)} diameter={diam}")
        return 0
    if not args.s1 or not args.s2:
        raise UsageError("need --s1 and --s2 (or --search-k)")
    s1 = [parse_element(group, x) for x in args.s1.split(";")]
    s1 = sorted(set(s1) | {group.inverse(s) for s in s1})
    s2 = [parse_element(group, x) for x in args.s2.split(";")]
    g = algebra.cayley_mixed(group, s1, s2)
    print(f"n={g.n}")
    print(f"diameter={g.diameter()}")
    if args.out:
        _write_graph(g, args.out, args.format)
    return 0


def _cmd_lift(args) -> int:
    group = parse_group(args.group)
    vb = read_voltage_base(args.base, group)
    g = algebra.lift(vb, group)
    print(f"n={g.n}")
    print(f"diameter={g.diameter()}")
    print(f"totally_regular_11={'yes' if g.is_totally_regular(1, 1) else 'no'}")
    if args.out:
        _write_graph(g, args.out, args.format)
    return 0


def _cmd_voltage_search(args) -> int:
    group = parse_group(args.group)
    shape = read_voltage_base(args.base, group)
    res = algebra.voltage_search(shape, group, args.target_k,
                                 budget=args.budget, seed=args.rng_seed)
    print(f"examined={res.examined}")
    print(f"exhaustive={'yes' if res.exhaustive else 'no'}")
    print(f"best_diameter={res.best_diameter}")
    print(f"reached_target={'yes' if res.reached_target else 'no'}")
    carriers = shape.carriers()
    for assignment in res.best_assignments[: args.show]:
        desc = "; ".join(
            f"{kind}{site}={group.name_of(volt)}"
            for (kind, site), (_, volt) in zip(carriers, assignment)
        )
        print("assignment:", desc)
    return 0


# ---------------------------------------------------------------------------
# verify suites
# ---------------------------------------------------------------------------

class Suite:
    def __init__(self, name: str):
        self.name = name
        self.checks: list[tuple[str, str, str, bool]] = []

    def check(self, description: str, expected, observed) -> None:
        self.checks.append(
            (description, str(expected), str(observed), expected == observed)
        )

    def passed(self) -> bool:
        return all(ok for (_, _, _, ok) in self.checks)

    def print_report(self) -> None:
        for desc, exp, obs, ok in self.checks:
            mark = "ok  " if ok else "FAIL"
            print(f"{mark} {desc}: expected {exp}, observed {obs}")
        status = "PASS" if self.passed() else "FAIL"
        print(f"suite {self.name}: {status} "
              f"({sum(ok for *_, ok in self.checks)}/{len(self.checks)} checks)")


def _suite_table1(jobs: int) -> Suite:
    s = Suite("table1")
    s.check("search space bound k=3", 396, bounds.search_space_bound(3))
    s.check("search space bound k=4", 889980, bounds.search_space_bound(4))
    s.check("search space bound k=5", 0, bounds.search_space_bound(5))
    return s


def _suite_table2(jobs: int) -> Suite:
    s = Suite("table2")
    graphs = [codec.decode(x) for x in tables.TABLE2_STRINGS]
    s.check("all decode to order 14", True, all(g.n == 14 for g in graphs))
    s.check("all diameter 4", True, all(g.diameter() == 4 for g in graphs))
    s.check("all totally (1,1)-regular", True,
            all(g.is_totally_regular(1, 1) for g in graphs))
    s.check("all digon- and loop-free", True,
            all(g.digons_and_loops() == (0, 0) for g in graphs))
    forms = {canon.canonical_form(g) for g in graphs}
    s.check("pairwise non-isomorphic", 27, len(forms))
    s.check("bare-style round trip", True,
            all(codec.encode(g) == x
                for g, x in zip(graphs, tables.TABLE2_STRINGS)))
    return s


def _suite_table3(jobs: int) -> Suite:
    s = Suite("table3")
    sizes: dict[int, int] = {}
    unclassified = 0
    for x in tables.TABLE2_STRINGS:
        cl = spectra.classify(codec.decode(x))
        if cl is None:
            unclassified += 1
        else:
            sizes[cl.class_id] = sizes.get(cl.class_id, 0) + 1
    s.check("unclassified graphs", 0, unclassified)
    for cid, want in ((1, 9), (2, 6), (3, 5), (4, 4), (5, 2), (6, 1)):
        s.check(f"class {cid} size", want, sizes.get(cid, 0))
    return s


def _suite_table4(jobs: int) -> Suite:
    s = Suite("table4")
    for k, (lower, upper, moore) in tables.TABLE4.items():
        s.check(f"moore k={k}", moore, bounds.moore_11(k))
        s.check(f"upper k={k}", upper, bounds.upper_bound(k))
        s.check(f"lower<=upper k={k}", True, lower <= upper)
    return s


def _suite_families(jobs: int) -> Suite:
    s = Suite("families")
    for n in range(2, 9):
        g = families.build_F(n).graph
        s.check(f"F({n}) order", 3 * 2 ** n, g.n)
        s.check(f"F({n}) diameter", 2 * n, g.diameter())
    for n in range(2, 7):
        s.check(f"F({n}) iso F[{n}]", True,
                canon.canonical_form(families.build_F(n).graph)
                == canon.canonical_form(families.build_F_numeric(n).graph))
    for n in range(3, 6):
        g = families.build_Fstar(n).graph
        s.check(f"F*({n}) totally regular", True, g.is_totally_regular(1, 1))
        s.check(f"F*({n}) digons", 3, g.digons_and_loops()[0])
        s.check(f"F*({n}) automorphisms", 6, g.automorphism_count())
    s.check("F'(2) iso K(2,2)", True,
            canon.canonical_form(families.build_Fprime(2).graph)
            == canon.canonical_form(
                families.kautz(2, 2).as_mixed(digons_to_edges=True)))
    s.check("F'(3) diameter", 5, families.build_Fprime(3).graph.diameter())
    g = families.build_Fprime(4).graph
    s.check("F'(4) order", 42, g.n)
    s.check("F'(4) diameter", 7, g.diameter())
    for n in (5, 6):
        s.check(f"F'({n}) diameter", 2 * n, families.build_Fprime(n).graph.diameter())
    for n in range(2, 11):
        g = families.build_G(n).graph
        s.check(f"G({n}) order", 2 ** (n + 1) - 4, g.n)
        s.check(f"G({n}) diameter", 2 * n - 1, g.diameter())
    for n in range(2, 9):
        s.check(f"G+({n}) diameter", 2 * n, families.build_Gplus(n).graph.diameter())
    base = families.two_colored_k3()
    for n in range(3, 7):
        g = families.build_H(n, base).graph
        s.check(f"H_{n}(K3) order", 3 * 2 ** (n - 1), g.n)
        s.check(f"H_{n}(K3) digons+loops", (0, 0), g.digons_and_loops())
    s.check("H_3(K3) diameter", 5, families.build_H(3, base).graph.diameter())
    s.check("H_4(K3) diameter", 6, families.build_H(4, base).graph.diameter())
    for n in (3, 4, 5):
        s.check(f"H_{n}(K3) contraction iso K(2,{n-1})", True,
                families.build_H(n, base).graph.contract_edges().canonical_form()
                == families.kautz(2, n - 1).canonical_form())
    from .bounds import fibonacci, moore_11
    for n in range(2, 7):
        e = families.build_E(n)
        odd = fibonacci(n) % 2
        s.check(f"E({n}) order", moore_11(n) + odd, e.n)
        s.check(f"E({n}) diameter", 2 * n + odd, e.graph.diameter())
    return s


def _suite_gplus(jobs: int) -> Suite:
    import numpy as np

    s = Suite("gplus")
    built = families.build_Gplus(2)
    order = [built.index(lab) for lab in tables.GPLUS2_VERTEX_ORDER]
    a = built.graph.adjacency_matrix()[np.ix_(order, order)]
    s.check("G+(2) adjacency equals printed A", True,
            (a == np.array(tables.GPLUS2_A)).all())
    s.check("G+(2) A^4 equals printed matrix", True,
            (np.linalg.matrix_power(a, 4) == np.array(tables.GPLUS2_A4)).all())
    for n in range(2, 9):
        g = families.build_Gplus(n)
        lab = g.label_map()
        ecc0 = g.graph.eccentricity(lab["0|" + "0" * n])
        ecc1 = g.graph.eccentricity(lab["0|" + "1" * n])
        s.check(f"G+({n}) ecc(0|0^n)", 2 * n, ecc0)
        s.check(f"G+({n}) ecc(0|1^n)", 2 * n, ecc1)
        s.check(f"G+({n}) ecc(1|0^n)", 2 * n - 1,
                g.graph.eccentricity(lab["1|" + "0" * n]))
        s.check(f"G+({n}) ecc(1|1^n)", 2 * n - 1,
                g.graph.eccentricity(lab["1|" + "1" * n]))
        if n >= 5:
            s.check(f"G+({n}) ecc(1|0^(n-1)1)", 2 * n - 2,
                    g.graph.eccentricity(lab["1|" + "0" * (n - 1) + "1"]))
    for n in range(2, 7):
        g = families.build_Gplus(n).graph
        power = np.linalg.matrix_power(g.adjacency_matrix(), 2 * n)
        s.check(f"G+({n}) A^(2n) strictly positive", True, bool((power >= 1).all()))
    return s


def _suite_search_k3(jobs: int) -> Suite:
    s = Suite("search-k3")
    out = search.search_almost_moore(3, jobs=jobs)
    s.check("order-10 survivors exist", True, len(out.survivors) >= 1)
    s.check("order-10 survivor count (regression)", 3, len(out.survivors))
    gen = search.search_generic(10, 3, jobs=jobs)
    s.check("generic(10,3) matches almost-moore(3)", True,
            set(gen.survivor_forms) == set(out.survivor_forms))
    lc5 = families.line_digraph(families.symmetric_cycle(5)).as_mixed(True)
    s.check("L(C5) among survivors", True,
            canon.canonical_form(lc5) in set(out.survivor_forms))
    return s


def _suite_search_k4(jobs: int) -> Suite:
    s = Suite("search-k4")
    am = search.search_almost_moore(4, jobs=jobs)
    s.check("almost-Moore k=4 survivors", 0, len(am.survivors))
    s.check("almost-Moore k=4 within case bound", True,
            am.examined <= bounds.search_space_bound(4))
    o16 = search.search_order16_k4(jobs=jobs)
    s.check("order-16 survivors", 0, len(o16.survivors))
    o14 = search.search_order14_k4(jobs=jobs)
    s.check("order-14 survivors", 27, len(o14.survivors))
    table2 = {canon.canonical_form(codec.decode(x)) for x in tables.TABLE2_STRINGS}
    s.check("order-14 survivor set equals published set", True,
            set(o14.survivor_forms) == table2)
    d14 = algebra.dihedral(14)
    cay = algebra.cayley_mixed(
        d14, [d14.index_of("Ref(0)")], [d14.index_of("Rot(1)")]
    )
    cay_form = canon.canonical_form(cay)
    cayley_like = [f for f, g in o14.survivors
                   if g.automorphism_count() >= 14]
    s.check("exactly one vertex-transitive survivor", 1, len(cayley_like))
    s.check("it is the dihedral Cayley graph", True,
            cayley_like == [cay_form] if len(cayley_like) == 1 else False)
    return s


def _suite_cayley(jobs: int) -> Suite:
    s = Suite("cayley")
    d14 = algebra.dihedral(14)
    r, refl = d14.index_of("Rot(1)"), d14.index_of("Ref(0)")
    g = algebra.cayley_mixed(d14, [refl], [r])
    s.check("Cay(D7) order", 14, g.n)
    s.check("Cay(D7) diameter", 4, g.diameter())
    s.check("Cay(D7) iso first published string", True,
            canon.canonical_form(g)
            == canon.canonical_form(codec.decode(tables.TABLE2_STRINGS[0])))
    lc7 = families.line_digraph(families.symmetric_cycle(7)).as_mixed(True)
    s.check("Cay(D7) iso L(C7)", True,
            canon.canonical_form(g) == canon.canonical_form(lc7))
    g54 = algebra.semidirect_cyclic(9, 6, 2)
    found = algebra.cayley_search(g54, 7)
    s.check("diameter-7 Cayley graph on 54 elements exists", True,
            any(d == 7 for (_, _, d) in found))
    return s


def _suite_lift(jobs: int) -> Suite:
    s = Suite("lift")
    d18 = algebra.dihedral(18)
    lifted = algebra.lift(algebra.fig7_base(d18), d18)
    s.check("order-72 lift order", 72, lifted.n)
    s.check("order-72 lift diameter", 8, lifted.diameter())
    s.check("order-72 lift undirected degree 1", True,
            all(lifted.undirected_degree(v) == 1 for v in range(lifted.n)))
    s.check("order-72 lift out-degree 1", True,
            all(lifted.out_degree(v) == 1 for v in range(lifted.n)))
    d14 = algebra.dihedral(14)
    r, refl = d14.index_of("Rot(1)"), d14.index_of("Ref(0)")
    s.check("Cayley graph as one-vertex lift", True,
            algebra.cayley_as_lift(d14, [refl], [r])
            == algebra.cayley_mixed(d14, [refl], [r]))
    z4 = algebra.cyclic(4)
    base = algebra.VoltageBaseGraph(
        2, edges=[((0, 1), 0)], arcs=[((0, 1), 0), ((1, 0), 0)], uloops=[])
    ident = algebra.lift(base, z4)
    s.check("identity-voltage lift component count", 4,
            len(ident.weak_components()))
    return s


_SUITES = {
    "table1": _suite_table1,
    "table2": _suite_table2,
    "table3": _suite_table3,
    "table4": _suite_table4,
    "families": _suite_families,
    "gplus": _suite_gplus,
    "search-k3": _suite_search_k3,
    "search-k4": _suite_search_k4,
    "cayley": _suite_cayley,
    "lift": _suite_lift,
}


def run_suite(name: str, jobs: int = 1) -> Suite:
    if name not in _SUITES:
        raise UsageError(f"unknown suite {name!r}; choose from {sorted(_SUITES)}")
    return _SUITES[name](jobs)


def _cmd_verify(args) -> int:
    names = sorted(_SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        suite = run_suite(name, jobs=args.jobs)
        suite.print_report()
        ok = ok and suite.passed()
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mixedgraphs",
        description="(1,1,k)-mixed graphs: bounds, families, searches, spectra",
    )
    p.add_argument("--no-timing", action="store_true",
                   help="suppress the trailing timing line")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", help="Moore/defect/upper bounds")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--r", type=int)
    b.add_argument("--z", type=int)
    b.set_defaults(func=_cmd_bound)

    c = sub.add_parser("construct", help="build a family member")
    c.add_argument("--family", required=True,
                   choices=sorted(_FAMILIES) + ["debruijn", "kautz"])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--d", type=int)
    c.add_argument("--out")
    c.add_argument("--format", choices=["text", "d6"], default="text")
    c.set_defaults(func=_cmd_construct)

    d = sub.add_parser("diameter", help="diameter of a graph file")
    d.add_argument("--in", dest="infile", required=True)
    d.set_defaults(func=_cmd_diameter)

    sp = sub.add_parser("spectrum", help="exact characteristic polynomial")
    sp.add_argument("--in", dest="infile", required=True)
    sp.set_defaults(func=_cmd_spectrum)

    se = sub.add_parser("search", help="exhaustive searches")
    se.add_argument("--mode", default="generic",
                    choices=["almost-moore", "order16", "order14", "generic"])
    se.add_argument("--k", type=int, required=True)
    se.add_argument("--order", type=int)
    se.add_argument("--seed-arcs", dest="seed_arcs")
    se.add_argument("--budget", type=int)
    se.add_argument("--jobs", type=int, default=1)
    se.add_argument("--out")
    se.set_defaults(func=_cmd_search)

    co = sub.add_parser("codec", help="digraph6 encode/decode")
    co.add_argument("--decode", action="store_true")
    co.add_argument("--encode", action="store_true")
    co.add_argument("--amp", action="store_true",
                    help="emit the '&'-prefixed standard style")
    co.add_argument("--in", dest="infile", required=True)
    co.add_argument("--out")
    co.set_defaults(func=_cmd_codec)

    ca = sub.add_parser("cayley", help="Cayley mixed graphs")
    ca.add_argument("--group", required=True)
    ca.add_argument("--s1", help="semicolon-separated element literals")
    ca.add_argument("--s2", help="semicolon-separated element literals")
    ca.add_argument("--search-k", dest="search_k", type=int)
    ca.add_argument("--out")
    ca.add_argument("--format", choices=["text", "d6"], default="text")
    ca.set_defaults(func=_cmd_cayley)

    li = sub.add_parser("lift", help="voltage lift of a base file")
    li.add_argument("--group", required=True)
    li.add_argument("--base", required=True)
    li.add_argument("--out")
    li.add_argument("--format", choices=["text", "d6"], default="text")
    li.set_defaults(func=_cmd_lift)

    vs = sub.add_parser("voltage-search", help="search voltages on a base shape")
    vs.add_argument("--group", required=True)
    vs.add_argument("--base", required=True)
    vs.add_argument("--target-k", dest="target_k", type=int, required=True)
    vs.add_argument("--budget", type=int, default=10000)
    vs.add_argument("--rng-seed", dest="rng_seed", type=int)
    vs.add_argument("--show", type=int, default=3)
    vs.set_defaults(func=_cmd_voltage_search)

    ve = sub.add_parser("verify", help="run an acceptance suite")
    ve.add_argument("--suite", required=True,
                    choices=sorted(_SUITES) + ["all"])
    ve.add_argument("--jobs", type=int, default=1)
    ve.set_defaults(func=_cmd_verify)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        code = args.func(args)
    except (UsageError, GraphError, codec.CodecError, algebra.AlgebraError,
            FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not args.no_timing:
        print(f"time: {time.perf_counter() - t0:.2f}s")
    return code


if __name__ == "__main__":
    sys.exit(main())
