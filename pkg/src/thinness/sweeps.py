"""Cross-checks pitting independent routes against each other.

Each sweep runs two (or more) ways of computing the same thing over an
exhaustive or sampled instance family and reports mismatches; a clean
run is the machine-checked form of the corresponding statement.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import boxes, gridpaths, patterns, widths
from .ceo import ClassOrder, build_ceo_digraph, solve_ceo
from .gallery import get_fixture
from .graphs import (Graph, Partition, Representation, bits,
                     enumerate_connected_graphs, topological_sort)
from .ordering import (conflict_rows, decide_thinness_at_most, exact_thinness,
                       is_consistent, verify_certificate)
from .sampling import (random_bipartite_ordered_instance, random_ceo_instance,
                       random_connected_graph, random_consistent_instance,
                       random_strongly_consistent_instance)


@dataclass
class SweepReport:
    name: str
    params: dict
    total: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def check(self, condition: bool, message: str):
        self.total += 1
        if not condition:
            self.mismatches.append(message)

    def summary(self) -> str:
        status = "pass" if self.ok else f"FAIL ({len(self.mismatches)} mismatches)"
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.name} [{params}]: {self.total} checks, {status}"


def enumerate_connected_bipartite(n: int):
    """Connected bipartite graphs on n labeled vertices, each once.

    A connected bipartite graph has a unique bipartition, so iterating
    over side splits with vertex 0 on side a never repeats a graph.
    """
    if n == 1:
        yield Graph.from_edges(1, [])
        return
    rest = list(range(1, n))
    for pick in range(1 << (n - 1)):
        side_a = [0] + [v for i, v in enumerate(rest) if pick & (1 << i)]
        side_b = [v for i, v in enumerate(rest) if not pick & (1 << i)]
        if not side_b:
            continue
        pairs = [(u, v) for u in side_a for v in side_b]
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in bits(mask)]
            g = Graph.from_edges(n, edges)
            if g.is_connected():
                yield g


# ---------------------------------------------------------------------------
# individual sweeps


def sweep_forb_pat_2_thin(n_max: int = 6, samples: int = 500,
                          sample_sizes=(7, 8), seed: int = 0) -> SweepReport:
    """Order avoiding P6,P7,P8,P9 exists iff the solver finds 2 classes."""
    rep = SweepReport("forb-pat-2-thin",
                      {"n": n_max, "samples": samples, "seed": seed})
    family = patterns.parse_family("P6789")

    def check(g: Graph, label: str):
        member = patterns.ord_membership(g, family) is not None
        thin2 = decide_thinness_at_most(g, 2, "thin")[0] == "yes"
        rep.check(member == thin2,
                  f"{label}: pattern membership {member} vs thin<=2 {thin2}")

    for n in range(1, n_max + 1):
        for g in enumerate_connected_graphs(n):
            check(g, f"n={n} edges={g.edges()}")
    rng = random.Random(seed)
    for i in range(samples):
        n = sample_sizes[i % len(sample_sizes)]
        g = random_connected_graph(n, rng)
        check(g, f"sample {i} n={n} edges={g.edges()}")
    return rep


def sweep_pthin_le_bw(n_max: int = 6) -> SweepReport:
    """Proper thinness never beats bandwidth on graphs with an edge."""
    rep = SweepReport("pthin-le-bw", {"n": n_max})
    for n in range(2, n_max + 1):
        for g in enumerate_connected_graphs(n):
            if g.edge_count() == 0:
                continue
            pt = exact_thinness(g, "pthin").value
            bw, _ = widths.bandwidth(g)
            rep.check(pt <= bw, f"n={n} edges={g.edges()}: pthin {pt} > bw {bw}")
    return rep


def sweep_theorem2(n_max: int = 6) -> SweepReport:
    """indthin <= pw+1 and indpthin <= bw+1, by value and by construction."""
    rep = SweepReport("theorem2", {"n": n_max})
    for n in range(1, n_max + 1):
        for g in enumerate_connected_graphs(n):
            label = f"n={n} edges={g.edges()}"
            pw, pd = widths.pathwidth(g)
            bw, f = widths.bandwidth(g)
            it = exact_thinness(g, "indthin").value
            ipt = exact_thinness(g, "indpthin").value
            rep.check(it <= pw + 1, f"{label}: indthin {it} > pw+1 {pw + 1}")
            rep.check(ipt <= bw + 1, f"{label}: indpthin {ipt} > bw+1 {bw + 1}")
            cert = widths.partition_from_decomposition(g, pd)
            rep.check(cert.k <= pw + 1 and verify_certificate(g, cert, "indthin"),
                      f"{label}: constructive indthin certificate failed")
            pdp = widths.proper_decomposition_from_labeling(g, f)
            cert2 = widths.partition_from_decomposition(g, pdp)
            rep.check(cert2.k <= bw + 1 and verify_certificate(g, cert2, "indpthin"),
                      f"{label}: constructive indpthin certificate failed")
    return rep


def sweep_peak(n_max: int = 6, grid_sizes=(2, 3, 4)) -> SweepReport:
    """thin >= iso_peak / max_degree, plus exact grid peaks."""
    rep = SweepReport("peak", {"n": n_max, "grids": grid_sizes})
    for n in range(2, n_max + 1):
        for g in enumerate_connected_graphs(n):
            if g.edge_count() == 0:
                continue
            t = exact_thinness(g, "thin").value
            bv = widths.iso_peak(g)
            delta = g.max_degree()
            rep.check(t * delta >= bv,
                      f"n={n} edges={g.edges()}: thin {t} < {bv}/{delta}")
    for r in grid_sizes:
        g = get_fixture(f"grid-{r}").graph
        rep.check(widths.iso_peak(g) >= r, f"grid-{r}: iso_peak below {r}")
    b0 = get_fixture("b0grid-2")
    t = exact_thinness(b0.graph, "thin", lower_bound=1).value
    rep.check(t * 6 >= 2, "b0grid-2: thinness lower bound inconsistent with peak")
    rep.check(b0.graph.max_degree() == 6, "b0grid-2: max degree is not 6")
    return rep


def sweep_ceo(samples: int = 1000, n_max: int = 6, seed: int = 0) -> SweepReport:
    """Order-extension solver agrees with brute-force interleaving."""
    rep = SweepReport("ceo", {"samples": samples, "n": n_max, "seed": seed})
    rng = random.Random(seed)
    for i in range(samples):
        mode = "consistent" if i % 2 == 0 else "strong"
        n = rng.randint(2, n_max)
        g, partition, seqs = random_ceo_instance(n, rng, k=2, mode=mode)
        porder = ClassOrder(tuple(tuple(s) for s in seqs))
        order, cycle = solve_ceo(g, partition, porder, mode)
        feasible = order is not None
        brute = _brute_force_extension(g, partition, seqs, mode)
        rep.check(feasible == brute,
                  f"sample {i} mode={mode} edges={g.edges()} classes="
                  f"{partition.class_of}: solver {feasible} vs brute {brute}")
        if order is not None:
            r = Representation(tuple(order), partition)
            ok, _ = is_consistent(g, r, mode)
            rep.check(ok, f"sample {i}: solver order is not {mode}-consistent")
            pos = r.positions()
            for seq in seqs:
                for a, b in zip(seq, seq[1:]):
                    rep.check(pos[a] < pos[b], f"sample {i}: order breaks class order")
        if cycle is not None:
            arcs = build_ceo_digraph(g, partition, porder, mode).arcs
            rep.check(all((u, v) in arcs for u, v in zip(cycle, cycle[1:])),
                      f"sample {i}: cycle witness is not a digraph cycle")
    return rep


def _brute_force_extension(g, partition, seqs, mode) -> bool:
    """Any permutation extending all class orders and (strongly) consistent?"""
    n = g.n
    pos_req = {v: i for seq in seqs for i, v in enumerate(seq)}
    for perm in itertools.permutations(range(n)):
        seen: dict[int, int] = {}
        ok = True
        for v in perm:
            c = partition.class_of[v]
            if pos_req[v] != seen.get(c, 0):
                ok = False
                break
            seen[c] = pos_req[v] + 1
        if not ok:
            continue
        good, _ = is_consistent(g, Representation(perm, partition), mode)
        if good:
            return True
    return False


def sweep_dpat(samples: int = 1000, n_max: int = 8, seed: int = 0) -> SweepReport:
    """Digraph acyclicity matches bipartite pattern avoidance."""
    rep = SweepReport("dpat", {"samples": samples, "n": n_max, "seed": seed})
    cat = patterns.builtin_patterns()
    rng = random.Random(seed)
    for i in range(samples):
        n = rng.randint(2, n_max)
        g, side_a, side_b = random_bipartite_ordered_instance(n, rng)
        partition = _sides_partition(n, side_a)
        porder = ClassOrder((tuple(side_a), tuple(side_b)))
        sides = (side_a, side_b)

        def avoids(names) -> bool:
            return all(patterns.occurs(g, None, cat[nm], sides=sides) is None
                       for nm in names)

        d = build_ceo_digraph(g, partition, porder, "consistent")
        acyclic = topological_sort(d)[1] is None
        rep.check(acyclic == avoids(["R2", "R3"]),
                  f"sample {i}: D acyclic {acyclic} vs R2/R3 avoidance")
        dt = build_ceo_digraph(g, partition, porder, "strong")
        acyclic_t = topological_sort(dt)[1] is None
        rep.check(acyclic_t == avoids(["R1", "R2", "R4", "R4p"]),
                  f"sample {i}: D~ acyclic {acyclic_t} vs R1/R2/R4/R4p avoidance")
        if all(g.degree(v) > 0 for v in range(n)):
            rep.check(acyclic_t == avoids(["R1", "R2"]),
                      f"sample {i}: no-isolated refinement failed")
    return rep


def _sides_partition(n: int, side_a) -> Partition:
    class_of = [1] * n
    for v in side_a:
        class_of[v] = 0
    return Partition(tuple(class_of), 2)


def sweep_class_theorems(n_max: int = 7) -> SweepReport:
    """Three routes to the independent / proper independent classes agree."""
    rep = SweepReport("class-theorems", {"n": n_max})
    fam_ind = patterns.parse_family("P569")
    fam_pind = patterns.parse_family("P34")
    fam_r23 = patterns.parse_family("R23")
    fam_r12 = patterns.parse_family("R12")
    for n in range(1, n_max + 1):
        for g in enumerate_connected_bipartite(n):
            label = f"n={n} edges={g.edges()}"
            via_ord = patterns.ord_membership(g, fam_ind) is not None
            via_biord = patterns.biord_membership(g, fam_r23) is not None
            via_solver = decide_thinness_at_most(g, 2, "indthin")[0] == "yes" \
                if n >= 2 else True
            rep.check(via_ord == via_biord == via_solver,
                      f"{label}: ind2thin routes {via_ord}/{via_biord}/{via_solver}")
            p_ord = patterns.ord_membership(g, fam_pind) is not None
            p_biord = patterns.biord_membership(g, fam_r12) is not None
            p_solver = decide_thinness_at_most(g, 2, "indpthin")[0] == "yes" \
                if n >= 2 else True
            rep.check(p_ord == p_biord == p_solver,
                      f"{label}: pind2thin routes {p_ord}/{p_biord}/{p_solver}")
    # named facts
    c6 = get_fixture("cycle-6").graph
    rep.check(exact_thinness(c6, "thin").value == 2, "cycle-6: thin is not 2")
    rep.check(decide_thinness_at_most(c6, 2, "indthin")[0] == "no",
              "cycle-6: unexpectedly independent 2-thin")
    claw = get_fixture("bipartite_claw").graph
    rep.check(patterns.ord_membership(claw, fam_pind) is None,
              "bipartite_claw: unexpectedly avoids P3/P4")
    rep.check(exact_thinness(claw, "pthin").value == 2,
              "bipartite_claw: pthin is not 2")
    w4 = get_fixture("wheel4").graph
    rep.check(exact_thinness(w4, "indpthin").value == 3, "wheel4: indpthin is not 3")
    k33 = get_fixture("kbip-3-3").graph
    rep.check(exact_thinness(k33, "pthin").value == 2, "K_{3,3}: pthin is not 2")
    return rep


def sweep_perfection(n_max: int = 6, orders_per_graph: int = 200,
                     seed: int = 0) -> SweepReport:
    """Chromatic number equals clique number for both conflict graphs."""
    from .coloring import greedy_coloring, max_clique

    rep = SweepReport("perfection",
                      {"n": n_max, "orders": orders_per_graph, "seed": seed})
    rng = random.Random(seed)
    cache: dict[tuple[int, ...], bool] = {}

    def chi_eq_omega(rows: list[int], n: int) -> bool:
        key = tuple(rows)
        hit = cache.get(key)
        if hit is not None:
            return hit
        omega, _ = max_clique(rows, (1 << n) - 1)
        ub = max(greedy_coloring(rows, n)) + 1
        if ub == omega:
            ok = True
        else:
            from .coloring import decide_colorable

            ok = decide_colorable(rows, n, omega) is not None
        cache[key] = ok
        return ok

    for n in range(2, n_max + 1):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for mask in range(1 << len(pairs)):
            rows = [0] * n
            m = mask
            while m:
                low = m & -m
                u, v = pairs[low.bit_length() - 1]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                m ^= low
            g = Graph(n, tuple(rows))
            for _ in range(orders_per_graph):
                order = list(range(n))
                rng.shuffle(order)
                for mode in ("consistent", "strong"):
                    rep.check(chi_eq_omega(conflict_rows(g, order, mode), n),
                              f"n={n} mask={mask} order={order} mode={mode}")
    return rep


def sweep_model_roundtrip(samples: int = 300, n_max: int = 10,
                          seed: int = 0) -> SweepReport:
    """Model constructions reproduce the graph and satisfy the predicates."""
    rep = SweepReport("roundtrip", {"samples": samples, "n": n_max, "seed": seed})
    rng = random.Random(seed)
    for i in range(samples):
        n = rng.randint(2, n_max)
        g, cert = random_consistent_instance(n, 2, rng)
        label = f"sample {i} n={n}"
        m1 = boxes.build_m1(g, cert)
        rep.check(boxes.intersection_graph(m1) == g, f"{label}: m1 graph differs")
        lab, _ = boxes.check_diagonal(m1)
        rep.check(lab == "two_diagonal", f"{label}: m1 not 2-diagonal ({lab})")
        ok, pair = boxes.check_blocking(m1)
        rep.check(ok, f"{label}: m1 not blocking ({pair})")
        strong, _ = is_consistent(g, cert, "strong")
        if strong:
            okb, pair = boxes.check_bi_semi_proper(m1)
            rep.check(okb, f"{label}: strong source but not bi-semi-proper ({pair})")
        rec = boxes.recover_representation(m1, "consistent")
        rep.check(verify_certificate(g, rec, "thin") and rec.k == 2,
                  f"{label}: recovered representation invalid")
        m2 = boxes.build_m2(m1)
        rep.check(boxes.intersection_graph(m2) == g, f"{label}: m2 graph differs")
        rep.check(all(b.x2 == 0 or b.y2 == 0 for b in m2.boxes),
                  f"{label}: m2 box not grounded")
        m3 = gridpaths.build_m3(g, cert)
        rep.check(gridpaths.path_intersection_graph(m3) == g,
                  f"{label}: m3 graph differs")
        rep.check(m3.max_bends() <= 1, f"{label}: m3 has extra bends")
        m4 = gridpaths.build_m4(g, cert)
        rep.check(gridpaths.path_intersection_graph(m4) == g,
                  f"{label}: m4 graph differs")
        rep.check(all(p.bends == 1 and p.pts[1][1] == -p.pts[1][0]
                      for p in m4.paths), f"{label}: m4 corner off the diagonal")
        okl, pair = gridpaths.check_blocking_l(m4)
        rep.check(okl, f"{label}: m4 not blocking ({pair})")

        gs, cs = random_strongly_consistent_instance(n, 2, rng)
        m1s = boxes.build_m1(gs, cs)
        okb, pair = boxes.check_bi_semi_proper(m1s)
        rep.check(okb, f"{label}: strong m1 not bi-semi-proper ({pair})")
        recs = boxes.recover_representation(m1s, "strong")
        rep.check(verify_certificate(gs, recs, "pthin"),
                  f"{label}: strong recovery invalid")

        gi, ci = random_consistent_instance(n, 2, rng, independent=True)
        m3i = gridpaths.build_m3(gi, ci, independent=True)
        rep.check(m3i.max_bends() == 0, f"{label}: independent m3 has bends")
        rep.check(gridpaths.path_intersection_graph(m3i) == gi,
                  f"{label}: independent m3 graph differs")
    return rep


def sweep_vpg3(samples: int = 100, n_max: int = 9, seed: int = 0) -> SweepReport:
    """3-class construction: equality with at most 3 bends (1 independent)."""
    rep = SweepReport("vpg3", {"samples": samples, "n": n_max, "seed": seed})
    rng = random.Random(seed)
    for i in range(samples):
        n = rng.randint(3, n_max)
        g, cert = random_consistent_instance(n, 3, rng)
        m = gridpaths.build_vpg_3thin(g, cert)
        rep.check(gridpaths.path_intersection_graph(m) == g,
                  f"sample {i}: graph differs")
        rep.check(m.max_bends() <= 3, f"sample {i}: more than 3 bends")
        gi, ci = random_consistent_instance(n, 3, rng, independent=True)
        mi = gridpaths.build_vpg_3thin(gi, ci, independent=True)
        rep.check(gridpaths.path_intersection_graph(mi) == gi,
                  f"sample {i}: independent graph differs")
        rep.check(mi.max_bends() <= 1, f"sample {i}: independent bends exceed 1")
    octa = get_fixture("octahedron").graph
    res = exact_thinness(octa, "thin")
    rep.check(res.value == 3, "octahedron: thinness is not 3")
    mo = gridpaths.build_vpg_3thin(octa, res.certificate)
    rep.check(gridpaths.path_intersection_graph(mo) == octa,
              "octahedron: model graph differs")
    rep.check(mo.max_bends() <= 3, "octahedron: more than 3 bends")
    return rep


def sweep_fig1(budget_seconds: float = 120.0) -> SweepReport:
    """The two bundled 15-vertex graphs have the advertised values."""
    from .ordering import Budget

    rep = SweepReport("fig1", {"budget": budget_seconds})
    budget = Budget(max_seconds=budget_seconds)
    a = get_fixture("fig1a")
    b = get_fixture("fig1b")
    ra = exact_thinness(a.graph, "thin", budget)
    rep.check(ra.exact and ra.value == 2, f"fig1a: thin {ra.value} exact={ra.exact}")
    rap = exact_thinness(a.graph, "pthin", budget)
    rep.check(rap.exact and rap.value == 3,
              f"fig1a: pthin {rap.value} exact={rap.exact}")
    rb = exact_thinness(b.graph, "pthin", budget)
    rep.check(rb.exact and rb.value == 2, f"fig1b: pthin {rb.value} exact={rb.exact}")
    return rep


def sweep_g72() -> SweepReport:
    """Certificate and model facts of the 72-vertex fixture."""
    rep = SweepReport("g72", {})
    fx = get_fixture("g72")
    rep.check(verify_certificate(fx.graph, fx.representation, "thin")
              and fx.representation.k == 3, "g72: 3-class certificate fails")
    rep.check(boxes.intersection_graph(fx.box_model) == fx.graph,
              "g72: model does not reproduce the graph")
    lab, _ = boxes.check_diagonal(fx.box_model)
    rep.check(lab == "two_diagonal", f"g72: diagonal label {lab}")
    ok, _ = boxes.check_blocking(fx.box_model)
    rep.check(not ok, "g72: model unexpectedly blocking")
    return rep


SWEEPS = {
    "fig1": sweep_fig1,
    "g72": sweep_g72,
    "forb-pat-2-thin": sweep_forb_pat_2_thin,
    "pthin-le-bw": sweep_pthin_le_bw,
    "theorem2": sweep_theorem2,
    "peak": sweep_peak,
    "ceo": sweep_ceo,
    "dpat": sweep_dpat,
    "class-theorems": sweep_class_theorems,
    "perfection": sweep_perfection,
    "roundtrip": sweep_model_roundtrip,
    "vpg3": sweep_vpg3,
}


def run_sweep(name: str, **kwargs) -> SweepReport:
    if name not in SWEEPS:
        raise KeyError(f"unknown sweep {name!r}; known: {', '.join(sorted(SWEEPS))}")
    return SWEEPS[name](**kwargs)
