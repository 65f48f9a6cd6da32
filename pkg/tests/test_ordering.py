import itertools
import random

from conftest import (brute_min_classes_for_order, brute_thinness, rep_of,
                      small_graphs, triple_consistent)

from thinness.coloring import chromatic_number, max_clique
from thinness.gallery import complete_bipartite, fig1a, fig1b
from thinness.graphs import Graph, Partition, Representation, enumerate_connected_graphs
from thinness.ordering import (Budget, conflict_graph, conflict_rows,
                               exact_thinness, is_consistent,
                               min_classes_for_order, rep_from_json,
                               rep_to_json, verify_certificate)


def test_fig1a_attached_representation_is_consistent():
    fx = fig1a()
    ok, wit = is_consistent(fx.graph, fx.representation, "consistent")
    assert ok, wit


def test_complete_graph_single_class_both_modes():
    k4 = Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    rep = rep_of([0, 1, 2, 3], [0, 0, 0, 0])
    assert is_consistent(k4, rep, "consistent")[0]
    assert is_consistent(k4, rep, "strong")[0]


def test_p3_bad_order_witness(p3):
    # order a < c < b with one class: fine forward (b sees both earlier
    # vertices) but the reverse fails, witnessed by the triple (a, c, b)
    # where a is adjacent to b yet not to c
    rep = rep_of([0, 2, 1], [0, 0, 0])
    assert is_consistent(p3, rep, "consistent")[0]
    ok, wit = is_consistent(p3, rep, "strong")
    assert not ok and wit == (0, 2, 1)


def test_consistency_matches_direct_definition():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(2, 6)
        g = Graph.from_edges(n, [(u, v) for u in range(n)
                                 for v in range(u + 1, n) if rng.random() < 0.5])
        order = list(range(n))
        rng.shuffle(order)
        classes = [rng.randrange(2) for _ in range(n)]
        classes[order[0]] = 0
        if len(set(classes)) == 1:
            classes[order[-1]] = 0
        k = max(classes) + 1
        rep = Representation(tuple(order), Partition(tuple(classes), k))
        for mode in ("consistent", "strong"):
            got, wit = is_consistent(g, rep, mode)
            want = triple_consistent(g, order, classes, mode == "strong")
            assert got == want, (g.edges(), order, classes, mode, wit)


def test_conflict_graph_p3_edgeless(p3):
    cg = conflict_graph(p3, [0, 1, 2], "consistent")
    assert cg.edge_count() == 0


def test_conflict_graph_c4_single_edge(c4):
    cg = conflict_graph(c4, [0, 1, 2, 3], "consistent")
    assert sorted(cg.edges()) == [(0, 1)]  # witness z = 3


def test_conflict_graph_contained_in_strong_version():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(2, 7)
        g = Graph.from_edges(n, [(u, v) for u in range(n)
                                 for v in range(u + 1, n) if rng.random() < 0.5])
        order = list(range(n))
        rng.shuffle(order)
        weak = conflict_rows(g, order, "consistent")
        strong = conflict_rows(g, order, "strong")
        for v in range(n):
            assert weak[v] & ~strong[v] == 0


def test_partition_consistent_iff_conflict_coloring():
    # exhaustive over partitions for sampled graphs and orders
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(2, 5)
        g = Graph.from_edges(n, [(u, v) for u in range(n)
                                 for v in range(u + 1, n) if rng.random() < 0.5])
        order = list(range(n))
        rng.shuffle(order)
        for mode in ("consistent", "strong"):
            rows = conflict_rows(g, order, mode)
            for assign in itertools.product(range(n), repeat=n):
                proper = all(not rows[u] >> v & 1 or assign[u] != assign[v]
                             for u in range(n) for v in range(n))
                ok = triple_consistent(g, order, assign, mode == "strong")
                assert proper == ok


def test_min_classes_examples(p3, c4):
    assert min_classes_for_order(p3, [0, 1, 2], "consistent", False).k == 1
    assert min_classes_for_order(c4, [0, 1, 2, 3], "consistent", False).k == 2
    k22 = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    got = min_classes_for_order(k22, [0, 1, 2, 3], "strong", True)
    want = brute_min_classes_for_order(k22, [0, 1, 2, 3], "strong", True)
    assert got.k == want == 2


def test_min_classes_matches_brute_force():
    rng = random.Random(17)
    for _ in range(120):
        n = rng.randint(2, 5)
        g = Graph.from_edges(n, [(u, v) for u in range(n)
                                 for v in range(u + 1, n) if rng.random() < 0.5])
        order = list(range(n))
        rng.shuffle(order)
        mode = rng.choice(("consistent", "strong"))
        independent = rng.random() < 0.5
        part = min_classes_for_order(g, order, mode, independent)
        rep = Representation(tuple(order), part)
        assert is_consistent(g, rep, mode)[0]
        if independent:
            assert all(part.class_of[u] != part.class_of[v] for u, v in g.edges())
        assert part.k == brute_min_classes_for_order(g, order, mode, independent)


def test_min_classes_is_deterministic(c4):
    a = min_classes_for_order(c4, [0, 1, 2, 3], "consistent", False)
    b = min_classes_for_order(c4, [0, 1, 2, 3], "consistent", False)
    assert a == b


def test_exact_thinness_matches_brute_force_small():
    for n in range(1, 5):
        for g in enumerate_connected_graphs(n):
            for kind in ("thin", "pthin", "indthin", "indpthin"):
                assert exact_thinness(g, kind).value == brute_thinness(g, kind), \
                    (n, g.edges(), kind)


def test_exact_thinness_matches_brute_force_sampled_n5():
    rng = random.Random(23)
    graphs = list(enumerate_connected_graphs(5))
    for g in rng.sample(graphs, 25):
        for kind in ("thin", "pthin", "indthin", "indpthin"):
            assert exact_thinness(g, kind).value == brute_thinness(g, kind)


def test_monotonicity_between_kinds():
    rng = random.Random(29)
    graphs = list(enumerate_connected_graphs(5))
    for g in rng.sample(graphs, 40):
        thin = exact_thinness(g, "thin").value
        pthin = exact_thinness(g, "pthin").value
        indthin = exact_thinness(g, "indthin").value
        indpthin = exact_thinness(g, "indpthin").value
        assert thin <= pthin <= indpthin
        assert thin <= indthin <= indpthin


def test_certificates_verify():
    rng = random.Random(31)
    graphs = list(enumerate_connected_graphs(5))
    for g in rng.sample(graphs, 30):
        for kind in ("thin", "pthin", "indthin", "indpthin"):
            res = exact_thinness(g, kind)
            assert res.exact
            assert verify_certificate(g, res.certificate, kind)
            assert res.certificate.k == res.value


def test_k33_pthin_two():
    g = complete_bipartite(3, 3).graph
    assert exact_thinness(g, "pthin").value == 2


def test_fig1a_rep_fails_as_proper_certificate():
    fx = fig1a()
    assert verify_certificate(fx.graph, fx.representation, "thin")
    assert not verify_certificate(fx.graph, fx.representation, "pthin")
    ok, wit = is_consistent(fx.graph, fx.representation, "strong")
    assert not ok and wit is not None


def test_fig1b_rep_is_strong_certificate():
    fx = fig1b()
    assert verify_certificate(fx.graph, fx.representation, "pthin")


def test_thinness_of_single_vertex_and_edgeless():
    assert exact_thinness(Graph.from_edges(1, []), "thin").value == 1
    assert exact_thinness(Graph.from_edges(4, []), "thin").value == 1
    assert exact_thinness(Graph.from_edges(4, []), "indpthin").value == 1


def test_interval_iff_thin_one():
    from thinness.patterns import ord_membership, parse_family

    fam = parse_family("P1")
    for n in range(1, 6):
        for g in enumerate_connected_graphs(n):
            member = ord_membership(g, fam) is not None
            assert member == (exact_thinness(g, "thin").value == 1)


def test_complete_bipartite_class_structure():
    # with one possible exception per side (its greatest vertex), each
    # side of a complete bipartite graph lives inside a single class
    for a in range(2, 5):
        for b in range(2, 5):
            g = complete_bipartite(a, b).graph
            res = exact_thinness(g, "thin")
            assert res.value == 2
            rep = res.certificate
            pos = rep.positions()
            for side in (range(a), range(a, a + b)):
                side = sorted(side, key=lambda v: pos[v])
                body = side[:-1]
                assert len({rep.partition.class_of[v] for v in body}) == 1


def test_budget_expires():
    fx = fig1a()
    res = exact_thinness(fx.graph, "pthin", Budget(max_nodes=50))
    assert not res.exact
    assert res.value >= 3  # upper bound from heuristics
    assert verify_certificate(fx.graph, res.certificate, "pthin")


def test_perfection_spot_check():
    rng = random.Random(37)
    for g in [g for g in small_graphs(5)][::97]:
        order = list(range(g.n))
        rng.shuffle(order)
        for mode in ("consistent", "strong"):
            rows = conflict_rows(g, order, mode)
            omega, _ = max_clique(rows, (1 << g.n) - 1)
            chi, _ = chromatic_number(rows, g.n)
            assert omega == chi


def test_certificate_json_round_trip():
    fx = fig1b()
    data = rep_to_json(fx.representation, "pthin")
    rep, kind = rep_from_json(data)
    assert rep == fx.representation and kind == "pthin"
    assert data["k"] == 2 and data["kind"] == "pthin"
