import json
import random

import pytest

from thinness.gallery import fig1a, fig1b, octahedron
from thinness.gridpaths import (GridPath, GridPathModel, build_m3, build_m4,
                                build_vpg_3thin, check_blocking_l,
                                grid_model_from_json, grid_model_to_json,
                                path_intersection_graph)
from thinness.graphs import Graph, Partition, Representation
from thinness.ordering import exact_thinness
from thinness.sampling import random_consistent_instance


def test_grid_path_validation():
    with pytest.raises(ValueError):
        GridPath(0, ((0, 0), (0, 0)))  # zero length
    with pytest.raises(ValueError):
        GridPath(0, ((0, 0), (1, 1)))  # diagonal
    with pytest.raises(ValueError):
        GridPath(0, ((0, 0), (2, 0), (4, 0)))  # collinear consecutive
    p = GridPath(0, ((0, 4), (0, 0), (4, 0)))
    assert p.bends == 1 and p.shape() == "NE"


def test_crossing_segments_one_edge():
    m = GridPathModel((GridPath(0, ((-2, 0), (2, 0))),
                       GridPath(1, ((0, -2), (0, 2)))))
    assert path_intersection_graph(m).edge_count() == 1


def test_m3_matches_source_graph_and_shapes():
    fx = fig1a()
    m = build_m3(fx.graph, fx.representation)
    assert path_intersection_graph(m) == fx.graph
    assert all(p.bends == 1 and p.shape() == "NE" for p in m.paths)


def test_m3_independent_zero_bends():
    rng = random.Random(71)
    for _ in range(60):
        n = rng.randint(2, 10)
        g, rep = random_consistent_instance(n, 2, rng, independent=True)
        m = build_m3(g, rep, independent=True)
        assert m.max_bends() == 0
        assert path_intersection_graph(m) == g


def test_m3_independent_rejects_dependent_classes():
    # a same-class edge breaks the independent variant
    g = Graph.from_edges(3, [(0, 1)])
    rep = Representation((0, 1, 2), Partition((0, 0, 1), 2))
    with pytest.raises(ValueError):
        build_m3(g, rep, independent=True)


def test_m4_fig1a_reproduces_graph():
    fx = fig1a()
    m = build_m4(fx.graph, fx.representation)
    assert path_intersection_graph(m) == fx.graph


def test_m4_fig1b_corners_on_antidiagonal():
    fx = fig1b()
    m = build_m4(fx.graph, fx.representation)
    assert path_intersection_graph(m) == fx.graph
    corners = [p.pts[1] for p in m.paths]
    assert all(y == -x for x, y in corners)
    assert len(set(corners)) == len(corners)
    ok, _ = check_blocking_l(m)
    assert ok


def test_m4_k2_same_class_nested_corners():
    g = Graph.from_edges(2, [(0, 1)])
    rep = Representation((0, 1), Partition((0, 0), 1))
    m = build_m4(g, rep)
    assert path_intersection_graph(m).edge_count() == 1


def test_m4_edgeless_pair_is_blocking():
    g = Graph.from_edges(2, [])
    rep = Representation((0, 1), Partition((0, 1), 2))
    m = build_m4(g, rep)
    assert path_intersection_graph(m).edge_count() == 0
    ok, _ = check_blocking_l(m)
    assert ok


def test_blocking_l_counterexample():
    # two far-apart plain L's whose prolongations miss each other:
    # the left path sits below-left, arms pointing away
    a = GridPath(0, ((0, 10), (0, 0), (10, 0)))
    b = GridPath(1, ((20, 40), (20, 30), (30, 30)))
    m = GridPathModel((a, b))
    ok, pair = check_blocking_l(m)
    assert not ok and set(pair) == {0, 1}


def test_blocking_l_requires_one_bend():
    m = GridPathModel((GridPath(0, ((0, 0), (2, 0))),))
    with pytest.raises(ValueError):
        check_blocking_l(m)


def test_m4_random_round_trip():
    rng = random.Random(73)
    for _ in range(120):
        n = rng.randint(2, 10)
        g, rep = random_consistent_instance(n, 2, rng)
        m = build_m4(g, rep)
        assert path_intersection_graph(m) == g
        assert all(p.bends == 1 for p in m.paths)
        assert all(p.pts[1][1] == -p.pts[1][0] for p in m.paths)
        assert check_blocking_l(m)[0]


def test_vpg3_octahedron():
    g = octahedron().graph
    res = exact_thinness(g, "thin")
    assert res.value == 3
    m = build_vpg_3thin(g, res.certificate)
    assert path_intersection_graph(m) == g
    assert m.max_bends() <= 3


def test_vpg3_k3_independent_singletons():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    rep = Representation((0, 1, 2), Partition((0, 1, 2), 3))
    m = build_vpg_3thin(g, rep, independent=True)
    assert path_intersection_graph(m) == g
    assert m.max_bends() <= 1


def test_vpg3_accepts_padded_two_class_certificate():
    fx = fig1a()
    g0 = fx.graph
    # add an isolated vertex in a third class
    g = Graph.from_edges(g0.n + 1, g0.edges())
    order = tuple(list(fx.representation.order) + [g0.n])
    classes = tuple(list(fx.representation.partition.class_of) + [2])
    rep = Representation(order, Partition(classes, 3))
    m = build_vpg_3thin(g, rep)
    assert path_intersection_graph(m) == g
    assert m.max_bends() <= 3


def test_vpg3_random():
    rng = random.Random(79)
    for _ in range(80):
        n = rng.randint(3, 9)
        g, rep = random_consistent_instance(n, 3, rng)
        m = build_vpg_3thin(g, rep)
        assert path_intersection_graph(m) == g, (g.edges(), rep)
        assert m.max_bends() <= 3
        gi, ri = random_consistent_instance(n, 3, rng, independent=True)
        mi = build_vpg_3thin(gi, ri, independent=True)
        assert path_intersection_graph(mi) == gi
        assert mi.max_bends() <= 1


def test_intersection_predicate_symmetric_reflexive():
    from thinness.gridpaths import paths_intersect

    p = GridPath(0, ((0, 4), (0, 0), (4, 0)))
    q = GridPath(1, ((-2, 2), (2, 2), (2, -2)))
    assert paths_intersect(p, p)
    assert paths_intersect(p, q) == paths_intersect(q, p)


def test_grid_model_json_round_trip():
    fx = fig1b()
    m = build_m4(fx.graph, fx.representation)
    back = grid_model_from_json(json.loads(json.dumps(grid_model_to_json(m))))
    assert back == m
