import hashlib

import pytest

from thinness import boxes, gridpaths
from thinness.gallery import (b0vpg_grid, bipartite_claw, fig1a, fig1b,
                              fixture_names, g72, get_fixture, octahedron,
                              subdivided_k5, wheel4)
from thinness.graphs import bits
from thinness.ordering import exact_thinness, verify_certificate


def edge_checksum(g) -> str:
    payload = ";".join(f"{u}-{v}" for u, v in sorted(g.edges()))
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def test_fig1_transcription_checksums():
    # pins the hand-transcribed edge lists; a change here invalidates
    # many downstream expectations, so fail loudly
    a, b = fig1a(), fig1b()
    assert (a.graph.n, a.graph.edge_count()) == (15, 25)
    assert (b.graph.n, b.graph.edge_count()) == (15, 26)
    assert edge_checksum(a.graph) == "d31e535e6c3800d6"
    assert edge_checksum(b.graph) == "2a567aafc7cb5482"


def test_fig1a_attached_certificate():
    fx = fig1a()
    assert verify_certificate(fx.graph, fx.representation, "thin")
    assert fx.representation.k == 2
    # vertex 8 (the top of the tall class) sees all of its class and the
    # upper half of the other one
    assert fx.graph.degree(8) == 12


def test_fig1b_attached_certificate_is_strong():
    fx = fig1b()
    assert verify_certificate(fx.graph, fx.representation, "pthin")
    assert fx.representation.k == 2


def test_g72_structure():
    fx = g72()
    g = fx.graph
    assert g.n == 72 and g.edge_count() == 240
    # pairing edges inside each side
    for k in range(1, 17):
        assert g.has_edge(2 * k - 2, 2 * k - 1)
        assert g.has_edge(36 + 2 * k - 2, 36 + 2 * k - 1)
    # group 1 of side a is complete to groups 1 and 5 of side b
    assert g.has_edge(1, 36 + 1)   # a2 - b2
    assert g.has_edge(1, 36 + 33)  # a2 - b34
    assert not g.has_edge(1, 36 + 9)  # a2 - b10 (group 2): anticomplete


def test_g72_group_one_and_five_induce_complete_bipartite():
    from thinness.graphs import bipartite_half, induced_subgraph

    fx = g72()
    # 1-based member indices of side-a groups 1 and 5
    a1 = [2, 4, 6, 8]
    a5 = [33, 34, 35, 36]
    a_side = [i - 1 for i in a1 + a5]
    b_side = [35 + i for i in a1 + a5]
    sub = induced_subgraph(fx.graph, a_side + b_side)
    cross = bipartite_half(sub, range(8), range(8, 16))
    assert cross.edge_count() == 64  # complete across the sides


def test_g72_model_and_certificate():
    import time

    start = time.monotonic()
    fx = g72()
    assert boxes.intersection_graph(fx.box_model) == fx.graph
    assert boxes.check_diagonal(fx.box_model)[0] == "two_diagonal"
    ok, pair = boxes.check_blocking(fx.box_model)
    assert not ok and pair is not None
    assert verify_certificate(fx.graph, fx.representation, "thin")
    assert fx.representation.k == 3
    assert time.monotonic() - start < 5.0


def test_g72_lower_bound_fact_not_asserted():
    fx = g72()
    tagged = {f.prop: f.status for f in fx.facts}
    assert tagged["thin"] == "unverified-citation"
    assert tagged["thin<=3"] == "asserted"


def test_wheel4_values():
    fx = wheel4()
    assert exact_thinness(fx.graph, "thin").value == 2
    assert exact_thinness(fx.graph, "indpthin").value == 3


def test_cycle6_values():
    fx = get_fixture("cycle-6")
    assert exact_thinness(fx.graph, "thin").value == 2
    assert exact_thinness(fx.graph, "indthin").value == 3


def test_complete_bipartite_fact():
    fx = get_fixture("kbip-4-4")
    assert exact_thinness(fx.graph, "pthin").value == 2


def test_bipartite_claw_facts():
    fx = bipartite_claw()
    assert exact_thinness(fx.graph, "pthin").value == 2


def test_octahedron_fact():
    assert exact_thinness(octahedron().graph, "thin").value == 3


def test_subdivided_k5_certificate():
    fx = subdivided_k5()
    assert fx.graph.n == 15 and fx.graph.edge_count() == 20
    assert fx.representation is not None
    assert fx.representation.k <= 4
    assert verify_certificate(fx.graph, fx.representation, "thin")


def test_b0grid_degree_and_embedding():
    for r in (2, 3):
        fx = b0vpg_grid(r)
        assert fx.graph.max_degree() == 6
        assert gridpaths.path_intersection_graph(fx.grid_model) == fx.graph
        assert fx.grid_model.max_bends() == 0
        assert _embeds_grid(fx.graph, r), f"grid-{r} not found inside b0grid-{r}"


def _embeds_grid(host, r: int) -> bool:
    """Backtracking search: injective map of grid-r preserving edges."""
    grid = get_fixture(f"grid-{r}").graph
    order = list(range(grid.n))
    assignment: dict[int, int] = {}
    used = [False] * host.n

    def rec(idx: int) -> bool:
        if idx == grid.n:
            return True
        v = order[idx]
        needed = [u for u in bits(grid.adj[v]) if u in assignment]
        for cand in range(host.n):
            if used[cand]:
                continue
            if all(host.has_edge(cand, assignment[u]) for u in needed):
                assignment[v] = cand
                used[cand] = True
                if rec(idx + 1):
                    return True
                used[cand] = False
                del assignment[v]
        return False

    return rec(0)


def test_gallery_lookup():
    assert get_fixture("grid-3").graph.n == 9
    assert get_fixture("kbip-2-3").graph.edge_count() == 6
    with pytest.raises(KeyError):
        get_fixture("nope")
    with pytest.raises(KeyError):
        get_fixture("grid")
    assert any(name.startswith("grid-") for name in fixture_names())


def test_every_fixture_certificate_verifies():
    for name in ("fig1a", "fig1b", "g72", "subdivided_k5"):
        fx = get_fixture(name)
        if fx.representation is not None:
            assert verify_certificate(fx.graph, fx.representation, fx.rep_kind)
