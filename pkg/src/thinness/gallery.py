"""Named example graphs with attached certificates, models, and facts.

Each fixture carries ``facts``: (property, value, status) triples where
status "asserted" means the test suite checks the value at desk scale
and "unverified-citation" marks known facts that are out of reach here
(they are reported but never asserted).
"""

from __future__ import annotations

from dataclasses import dataclass

from .boxes import Box, BoxModel
from .graphs import Graph, Partition, Representation
from .gridpaths import GridPath, GridPathModel, path_intersection_graph
from .ordering import Budget, decide_thinness_at_most, min_classes_for_order


@dataclass(frozen=True)
class Fact:
    prop: str
    value: object
    status: str = "asserted"  # or "unverified-citation"


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: Graph
    facts: tuple[Fact, ...] = ()
    representation: Representation | None = None
    rep_kind: str | None = None
    box_model: BoxModel | None = None
    grid_model: GridPathModel | None = None


# ---------------------------------------------------------------------------
# the two 15-vertex demonstration graphs (classes of 9 and 6 vertices)

_FIG1A_EDGES = [
    (3, 2), (3, 1), (3, 0),
    (7, 6), (7, 5), (7, 4),
    (14, 13), (14, 12), (14, 11),
    (9, 1), (9, 2), (10, 1), (10, 2),
    (8, 11), (8, 12), (8, 13), (8, 14),
    (8, 7), (8, 6), (8, 5), (8, 4), (8, 3), (8, 2), (8, 1), (8, 0),
]

_FIG1B_EDGES = [
    (3, 2), (1, 0), (3, 4), (4, 2),
    (7, 6), (7, 5), (7, 4), (6, 5), (6, 4), (5, 4),
    (14, 13), (14, 12), (13, 12), (11, 12),
    (9, 1), (9, 2), (10, 1), (10, 2),
    (7, 12), (6, 12), (7, 13), (8, 12), (8, 13), (8, 14),
    (8, 7), (8, 6),
]

# both graphs: vertices 0..8 form the 9-vertex class, 9..14 the 6-vertex
# class; the attached order interleaves them bottom to top
_FIG1_ORDER = (0, 1, 9, 10, 2, 3, 4, 11, 5, 12, 6, 13, 7, 14, 8)
_FIG1_CLASSES = tuple([0] * 9 + [1] * 6)


def _names(prefix_a: str, na: int, prefix_b: str, nb: int) -> tuple[str, ...]:
    return tuple([f"{prefix_a}{i + 1}" for i in range(na)]
                 + [f"{prefix_b}{i + 1}" for i in range(nb)])


def fig1a() -> Fixture:
    g = Graph.from_edges(15, _FIG1A_EDGES, _names("v", 9, "w", 6))
    rep = Representation(_FIG1_ORDER, Partition(_FIG1_CLASSES, 2))
    return Fixture(
        "fig1a", g,
        facts=(Fact("thin", 2), Fact("pthin", 3)),
        representation=rep, rep_kind="thin",
    )


def fig1b() -> Fixture:
    g = Graph.from_edges(15, _FIG1B_EDGES, _names("x", 9, "z", 6))
    rep = Representation(_FIG1_ORDER, Partition(_FIG1_CLASSES, 2))
    return Fixture(
        "fig1b", g,
        facts=(Fact("pthin", 2),),
        representation=rep, rep_kind="pthin",
    )


# ---------------------------------------------------------------------------
# the 72-vertex 2-diagonal example


def _g72_groups() -> tuple[list[list[int]], list[list[int]]]:
    """1-based index groups: (A_0..A_5, B_0..B_5)."""
    a_groups: list[list[int]] = [[] for _ in range(6)]
    a_groups[0] = [i for i in range(1, 33) if i % 2 == 1]
    for k in range(1, 5):
        a_groups[k] = [i for i in range(8 * (k - 1) + 1, 8 * k + 1) if i % 2 == 0]
    a_groups[5] = [33, 34, 35, 36]
    return a_groups, [list(grp) for grp in a_groups]


def g72() -> Fixture:
    """72-vertex graph with a 2-diagonal (but not blocking) box model.

    Vertices 0..35 are a_1..a_36, vertices 36..71 are b_1..b_36.  Group
    j (1..4) of the a side is complete to groups j and 5 of the b side;
    group 5 is complete to everything on the b side except group 0;
    consecutive pairs within each side are the only internal edges.
    """
    a_groups, b_groups = _g72_groups()

    def a(i: int) -> int:
        return i - 1

    def b(i: int) -> int:
        return 35 + i

    edges: set[tuple[int, int]] = set()
    for j in range(1, 5):
        for i in a_groups[j]:
            for target in b_groups[j] + b_groups[5]:
                edges.add((a(i), b(target)))
    for i in a_groups[5]:
        for grp in range(1, 6):
            for target in b_groups[grp]:
                edges.add((a(i), b(target)))
    for k in range(1, 17):
        edges.add((a(2 * k - 1), a(2 * k)))
        edges.add((b(2 * k - 1), b(2 * k)))
    names = tuple([f"a{i}" for i in range(1, 37)] + [f"b{i}" for i in range(1, 37)])
    g = Graph.from_edges(72, sorted(edges), names)

    # box model: a_i corner at (i, i+36), b_i mirrored across y = x;
    # everything recentred so the diagonals straddle the origin
    def group_of(i: int) -> int:
        for gi, grp in enumerate(a_groups):
            if i in grp:
                return gi
        raise AssertionError

    boxes = []
    for i in range(1, 37):
        gi = group_of(i)
        if gi == 0:
            x1, y1 = i - 0.5, i + 35.5
        elif gi == 5:
            x1, y1 = i - 0.5, 0.0
        else:
            x1 = i - 1.5
            y1 = 0.0 if gi == 1 else 8 * (gi - 1) + 0.5
        x2, y2 = float(i), float(i + 36)
        sh = 36.5
        boxes.append(Box(a(i), round(2 * (x1 - sh)), round(2 * (x2 - sh)),
                         round(2 * (y1 - sh)), round(2 * (y2 - sh)), cls=2))
        boxes.append(Box(b(i), round(2 * (y1 - sh)), round(2 * (y2 - sh)),
                         round(2 * (x1 - sh)), round(2 * (x2 - sh)), cls=1))
    boxes.sort(key=lambda bx: bx.v)
    model = BoxModel(tuple(boxes), d1=-72, d2=72)

    # 3-class certificate: non-group-0 a's, non-group-0 b's, group 0;
    # order a1 a2 b1 b2 a3 a4 b3 b4 ...
    class_of = []
    for i in range(1, 37):
        class_of.append(2 if group_of(i) == 0 else 0)
    for i in range(1, 37):
        class_of.append(2 if group_of(i) == 0 else 1)
    order = []
    for k in range(1, 19):
        order += [a(2 * k - 1), a(2 * k), b(2 * k - 1), b(2 * k)]
    rep = Representation(tuple(order), Partition(tuple(class_of), 3))
    return Fixture(
        "g72", g,
        facts=(
            Fact("thin<=3", True),
            Fact("thin", 3, "unverified-citation"),
            Fact("model_matches_graph", True),
            Fact("two_diagonal", True),
            Fact("blocking", False),
        ),
        representation=rep, rep_kind="thin", box_model=model,
    )


# ---------------------------------------------------------------------------
# parametric families


def grid(r: int) -> Fixture:
    """The r x r grid graph; vertex (i,j) is i*r+j."""
    if r < 1:
        raise ValueError("grid needs r >= 1")
    edges = []
    for i in range(r):
        for j in range(r):
            if i + 1 < r:
                edges.append((i * r + j, (i + 1) * r + j))
            if j + 1 < r:
                edges.append((i * r + j, i * r + j + 1))
    g = Graph.from_edges(r * r, edges)
    return Fixture(f"grid-{r}", g, facts=(Fact("iso_peak>=r", r),))


def b0vpg_grid(r: int) -> Fixture:
    """Zero-bend segment family whose intersection graph contains grid-r.

    Horizontal segments [i-0.1, i+1.1] x {j} for 0 <= i,j <= r and
    vertical ones {i} x [j-1.1, j+0.1] for 1 <= i,j <= r, scaled by 10
    to integer coordinates.  Max degree is 6 no matter how large r is.
    """
    if r < 1:
        raise ValueError("b0vpg_grid needs r >= 1")
    paths = []
    names = []
    v = 0
    for j in range(r + 1):
        for i in range(r + 1):
            paths.append(GridPath(v, ((10 * i - 1, 10 * j), (10 * i + 11, 10 * j))))
            names.append(f"h{i},{j}")
            v += 1
    for j in range(1, r + 1):
        for i in range(1, r + 1):
            paths.append(GridPath(v, ((10 * i, 10 * j - 11), (10 * i, 10 * j + 1))))
            names.append(f"v{i},{j}")
            v += 1
    model = GridPathModel(tuple(paths))
    g0 = path_intersection_graph(model)
    g = Graph(g0.n, g0.adj, tuple(names))
    return Fixture(
        f"b0grid-{r}", g,
        facts=(Fact("max_degree", 6), Fact("contains_grid", r)),
        grid_model=model,
    )


def complete_bipartite(a: int, b: int) -> Fixture:
    g = Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    facts = []
    if a >= 2 and b >= 2:
        facts.append(Fact("pthin", 2))
    return Fixture(f"kbip-{a}-{b}", g, facts=tuple(facts))


def wheel4() -> Fixture:
    """4-cycle plus a universal hub (vertex 4)."""
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0),
                             (4, 0), (4, 1), (4, 2), (4, 3)])
    return Fixture("wheel4", g, facts=(Fact("thin", 2), Fact("indpthin", 3)))


def cycle(n: int) -> Fixture:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    g = Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    facts = []
    if n == 6:
        facts = [Fact("thin", 2), Fact("indthin", 3)]
    return Fixture(f"cycle-{n}", g, facts=tuple(facts))


def bipartite_claw() -> Fixture:
    """Subdivision of the 3-star: center 0, middles 1..3, leaves 4..6."""
    g = Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])
    return Fixture("bipartite_claw", g,
                   facts=(Fact("pthin", 2), Fact("proper_independent_two_thin", False)))


def octahedron() -> Fixture:
    """Complement of a perfect matching on six vertices."""
    edges = [(u, v) for u in range(6) for v in range(u + 1, 6)
             if v != u + 3 or u >= 3]
    g = Graph.from_edges(6, edges)
    return Fixture("octahedron", g, facts=(Fact("thin", 3),))


def subdivided_k5() -> Fixture:
    """Every edge of the 5-clique subdivided once (15 vertices).

    A certificate with at most 4 classes is recomputed by a budgeted
    solver run; the non-VPG half of the usual claim is carried as an
    unverified citation.
    """
    edges = []
    mid = 5
    for u in range(5):
        for v in range(u + 1, 5):
            edges.append((u, mid))
            edges.append((mid, v))
            mid += 1
    g = Graph.from_edges(15, edges)
    rep = _certificate_at_most(g, 4, "thin")
    return Fixture(
        "subdivided_k5", g,
        facts=(Fact("thin<=4", True), Fact("vpg", False, "unverified-citation")),
        representation=rep, rep_kind="thin",
    )


def _certificate_at_most(g: Graph, k: int, kind: str) -> Representation | None:
    from .ordering import _seed_orders, kind_independent, kind_mode

    best = None
    for order in _seed_orders(g):
        part = min_classes_for_order(g, order, kind_mode(kind), kind_independent(kind))
        if best is None or part.k < best.k:
            best = Representation(tuple(order), part)
    if best is not None and best.k <= k:
        return best
    status, rep = decide_thinness_at_most(g, k, kind, Budget(max_seconds=30))
    return rep if status == "yes" else best


# ---------------------------------------------------------------------------
# registry


_PLAIN = {
    "fig1a": fig1a,
    "fig1b": fig1b,
    "g72": g72,
    "wheel4": wheel4,
    "bipartite_claw": bipartite_claw,
    "octahedron": octahedron,
    "subdivided_k5": subdivided_k5,
}

_PARAMETRIC = {
    "grid": (grid, 1),
    "b0grid": (b0vpg_grid, 1),
    "cycle": (cycle, 1),
    "kbip": (complete_bipartite, 2),
}


def fixture_names() -> list[str]:
    return sorted(_PLAIN) + [f"{name}-<int>" + ("-<int>" if argc == 2 else "")
                             for name, (_, argc) in sorted(_PARAMETRIC.items())]


def get_fixture(name: str) -> Fixture:
    """Look up a fixture by name, e.g. "fig1a", "grid-3", "kbip-3-3"."""
    if name in _PLAIN:
        return _PLAIN[name]()
    parts = name.split("-")
    if parts[0] in _PARAMETRIC:
        fn, argc = _PARAMETRIC[parts[0]]
        args = [int(p) for p in parts[1:]]
        if len(args) != argc:
            raise KeyError(f"{parts[0]} needs {argc} integer parameter(s)")
        return fn(*args)
    raise KeyError(f"unknown fixture {name!r}; known: {', '.join(fixture_names())}")
