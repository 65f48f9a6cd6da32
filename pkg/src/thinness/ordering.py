"""Consistency checking, conflict graphs, and exact thinness solvers.

The solver follows one plan for all four parameter kinds: build the
vertex order left to right, maintain the conflict graph of the prefix
incrementally (its edges never change once both endpoints are placed),
and prune with its exact clique number.  Completed orders are colored
exactly; the minimum over orders is the parameter value.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .coloring import clique_size_capped, decide_colorable, greedy_coloring, max_clique
from .graphs import Graph, Partition, Representation, bits

MODES = ("consistent", "strong")
KINDS = ("thin", "pthin", "indthin", "indpthin")


def kind_mode(kind: str) -> str:
    """Consistency mode used by a thinness kind."""
    if kind not in KINDS:
        raise ValueError(f"unknown thinness kind {kind!r}")
    return "strong" if kind in ("pthin", "indpthin") else "consistent"


def kind_independent(kind: str) -> bool:
    if kind not in KINDS:
        raise ValueError(f"unknown thinness kind {kind!r}")
    return kind in ("indthin", "indpthin")


def _check_mode(mode: str):
    if mode not in MODES:
        raise ValueError(f"unknown consistency mode {mode!r}")


# ---------------------------------------------------------------------------
# consistency


def _consistent_forward(g: Graph, order, class_of) -> tuple[int, int, int] | None:
    """First violating triple (r, s, t) in ascending order, or None.

    A triple violates when r < s < t, r and s share a class, t is
    adjacent to r but not to s.
    """
    n = g.n
    k = max(class_of) + 1 if class_of else 0
    for ti in range(2, n):
        t = order[ti]
        adjt = g.adj[t]
        last_adjacent: list[int | None] = [None] * k
        for si in range(ti):
            s = order[si]
            c = class_of[s]
            if adjt & (1 << s):
                last_adjacent[c] = s
            elif last_adjacent[c] is not None:
                return last_adjacent[c], s, t
    return None


def is_consistent(g: Graph, rep: Representation, mode: str = "consistent"
                  ) -> tuple[bool, tuple[int, int, int] | None]:
    """Check (strong) consistency of order and partition against g.

    Returns (ok, witness).  The witness triple (x, y, z) is ascending in
    the order and violates one of the two directions: either x, y share
    a class with z adjacent to x but not y, or (strong mode) y, z share
    a class with x adjacent to z but not y.
    """
    _check_mode(mode)
    if rep.n != g.n:
        raise ValueError("representation size does not match graph")
    class_of = rep.partition.class_of
    wit = _consistent_forward(g, rep.order, class_of)
    if wit is not None:
        return False, wit
    if mode == "strong":
        rev = tuple(reversed(rep.order))
        wit = _consistent_forward(g, rev, class_of)
        if wit is not None:
            r, s, t = wit
            return False, (t, s, r)
    return True, None


# ---------------------------------------------------------------------------
# conflict graphs


def conflict_rows(g: Graph, order, mode: str = "consistent") -> list[int]:
    """Adjacency rows of the conflict graph for a complete order.

    For positions i < j with vertices v, w: they conflict when some
    later z is adjacent to v but not w; in strong mode also when some
    earlier x is adjacent to w but not v.
    """
    _check_mode(mode)
    n = g.n
    if sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of the vertices")
    after = [0] * (n + 1)
    for idx in range(n - 1, -1, -1):
        after[idx] = after[idx + 1] | (1 << order[idx])
    rows = [0] * n
    before_i = 0
    strong = mode == "strong"
    for i in range(n):
        v = order[i]
        bv = 1 << v
        for j in range(i + 1, n):
            w = order[j]
            conflict = g.adj[v] & after[j + 1] & ~g.adj[w]
            if not conflict and strong:
                conflict = g.adj[w] & before_i & ~g.adj[v]
            if conflict:
                rows[v] |= 1 << w
                rows[w] |= bv
        before_i |= bv
    return rows


def conflict_graph(g: Graph, order, mode: str = "consistent") -> Graph:
    """Conflict graph of the order: colorings = partitions consistent with it."""
    return Graph(g.n, tuple(conflict_rows(g, order, mode)))


def min_classes_for_order(g: Graph, order, mode: str = "consistent",
                          independent: bool = False) -> Partition:
    """Minimum partition (strongly) consistent with a fixed order.

    Solved as an exact coloring of the conflict graph; when classes must
    be independent sets the edges of g join the constraints.  Lowest
    feasible color per vertex in index order keeps output deterministic.
    """
    rows = conflict_rows(g, order, mode)
    if independent:
        rows = [rows[v] | g.adj[v] for v in range(g.n)]
    k, colors = _chromatic_dense(rows, g.n)
    return _normalized_partition(colors)


def _chromatic_dense(rows: list[int], n: int) -> tuple[int, list[int]]:
    if n == 0:
        return 0, []
    lb, _ = max_clique(rows, (1 << n) - 1)
    ub = max(greedy_coloring(rows, n)) + 1
    for k in range(lb, ub + 1):
        colors = decide_colorable(rows, n, k)
        if colors is not None:
            return k, colors
    raise AssertionError("coloring search failed")


def _normalized_partition(colors: list[int]) -> Partition:
    remap: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in remap:
            remap[c] = len(remap)
        out.append(remap[c])
    return Partition(tuple(out), len(remap))


# ---------------------------------------------------------------------------
# certificates


def verify_certificate(g: Graph, rep: Representation, kind: str) -> bool:
    """True iff rep witnesses that g is (kind) k-thin with k = rep.k."""
    if rep.n != g.n:
        return False
    if kind_independent(kind):
        for u, v in g.edges():
            if rep.partition.class_of[u] == rep.partition.class_of[v]:
                return False
    ok, _ = is_consistent(g, rep, kind_mode(kind))
    return ok


def rep_to_json(rep: Representation, kind: str) -> dict:
    return {
        "order": list(rep.order),
        "classes": list(rep.partition.class_of),
        "kind": kind,
        "k": rep.k,
    }


def rep_from_json(data: dict) -> tuple[Representation, str]:
    classes = [int(c) for c in data["classes"]]
    k = int(data.get("k", max(classes) + 1))
    part = Partition(tuple(classes), k)
    rep = Representation(tuple(int(v) for v in data["order"]), part)
    kind = data.get("kind", "thin")
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r} in certificate")
    return rep, kind


# ---------------------------------------------------------------------------
# exact search


@dataclass
class Budget:
    """Wall-clock and node limits; either alone can stop the search."""

    max_seconds: float | None = None
    max_nodes: int | None = None


@dataclass
class ThinnessResult:
    value: int
    certificate: Representation
    exact: bool
    lower_bound: int
    nodes: int
    seconds: float

    @property
    def budget_exceeded(self) -> bool:
        return not self.exact


class _BudgetHit(Exception):
    pass


class _Tracker:
    __slots__ = ("deadline", "max_nodes", "nodes")

    def __init__(self, budget: Budget | None):
        self.deadline = None
        self.max_nodes = None
        if budget is not None:
            if budget.max_seconds is not None:
                self.deadline = time.monotonic() + budget.max_seconds
            self.max_nodes = budget.max_nodes
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _BudgetHit
        if self.deadline is not None and self.nodes % 2048 == 0:
            if time.monotonic() > self.deadline:
                raise _BudgetHit


def _seed_orders(g: Graph):
    """A few cheap orders used to seed the upper bound."""
    n = g.n
    yield list(range(n))
    by_degree = sorted(range(n), key=lambda v: (-g.degree(v), v))
    yield by_degree
    starts = []
    if n:
        starts.append(min(range(n), key=lambda v: (g.degree(v), v)))
        starts.append(max(range(n), key=lambda v: (g.degree(v), -v)))
    for s in dict.fromkeys(starts):
        order = _bfs_order(g, s)
        yield order
        yield list(reversed(order))


def _bfs_order(g: Graph, start: int) -> list[int]:
    # Cuthill-McKee style: BFS, neighbors visited in degree order.
    seen = [False] * g.n
    order: list[int] = []
    roots = [start] + [v for v in range(g.n) if v != start]
    for root in roots:
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            nbrs = sorted((u for u in bits(g.adj[v]) if not seen[u]),
                          key=lambda u: (g.degree(u), u))
            for u in nbrs:
                seen[u] = True
                queue.append(u)
    return order


def decide_thinness_at_most(g: Graph, k: int, kind: str = "thin",
                            budget: Budget | None = None,
                            stats: dict | None = None
                            ) -> tuple[str, Representation | None]:
    """Search for a (kind) certificate with at most k classes.

    Returns ("yes", certificate), ("no", None), or ("budget", None).
    States are deduplicated on (placed set, prefix conflict rows), which
    is sound because those rows never change as the order grows; in
    strong mode the per-vertex earlier-nonneighbor masks join the key.
    """
    mode = kind_mode(kind)
    strong = mode == "strong"
    independent = kind_independent(kind)
    n = g.n
    if n == 0:
        raise ValueError("graph must have at least one vertex")
    if k <= 0:
        return "no", None
    adj = g.adj
    full = (1 << n) - 1
    tracker = _Tracker(budget)
    visited: set = set()
    crows = [0] * n
    fmask = [0] * n
    order: list[int] = []
    result: list[Representation] = []

    import sys

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * n + 200))

    def exact_prefix_colorable(limit: int) -> bool:
        # Only needed for independent kinds: conflict rows joined with
        # graph edges need not be perfect, so omega <= k can lie.
        verts = order
        index = {v: i for i, v in enumerate(verts)}
        dense = [0] * len(verts)
        for i, v in enumerate(verts):
            for u in bits(crows[v]):
                j = index.get(u)
                if j is not None:
                    dense[i] |= 1 << j
        return decide_colorable(dense, len(verts), limit) is not None

    def rec(placed: int) -> bool:
        tracker.tick()
        if placed == full:
            colors = decide_colorable(crows, n, k)
            if colors is None:
                return False
            part = _normalized_partition(colors)
            result.append(Representation(tuple(order), part))
            return True
        if strong:
            key = (placed,
                   tuple(crows[v] for v in bits(placed)),
                   tuple(fmask[v] for v in bits(placed)))
        else:
            key = (placed, tuple(crows[v] for v in bits(placed)))
        if key in visited:
            return False
        if len(visited) > 2_000_000:
            visited.clear()
        visited.add(key)

        unplaced = full & ~placed
        children = []
        um = unplaced
        while um:
            lowv = um & -um
            um ^= lowv
            v = lowv.bit_length() - 1
            rest = unplaced & ~lowv
            adjv = adj[v]
            navl = ~adjv
            row = 0
            for p in order:
                pb = 1 << p
                if adj[p] & rest & navl:
                    row |= pb
                elif strong and fmask[p] & adjv:
                    row |= pb
                elif independent and adjv & pb:
                    row |= pb
            if row:
                # prune when the prefix clique number would exceed k
                if clique_size_capped(crows, row, k) >= k:
                    continue
            children.append((row.bit_count(), v, row))
        children.sort()
        for _, v, row in children:
            bv = 1 << v
            crows[v] = row
            rm = row
            while rm:
                lowu = rm & -rm
                rm ^= lowu
                crows[lowu.bit_length() - 1] |= bv
            if strong:
                fmask[v] = placed & ~adj[v]
            order.append(v)
            ok_child = True
            if independent and row:
                ok_child = exact_prefix_colorable(k)
            if ok_child and rec(placed | bv):
                return True
            order.pop()
            rm = row
            while rm:
                lowu = rm & -rm
                rm ^= lowu
                crows[lowu.bit_length() - 1] &= ~bv
            crows[v] = 0
            if strong:
                fmask[v] = 0
        return False

    try:
        found = rec(0)
    except _BudgetHit:
        if stats is not None:
            stats["nodes"] = tracker.nodes
        return "budget", None
    finally:
        sys.setrecursionlimit(old_limit)
    if stats is not None:
        stats["nodes"] = tracker.nodes
    if found:
        rep = result[0]
        assert verify_certificate(g, rep, kind), "solver produced a bad certificate"
        return "yes", rep
    return "no", None


def exact_thinness(g: Graph, kind: str = "thin", budget: Budget | None = None,
                   lower_bound: int = 1) -> ThinnessResult:
    """Exact minimum number of classes for the requested kind.

    Seeds an upper bound from a few cheap orders, then decides k =
    lower_bound, lower_bound+1, ... until a certificate is found.  On
    budget exhaustion the result carries the best known upper bound
    (with certificate) and the proven lower bound, with exact=False.
    """
    mode = kind_mode(kind)
    independent = kind_independent(kind)
    start = time.monotonic()
    best_rep: Representation | None = None
    for order in _seed_orders(g):
        part = min_classes_for_order(g, order, mode, independent)
        if best_rep is None or part.k < best_rep.k:
            best_rep = Representation(tuple(order), part)
    assert best_rep is not None
    nodes = 0
    proven_lb = lower_bound
    for k in range(lower_bound, best_rep.k):
        stats: dict = {}
        status, rep = decide_thinness_at_most(g, k, kind, budget, stats)
        nodes += stats.get("nodes", 0)
        if status == "yes":
            assert rep is not None
            return ThinnessResult(k, rep, True, k, nodes, time.monotonic() - start)
        if status == "budget":
            return ThinnessResult(best_rep.k, best_rep, False, proven_lb, nodes,
                                  time.monotonic() - start)
        proven_lb = k + 1
    return ThinnessResult(best_rep.k, best_rep, True, best_rep.k, nodes,
                          time.monotonic() - start)
