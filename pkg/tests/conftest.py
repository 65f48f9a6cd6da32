"""Shared brute-force oracles, kept independent of the solver code paths.

These enumerate orders and partitions directly and check the triple
conditions from first principles, so a bug in the production solver
cannot hide itself.
"""

import itertools

import pytest

from thinness.graphs import Graph, Partition, Representation
from thinness.ordering import kind_independent, kind_mode


def triple_consistent(g: Graph, order, class_of, strong: bool) -> bool:
    """Direct O(n^3) definition check, no shortcuts."""
    n = g.n
    pos = {v: i for i, v in enumerate(order)}
    for r, s, t in itertools.permutations(range(n), 3):
        if not (pos[r] < pos[s] < pos[t]):
            continue
        if class_of[r] == class_of[s] and g.has_edge(t, r) and not g.has_edge(t, s):
            return False
        if strong and class_of[s] == class_of[t] and g.has_edge(r, t) \
                and not g.has_edge(r, s):
            return False
    return True


def brute_thinness(g: Graph, kind: str) -> int:
    """Minimum class count over all orders and partitions."""
    strong = kind_mode(kind) == "strong"
    independent = kind_independent(kind)
    n = g.n
    best = n
    for perm in itertools.permutations(range(n)):
        for assign in itertools.product(range(best), repeat=n):
            k = len(set(assign))
            if k >= best or set(assign) != set(range(k)):
                continue
            if independent and any(assign[u] == assign[v] for u, v in g.edges()):
                continue
            if triple_consistent(g, perm, assign, strong):
                best = k
    return best


def brute_min_classes_for_order(g: Graph, order, mode: str,
                                independent: bool) -> int:
    strong = mode == "strong"
    n = g.n
    for k in range(1, n + 1):
        for assign in itertools.product(range(k), repeat=n):
            if set(assign) != set(range(k)):
                continue
            if independent and any(assign[u] == assign[v] for u, v in g.edges()):
                continue
            if triple_consistent(g, order, assign, strong):
                return k
    raise AssertionError("unreachable: singletons are always consistent"
                         if not independent else "unreachable")


def small_graphs(n: int):
    """All graphs on n labeled vertices (not only connected)."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        yield Graph.from_edges(n, edges)


@pytest.fixture
def c4():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def p3():
    return Graph.from_edges(3, [(0, 1), (1, 2)])


def rep_of(order, classes) -> Representation:
    return Representation(tuple(order), Partition(tuple(classes), max(classes) + 1))
