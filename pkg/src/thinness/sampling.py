"""Random instance generators for tests and cross-check sweeps.

The consistent-instance generator builds (graph, certificate) pairs
directly: scanning vertices in a random order, each vertex picks a
random suffix of every earlier class to attach to, which is exactly
the shape consistency allows.  Strong instances are rejection-sampled
from it, falling back to a solver-found certificate when unlucky.
"""

from __future__ import annotations

import random

from .graphs import Graph, Partition, Representation
from .ordering import decide_thinness_at_most, is_consistent


def random_consistent_instance(n: int, k: int, rng: random.Random,
                               independent: bool = False
                               ) -> tuple[Graph, Representation]:
    if n < k:
        raise ValueError("need at least one vertex per class")
    order = list(range(n))
    rng.shuffle(order)
    while True:
        classes = [rng.randrange(k) for _ in range(n)]
        if len(set(classes)) == k:
            break
    seqs: list[list[int]] = [[] for _ in range(k)]
    edges = []
    for v in order:
        c = classes[v]
        for q in range(k):
            if independent and q == c:
                continue
            before = seqs[q]
            if not before:
                continue
            take = rng.randint(0, len(before))
            edges.extend((u, v) for u in before[len(before) - take:])
        seqs[c].append(v)
    g = Graph.from_edges(n, edges)
    rep = Representation(tuple(order), Partition(tuple(classes), k))
    return g, rep


def random_strongly_consistent_instance(n: int, k: int, rng: random.Random,
                                        independent: bool = False,
                                        tries: int = 200
                                        ) -> tuple[Graph, Representation]:
    kind = "indpthin" if independent else "pthin"
    for _ in range(tries):
        g, rep = random_consistent_instance(n, k, rng, independent)
        ok, _ = is_consistent(g, rep, "strong")
        if ok:
            return g, rep
        status, found = decide_thinness_at_most(g, k, kind)
        if status == "yes" and found is not None and found.k == k:
            return g, found
    raise RuntimeError("could not sample a strongly consistent instance")


def random_connected_graph(n: int, rng: random.Random, p: float | None = None
                           ) -> Graph:
    """Connected G(n, p) by rejection; p defaults to a random density."""
    while True:
        density = p if p is not None else rng.uniform(0.2, 0.8)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < density]
        g = Graph.from_edges(n, edges)
        if g.is_connected():
            return g


def random_bipartite_ordered_instance(n: int, rng: random.Random,
                                      p: float = 0.5
                                      ) -> tuple[Graph, list[int], list[int]]:
    """Bipartite graph plus a total order of each side."""
    na = rng.randint(1, n - 1)
    verts = list(range(n))
    rng.shuffle(verts)
    side_a, side_b = verts[:na], verts[na:]
    edges = [(u, v) for u in side_a for v in side_b if rng.random() < p]
    g = Graph.from_edges(n, edges)
    rng.shuffle(side_a)
    rng.shuffle(side_b)
    return g, side_a, side_b


def random_ceo_instance(n: int, rng: random.Random, k: int = 2, p: float = 0.5,
                        mode: str = "consistent"
                        ) -> tuple[Graph, Partition, list[list[int]]]:
    """Graph, k-partition, and per-class orders meeting the CEO premise.

    Resamples until each class order is on its own (strongly)
    consistent, which the reduction assumes.
    """
    from .graphs import induced_subgraph

    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < p]
        g = Graph.from_edges(n, edges)
        classes = [rng.randrange(k) for _ in range(n)]
        if len(set(classes)) != k:
            continue
        seqs: list[list[int]] = [[] for _ in range(k)]
        verts = list(range(n))
        rng.shuffle(verts)
        for v in verts:
            seqs[classes[v]].append(v)
        good = True
        for seq in seqs:
            sub = induced_subgraph(g, seq)
            rep = Representation(tuple(range(len(seq))),
                                 Partition(tuple(0 for _ in seq), 1))
            ok, _ = is_consistent(sub, rep, mode)
            if not ok:
                good = False
                break
        if good:
            return g, Partition(tuple(classes), k), seqs
