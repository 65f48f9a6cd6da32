"""Order extension consistent with a partition, via an auxiliary digraph.

Given per-class total orders, a total order of all vertices that is
(strongly) consistent with the partition and extends them exists
exactly when the auxiliary digraph is acyclic; any topological order of
it works.  Infeasibility comes with a short directed-cycle witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Digraph, Graph, Partition, Representation, topological_sort
from .ordering import is_consistent


class CeoPreconditionError(ValueError):
    """The given class orders break the solver's assumptions."""


@dataclass(frozen=True)
class ClassOrder:
    """Total order of each class; optionally explicit cross-class pairs.

    As a relation this is a partial order of V: comparable within each
    class (by sequence position) plus whatever ``extras`` add.
    """

    sequences: tuple[tuple[int, ...], ...]
    extras: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def position_in_class(self) -> dict[int, int]:
        pos = {}
        for seq in self.sequences:
            for i, v in enumerate(seq):
                pos[v] = i
        return pos


def _check_porder(g: Graph, partition: Partition, porder: ClassOrder,
                  mode: str, require_consistent: bool):
    if len(porder.sequences) != partition.k:
        raise CeoPreconditionError("one sequence per class required")
    for c, seq in enumerate(porder.sequences):
        members = set(partition.members(c))
        if set(seq) != members or len(seq) != len(members):
            raise CeoPreconditionError(f"sequence {c} is not a total order of class {c}")
    if require_consistent:
        # Restricted to one class the order must itself be (strongly)
        # consistent; the reduction assumes it.
        for c, seq in enumerate(porder.sequences):
            class_of = tuple(0 for _ in seq)
            sub = _induced_in_order(g, seq)
            rep = Representation(tuple(range(len(seq))),
                                 Partition(class_of, 1) if seq else Partition((), 0))
            if seq:
                ok, _ = is_consistent(sub, rep, mode)
                if not ok:
                    raise CeoPreconditionError(
                        f"class {c} order is not {mode}-consistent on its own")


def _induced_in_order(g: Graph, seq) -> Graph:
    from .graphs import induced_subgraph

    return induced_subgraph(g, seq)


def build_ceo_digraph(g: Graph, partition: Partition, porder: ClassOrder,
                      mode: str = "consistent") -> Digraph:
    """Digraph whose topological orders are exactly the wanted orders.

    Arc u -> w for nonadjacent cross-class u, w whenever some earlier
    member of w's class is adjacent to u (strong mode also: some later
    member of u's class is adjacent to w), plus all within-class
    comparability arcs and any explicit extras.
    """
    if mode not in ("consistent", "strong"):
        raise ValueError(f"unknown mode {mode!r}")
    _check_porder(g, partition, porder, mode, require_consistent=False)
    strong = mode == "strong"
    arcs: set[tuple[int, int]] = set()
    for seq in porder.sequences:
        for i in range(len(seq)):
            for j in range(i + 1, len(seq)):
                arcs.add((seq[i], seq[j]))
    arcs |= set(porder.extras)

    class_of = partition.class_of
    # earlier_nbr_mask[v]: vertices adjacent to something before v in v's class
    n = g.n
    before_in_class = [0] * n
    after_in_class = [0] * n
    for seq in porder.sequences:
        acc = 0
        for v in seq:
            before_in_class[v] = acc
            acc |= 1 << v
        acc = 0
        for v in reversed(seq):
            after_in_class[v] = acc
            acc |= 1 << v

    for u in range(n):
        for w in range(n):
            if u == w or class_of[u] == class_of[w]:
                continue
            if g.adj[u] & (1 << w):
                continue
            # u in V^i, w in V^j: witness w' < w in w's class adjacent to u
            if g.adj[u] & before_in_class[w]:
                arcs.add((u, w))
            elif strong and g.adj[w] & after_in_class[u]:
                arcs.add((u, w))
    return Digraph(n, arcs)


def solve_ceo(g: Graph, partition: Partition, porder: ClassOrder,
              mode: str = "consistent"
              ) -> tuple[list[int] | None, list[int] | None]:
    """Total order extending porder and (strongly) consistent, or a cycle.

    Returns (order, None) on success and (None, cycle) when infeasible.
    Raises CeoPreconditionError when the class orders themselves are not
    (strongly) consistent; that is a different failure than infeasibility.
    """
    _check_porder(g, partition, porder, mode, require_consistent=True)
    d = build_ceo_digraph(g, partition, porder, mode)
    order, cycle = topological_sort(d)
    if cycle is not None:
        return None, cycle
    assert order is not None
    rep = Representation(tuple(order), partition)
    ok, wit = is_consistent(g, rep, mode)
    assert ok, f"CEO reduction produced an inconsistent order: {wit}"
    return order, None


def ceo_instance_to_json(g: Graph, partition: Partition, porder: ClassOrder,
                         mode: str) -> dict:
    from .graphs import graph_to_json

    return {
        "graph": graph_to_json(g),
        "classes": list(partition.class_of),
        "class_orders": [list(seq) for seq in porder.sequences],
        "mode": mode,
    }


def ceo_instance_from_json(data: dict) -> tuple[Graph, Partition, ClassOrder, str]:
    from .graphs import graph_from_json

    g = graph_from_json(data["graph"])
    classes = [int(c) for c in data["classes"]]
    partition = Partition(tuple(classes), max(classes) + 1)
    porder = ClassOrder(tuple(tuple(int(v) for v in seq)
                              for seq in data["class_orders"]))
    mode = data.get("mode", "consistent")
    return g, partition, porder, mode
