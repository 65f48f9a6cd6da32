"""Axis-parallel rectangle intersection models for 2-thin graphs.

All coordinates are stored as doubled integers, so the half-unit
offsets of the constructions are exact and the predicates never touch
floating point.  Closed rectangles: touching counts as intersecting
(the constructions realize some adjacencies by corner contact).

Class conventions: partition class 0 maps to tag 1 (upper-right corners
on the lower diagonal y = x + d1), class 1 to tag 2 (upper diagonal).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, Partition, Representation
from .ordering import is_consistent


@dataclass(frozen=True)
class Box:
    """Rectangle [x1,x2] x [y1,y2] in doubled-integer coordinates."""

    v: int
    x1: int
    x2: int
    y1: int
    y2: int
    cls: int | None = None  # 1 or 2 when the model is class-tagged

    def __post_init__(self):
        if not (self.x1 < self.x2 and self.y1 < self.y2):
            raise ValueError(f"degenerate box for vertex {self.v}")

    def corner(self) -> tuple[int, int]:
        return self.x2, self.y2

    def intersects(self, other: "Box") -> bool:
        return (self.x1 <= other.x2 and other.x1 <= self.x2
                and self.y1 <= other.y2 and other.y1 <= self.y2)


@dataclass(frozen=True)
class BoxModel:
    """One box per vertex 0..n-1 plus intended diagonal offsets (doubled)."""

    boxes: tuple[Box, ...]
    d1: int
    d2: int

    def __post_init__(self):
        if sorted(b.v for b in self.boxes) != list(range(len(self.boxes))):
            raise ValueError("boxes must cover vertices 0..n-1")

    @property
    def n(self) -> int:
        return len(self.boxes)

    def by_vertex(self) -> list[Box]:
        out: list[Box | None] = [None] * self.n
        for b in self.boxes:
            out[b.v] = b
        return out  # type: ignore[return-value]


def intersection_graph(m: BoxModel) -> Graph:
    """Edge iff the closed boxes of the two vertices meet."""
    boxes = m.by_vertex()
    edges = []
    for u in range(m.n):
        for v in range(u + 1, m.n):
            if boxes[u].intersects(boxes[v]):
                edges.append((u, v))
    return Graph.from_edges(m.n, edges)


def check_diagonal(m: BoxModel) -> tuple[str, tuple[int, int] | None]:
    """Strongest diagonal label of the corner layout.

    Returns ("two_diagonal" | "weakly_two_diagonal" | "neither", witness).
    Duplicate corners, or anything other than exactly two corner
    diagonals, comes out as "neither"; two_diagonal further requires
    d1 < 0 < d2 with lower-diagonal corners in the closed 4th quadrant
    and upper ones in the closed 2nd quadrant.
    """
    boxes = m.by_vertex()
    seen: dict[tuple[int, int], int] = {}
    for b in boxes:
        c = b.corner()
        if c in seen:
            return "neither", (seen[c], b.v)
        seen[c] = b.v
    offsets = sorted({b.y2 - b.x2 for b in boxes})
    if len(offsets) != 2:
        return "neither", None
    d1, d2 = offsets
    if d1 < 0 < d2:
        ok = True
        for b in boxes:
            if b.y2 - b.x2 == d1:
                ok = ok and b.x2 >= 0 and b.y2 <= 0
            else:
                ok = ok and b.x2 <= 0 and b.y2 >= 0
        if ok:
            return "two_diagonal", None
    return "weakly_two_diagonal", None


def _split_by_diagonal(m: BoxModel) -> tuple[list[Box], list[Box], int, int]:
    offsets = sorted({b.y2 - b.x2 for b in m.boxes})
    if len(offsets) > 2:
        raise ValueError("model corners lie on more than two diagonals")
    d1 = offsets[0]
    d2 = offsets[-1]
    lower = [b for b in m.boxes if b.y2 - b.x2 == d1]
    upper = [b for b in m.boxes if b.y2 - b.x2 == d2] if len(offsets) == 2 else []
    return lower, upper, d1, d2


def check_blocking(m: BoxModel) -> tuple[bool, tuple[int, int] | None]:
    """Blocking test for a 2-diagonal model.

    Every non-intersecting pair across the diagonals must be hit by the
    vertical prolongation of the upper box or the horizontal
    prolongation of the lower box; returns a violating pair otherwise.
    """
    label, _ = check_diagonal(m)
    if label != "two_diagonal":
        raise ValueError("check_blocking requires a 2-diagonal model")
    lower, upper, _, _ = _split_by_diagonal(m)
    for b1 in upper:
        for b2 in lower:
            if b1.intersects(b2):
                continue
            x_hit = b1.x1 <= b2.x2 and b2.x1 <= b1.x2
            y_hit = b2.y1 <= b1.y2 and b1.y1 <= b2.y2
            if not (x_hit or y_hit):
                return False, (b1.v, b2.v)
    return True, None


def check_bi_semi_proper(m: BoxModel) -> tuple[bool, tuple[int, int] | None]:
    """Same-diagonal boxes ordered by corner must have monotone lower-left.

    Precondition: corners pairwise distinct on at most two diagonals
    (a single diagonal is accepted here so the vacuous cases pass).
    """
    boxes = m.by_vertex()
    corners = {b.corner() for b in boxes}
    if len(corners) != len(boxes):
        raise ValueError("check_bi_semi_proper requires pairwise distinct corners")
    offsets = sorted({b.y2 - b.x2 for b in boxes})
    if len(offsets) > 2:
        raise ValueError("check_bi_semi_proper requires at most two corner diagonals")
    for off in offsets:
        group = sorted((b for b in boxes if b.y2 - b.x2 == off), key=lambda b: b.x2)
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                b, b2 = group[i], group[j]
                if not (b.x1 <= b2.x1 and b.y1 <= b2.y1):
                    return False, (b.v, b2.v)
    return True, None


# ---------------------------------------------------------------------------
# constructions


def class_sequences(rep: Representation) -> list[list[int]]:
    """Members of each class in the order induced by rep's vertex order."""
    seqs: list[list[int]] = [[] for _ in range(rep.k)]
    for v in rep.order:
        seqs[rep.partition.class_of[v]].append(v)
    return seqs


def stopping_values(g: Graph, rep: Representation) -> tuple[list[int], list[list[int]]]:
    """Per-vertex stopping indices driving all model constructions.

    own[v]: 1-based class position of the smallest earlier same-class
    neighbor, or v's own position when there is none.
    cross[q][v]: 0 when v is adjacent to every earlier member of class
    q, else the largest class position among its earlier non-neighbors.
    Under consistency these values encode adjacency exactly.
    """
    pos_in_class = {}
    seqs = class_sequences(rep)
    for seq in seqs:
        for i, v in enumerate(seq):
            pos_in_class[v] = i + 1
    rank = rep.positions()
    own = [0] * g.n
    cross = [[0] * g.n for _ in range(rep.k)]
    for v in range(g.n):
        cv = rep.partition.class_of[v]
        first_nbr = None
        for u in seqs[cv]:
            if rank[u] >= rank[v]:
                break
            if g.has_edge(u, v):
                first_nbr = pos_in_class[u]
                break
        own[v] = first_nbr if first_nbr is not None else pos_in_class[v]
        for q in range(rep.k):
            if q == cv:
                continue
            last_non = 0
            for u in seqs[q]:
                if rank[u] >= rank[v]:
                    break
                if not g.has_edge(u, v):
                    last_non = pos_in_class[u]
            cross[q][v] = last_non
    return own, cross


def _require_two_class_certificate(g: Graph, rep: Representation, mode: str):
    if rep.k != 2:
        raise ValueError("a 2-class representation is required")
    ok, wit = is_consistent(g, rep, mode)
    if not ok:
        raise ValueError(f"representation is not {mode}-consistent, witness {wit}")


def build_m1(g: Graph, rep: Representation) -> BoxModel:
    """Rectangle model of a 2-thin certificate.

    Class 0 boxes get corners on the lower diagonal at unit spacing,
    class 1 on the upper; each box stops just past its greatest earlier
    cross-class non-neighbor and reaches back to its earliest earlier
    same-class neighbor.  Coordinates are recentred so the diagonals
    straddle the origin.
    """
    _require_two_class_certificate(g, rep, "consistent")
    own, cross = stopping_values(g, rep)
    seqs = class_sequences(rep)
    n1, n2 = len(seqs[0]), len(seqs[1])
    boxes = []
    for i, v in enumerate(seqs[0], start=1):
        x2 = 2 * i
        y2 = 2 * (i - n1)
        x1 = 2 * (cross[1][v] - n2) + 1
        y1 = 2 * (own[v] - n1) - 1
        boxes.append(Box(v, x1, x2, y1, y2, cls=1))
    for j, w in enumerate(seqs[1], start=1):
        x2 = 2 * (j - n2)
        y2 = 2 * j
        x1 = 2 * (own[w] - n2) - 1
        y1 = 2 * (cross[0][w] - n1) + 1
        boxes.append(Box(w, x1, x2, y1, y2, cls=2))
    boxes.sort(key=lambda b: b.v)
    return BoxModel(tuple(boxes), d1=-2 * n1, d2=2 * n2)


def build_m2(m1: BoxModel) -> BoxModel:
    """Clip an M1-style model into the third quadrant (2-grounded form).

    After shifting one unit down-left, every class-0 box is cut at the
    y axis (right side grounded) and every class-1 box at the x axis
    (top grounded); intersections are unchanged.
    """
    boxes = []
    for b in m1.boxes:
        x1, x2 = b.x1 - 2, min(b.x2 - 2, 0)
        y1, y2 = b.y1 - 2, min(b.y2 - 2, 0)
        if not (x1 < x2 and y1 < y2):
            raise ValueError("input does not look like an M1-style model")
        boxes.append(Box(b.v, x1, x2, y1, y2, b.cls))
    return BoxModel(tuple(boxes), m1.d1, m1.d2)


def recover_representation(m: BoxModel, mode: str = "consistent") -> Representation:
    """Read a certificate back off a model (the converse construction).

    Consistent mode needs a blocking 2-diagonal model, strong mode a
    bi-semi-proper (weakly) 2-diagonal one; violations raise ValueError
    with the failing predicate.  The partition is diagonal membership,
    within-class order follows the corner x coordinates, and the total
    order comes from the order-extension solver.  Infeasibility there
    cannot happen when the predicates hold, so it is an assertion.
    """
    from .ceo import ClassOrder, solve_ceo

    label, wit = check_diagonal(m)
    if mode == "consistent":
        if label != "two_diagonal":
            raise ValueError(f"model is not 2-diagonal (got {label}, witness {wit})")
        ok, pair = check_blocking(m)
        if not ok:
            raise ValueError(f"model is not blocking, witness pair {pair}")
    elif mode == "strong":
        if label not in ("two_diagonal", "weakly_two_diagonal"):
            raise ValueError(f"model is not weakly 2-diagonal (got {label})")
        ok, pair = check_bi_semi_proper(m)
        if not ok:
            raise ValueError(f"model is not bi-semi-proper, witness pair {pair}")
    else:
        raise ValueError(f"unknown mode {mode!r}")

    lower, upper, _, _ = _split_by_diagonal(m)
    if not lower or not upper:
        raise ValueError("both diagonals must carry at least one corner")
    lower_seq = [b.v for b in sorted(lower, key=lambda b: b.x2)]
    upper_seq = [b.v for b in sorted(upper, key=lambda b: b.x2)]
    partition = Partition.from_classes([lower_seq, upper_seq])
    g = intersection_graph(m)
    porder = ClassOrder((tuple(lower_seq), tuple(upper_seq)))
    order, cycle = solve_ceo(g, partition, porder, mode)
    assert cycle is None, ("predicates accepted the model but extension failed; "
                           "a predicate implementation must be wrong")
    assert order is not None
    return Representation(tuple(order), partition)


# ---------------------------------------------------------------------------
# JSON


def box_model_to_json(m: BoxModel) -> dict:
    return {
        "d1": m.d1,
        "d2": m.d2,
        "boxes": [
            {"v": b.v, "x1": b.x1, "x2": b.x2, "y1": b.y1, "y2": b.y2,
             **({"class": b.cls} if b.cls is not None else {})}
            for b in m.boxes
        ],
    }


def box_model_from_json(data: dict) -> BoxModel:
    boxes = tuple(
        Box(int(b["v"]), int(b["x1"]), int(b["x2"]), int(b["y1"]), int(b["y2"]),
            int(b["class"]) if "class" in b else None)
        for b in data["boxes"]
    )
    return BoxModel(boxes, int(data["d1"]), int(data["d2"]))
