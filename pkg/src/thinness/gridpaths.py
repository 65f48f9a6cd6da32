"""Orthogonal grid-path intersection models (VPG style).

Paths are polylines of 2..4 points in doubled-integer coordinates with
axis-aligned segments of alternating orientation, so bends = points-2.
Intersection is closed: sharing a single point makes an edge.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boxes import build_m1, build_m2, class_sequences, stopping_values
from .graphs import Graph, Partition, Representation
from .ordering import is_consistent


@dataclass(frozen=True)
class GridPath:
    v: int
    pts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        # up to 3 bends, i.e. 4 segments / 5 points
        if not (2 <= len(self.pts) <= 5):
            raise ValueError("a grid path has 2 to 5 points")
        prev_horizontal = None
        for (x1, y1), (x2, y2) in zip(self.pts, self.pts[1:]):
            if x1 == x2 and y1 == y2:
                raise ValueError(f"zero-length segment in path of vertex {self.v}")
            if x1 != x2 and y1 != y2:
                raise ValueError(f"non-axis-aligned segment in path of vertex {self.v}")
            horizontal = y1 == y2
            if prev_horizontal is not None and horizontal == prev_horizontal:
                raise ValueError(f"consecutive collinear segments in path of vertex {self.v}")
            prev_horizontal = horizontal

    @property
    def bends(self) -> int:
        return len(self.pts) - 2

    def segments(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        return list(zip(self.pts, self.pts[1:]))

    def shape(self) -> str | None:
        """Compass tag for one-bend paths: arm directions from the corner.

        "NE" is the plain L (arms up and right); None for other bend
        counts.
        """
        if self.bends != 1:
            return None
        (ax, ay), (cx, cy), (bx, by) = self.pts
        dirs = set()
        for px, py in ((ax, ay), (bx, by)):
            if px == cx:
                dirs.add("N" if py > cy else "S")
            else:
                dirs.add("E" if px > cx else "W")
        ns = "N" if "N" in dirs else "S"
        ew = "E" if "E" in dirs else "W"
        return ns + ew


@dataclass(frozen=True)
class GridPathModel:
    paths: tuple[GridPath, ...]

    def __post_init__(self):
        if sorted(p.v for p in self.paths) != list(range(len(self.paths))):
            raise ValueError("paths must cover vertices 0..n-1")

    @property
    def n(self) -> int:
        return len(self.paths)

    def by_vertex(self) -> list[GridPath]:
        out: list[GridPath | None] = [None] * self.n
        for p in self.paths:
            out[p.v] = p
        return out  # type: ignore[return-value]

    def max_bends(self) -> int:
        return max((p.bends for p in self.paths), default=0)


def _seg_intersect(s1, s2) -> bool:
    (ax1, ay1), (ax2, ay2) = s1
    (bx1, by1), (bx2, by2) = s2
    ax1, ax2 = min(ax1, ax2), max(ax1, ax2)
    ay1, ay2 = min(ay1, ay2), max(ay1, ay2)
    bx1, bx2 = min(bx1, bx2), max(bx1, bx2)
    by1, by2 = min(by1, by2), max(by1, by2)
    return ax1 <= bx2 and bx1 <= ax2 and ay1 <= by2 and by1 <= ay2


def paths_intersect(p: GridPath, q: GridPath) -> bool:
    return any(_seg_intersect(s1, s2) for s1 in p.segments() for s2 in q.segments())


def path_intersection_graph(m: GridPathModel) -> Graph:
    """Edge iff the two polylines share at least one point."""
    paths = m.by_vertex()
    edges = []
    for u in range(m.n):
        for v in range(u + 1, m.n):
            if paths_intersect(paths[u], paths[v]):
                edges.append((u, v))
    return Graph.from_edges(m.n, edges)


# ---------------------------------------------------------------------------
# blocking for one-bend models


def _ray_hits_path(corner: tuple[int, int], toward: tuple[int, int],
                   path: GridPath) -> bool:
    """Ray from the corner through the arm's free end, extended to infinity."""
    cx, cy = corner
    tx, ty = toward
    vertical = tx == cx
    if vertical:
        dy = 1 if ty > cy else -1
    else:
        dx = 1 if tx > cx else -1
    for (x1, y1), (x2, y2) in path.segments():
        lox, hix = min(x1, x2), max(x1, x2)
        loy, hiy = min(y1, y2), max(y1, y2)
        if vertical:
            if lox <= cx <= hix:
                if (dy > 0 and hiy >= cy) or (dy < 0 and loy <= cy):
                    return True
        else:
            if loy <= cy <= hiy:
                if (dx > 0 and hix >= cx) or (dx < 0 and lox <= cx):
                    return True
    return False


def check_blocking_l(m: GridPathModel) -> tuple[bool, tuple[int, int] | None]:
    """Blocking test for a model of one-bend paths.

    For every non-intersecting pair, the vertical or horizontal arm of
    one path, prolonged past its free end to infinity, must hit the
    other path.  Returns a violating pair otherwise.
    """
    paths = m.by_vertex()
    for p in paths:
        if p.bends != 1:
            raise ValueError("check_blocking_l requires one-bend paths")
    for i in range(m.n):
        for j in range(i + 1, m.n):
            p, q = paths[i], paths[j]
            if paths_intersect(p, q):
                continue
            pc, qc = p.pts[1], q.pts[1]
            hit = (_ray_hits_path(pc, p.pts[0], q) or _ray_hits_path(pc, p.pts[2], q)
                   or _ray_hits_path(qc, q.pts[0], p) or _ray_hits_path(qc, q.pts[2], p))
            if not hit:
                return False, (p.v, q.v)
    return True, None


# ---------------------------------------------------------------------------
# constructions from 2-class certificates


def build_m3(g: Graph, rep: Representation, independent: bool = False) -> GridPathModel:
    """L-shaped paths from the grounded rectangle model.

    Keeps top and right sides of each grounded box, then flips both
    axes so every path is a plain L.  With independent classes only the
    grounded side survives, giving a zero-bend model.
    """
    if independent:
        _require_independent(g, rep)
    m2 = build_m2(build_m1(g, rep))
    paths = []
    for b in m2.boxes:
        if not independent:
            pts = ((-b.x1, -b.y2), (-b.x2, -b.y2), (-b.x2, -b.y1))
        elif b.cls == 1:
            # right side on the y axis: keep the horizontal top side
            pts = ((-b.x1, -b.y2), (-b.x2, -b.y2))
        else:
            # top side on the x axis: keep the vertical right side
            pts = ((-b.x2, -b.y2), (-b.x2, -b.y1))
        paths.append(GridPath(b.v, pts))
    return GridPathModel(tuple(paths))


def build_m4(g: Graph, rep: Representation) -> GridPathModel:
    """Monotone L model: every corner on the descending diagonal y = -x.

    Arm reaches encode the same stopping indices as the rectangle
    model; the within-class corner order follows the certificate.
    """
    if rep.k > 2:
        raise ValueError("a representation with at most 2 classes is required")
    ok, wit = is_consistent(g, rep, "consistent")
    if not ok:
        raise ValueError(f"representation is not consistent, witness {wit}")
    rep2 = _pad_to_two_classes(rep)
    own, cross = stopping_values(g, rep2)
    seqs = class_sequences(rep2)
    n1, n2 = len(seqs[0]), len(seqs[1])
    a, b = n1 + 1, n2 + 1
    paths = []
    for i, v in enumerate(seqs[0], start=1):
        corner = (2 * (i - a), 2 * (a - i))
        top = (2 * (i - a), 2 * (a - own[v]) + 1)
        right = (2 * (b - cross[1][v]) - 1, 2 * (a - i))
        paths.append(GridPath(v, (top, corner, right)))
    for j, w in enumerate(seqs[1], start=1):
        corner = (2 * (b - j), 2 * (j - b))
        top = (2 * (b - j), 2 * (a - cross[0][w]) - 1)
        right = (2 * (b - own[w]) + 1, 2 * (j - b))
        paths.append(GridPath(w, (top, corner, right)))
    paths.sort(key=lambda p: p.v)
    return GridPathModel(tuple(paths))


def _pad_to_two_classes(rep: Representation) -> Representation:
    if rep.k == 2:
        return rep
    # single-class certificates embed with an empty second class
    return Representation(rep.order, _LoosePartition(rep.partition.class_of, 2))


class _LoosePartition(Partition):
    """Partition that tolerates empty classes (internal padding only)."""

    def __post_init__(self):  # skip the nonempty check
        if any(c < 0 or c >= self.k for c in self.class_of):
            raise ValueError("class index out of range")


# ---------------------------------------------------------------------------
# 3-class construction


def build_vpg_3thin(g: Graph, rep: Representation, independent: bool = False
                    ) -> GridPathModel:
    """Grid-path model for a 3-class certificate, at most 3 bends per path.

    Layout: each class owns a column band holding one vertical "receiver"
    per vertex; riders run horizontally in stacked height bands, class 0
    into class 1, class 1 into class 2, class 2 back into class 0.  Arm
    endpoints encode the stopping indices, so crossings reproduce the
    edges exactly; a short jitter ladder per class realizes within-class
    edges.  With independent classes the ladder is dropped and each path
    is a single bend.
    """
    if rep.k > 3:
        raise ValueError("a representation with at most 3 classes is required")
    ok, wit = is_consistent(g, rep, "consistent")
    if not ok:
        raise ValueError(f"representation is not consistent, witness {wit}")
    if independent:
        _require_independent(g, rep)
    rep3 = rep if rep.k == 3 else Representation(
        rep.order, _LoosePartition(rep.partition.class_of, 3))
    own, cross = stopping_values(g, rep3)
    seqs = class_sequences(rep3)
    m0, m1, m2 = (len(s) for s in seqs)

    # column bands (unit coordinates; doubled at emission)
    hx = [0, m0 + 3, m0 + m1 + 6]
    # height bands, bottom to top
    rb0 = 1
    j0 = rb0 + m0 + 2
    j1 = j0 + m0 + 2
    rb1 = j1 + m1 + 2
    j2 = rb1 + m1 + 2
    rb2 = j2 + m2 + 2

    def U(x: float) -> int:
        return round(2 * x)

    paths: list[GridPath] = []

    for i, v in enumerate(seqs[0], start=1):
        # descending bracket: receive on top from class 2, ride at the bottom
        x_v1 = hx[0] + i
        top_tip = rb2 + (m2 + 1 - cross[2][v]) - 0.5
        jit = j0 + i
        x_v2 = hx[0] + own[v] - 0.5
        ride_y = rb0 + i
        tip_x = hx[1] + (m1 + 1 - cross[1][v]) - 0.5
        if independent:
            pts = ((U(x_v1), U(top_tip)), (U(x_v1), U(ride_y)), (U(tip_x), U(ride_y)))
        else:
            pts = ((U(x_v1), U(top_tip)), (U(x_v1), U(jit)),
                   (U(x_v2), U(jit)), (U(x_v2), U(ride_y)), (U(tip_x), U(ride_y)))
        paths.append(_path_from_polyline(v, pts))

    for i, v in enumerate(seqs[1], start=1):
        # ascending bracket: receive at the bottom from class 0, ride on top
        x_v1 = hx[1] + (m1 + 1 - i)
        bottom_tip = rb0 + cross[0][v] + 0.5
        jit = j1 + (m1 + 1 - i)
        x_v2 = hx[1] + (m1 + 1 - own[v]) + 0.5
        ride_y = rb1 + i
        tip_x = hx[2] + (m2 + 1 - cross[2][v]) - 0.5
        if independent:
            pts = ((U(x_v1), U(bottom_tip)), (U(x_v1), U(ride_y)), (U(tip_x), U(ride_y)))
        else:
            pts = ((U(x_v1), U(bottom_tip)), (U(x_v1), U(jit)),
                   (U(x_v2), U(jit)), (U(x_v2), U(ride_y)), (U(tip_x), U(ride_y)))
        paths.append(_path_from_polyline(v, pts))

    for i, v in enumerate(seqs[2], start=1):
        # ascending bracket riding left into class 0's columns
        x_v1 = hx[2] + (m2 + 1 - i)
        bottom_tip = rb1 + cross[1][v] + 0.5
        jit = j2 + (m2 + 1 - i)
        x_v2 = hx[2] + (m2 + 1 - own[v]) + 0.5
        ride_y = rb2 + (m2 + 1 - i)
        tip_x = hx[0] + cross[0][v] + 0.5
        if independent:
            pts = ((U(x_v1), U(bottom_tip)), (U(x_v1), U(ride_y)), (U(tip_x), U(ride_y)))
        else:
            pts = ((U(x_v1), U(bottom_tip)), (U(x_v1), U(jit)),
                   (U(x_v2), U(jit)), (U(x_v2), U(ride_y)), (U(tip_x), U(ride_y)))
        paths.append(_path_from_polyline(v, pts))

    paths.sort(key=lambda p: p.v)
    return GridPathModel(tuple(paths))


def _path_from_polyline(v: int, pts) -> GridPath:
    """Drop repeated and collinear intermediate points before validating."""
    cleaned: list[tuple[int, int]] = []
    for p in pts:
        if cleaned and cleaned[-1] == p:
            continue
        if len(cleaned) >= 2:
            (ax, ay), (bx, by) = cleaned[-2], cleaned[-1]
            if (ax == bx == p[0]) or (ay == by == p[1]):
                cleaned[-1] = p
                continue
        cleaned.append(p)
    return GridPath(v, tuple(cleaned))


def _require_independent(g: Graph, rep: Representation):
    for u, v in g.edges():
        if rep.partition.class_of[u] == rep.partition.class_of[v]:
            raise ValueError("classes are not independent sets")


# ---------------------------------------------------------------------------
# JSON


def grid_model_to_json(m: GridPathModel) -> dict:
    return {"paths": [{"v": p.v, "pts": [list(pt) for pt in p.pts]} for p in m.paths]}


def grid_model_from_json(data: dict) -> GridPathModel:
    paths = tuple(
        GridPath(int(p["v"]), tuple((int(x), int(y)) for x, y in p["pts"]))
        for p in data["paths"]
    )
    return GridPathModel(tuple(paths))
