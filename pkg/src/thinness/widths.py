"""Exact bandwidth, pathwidth, decompositions, and related quantities.

Everything here is exact and sized for desk-scale inputs: bandwidth by
branch and bound (n <= 12), pathwidth by the vertex-separation subset
DP (n <= 16), isoperimetric peak by a full subset scan (n <= 20).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, Partition, Representation, bits
from .ordering import is_consistent


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[frozenset[int], ...]

    def width(self) -> int:
        return max((len(b) for b in self.bags), default=1) - 1

    def spans(self, n: int) -> list[tuple[int, int]]:
        """(s(v), e(v)) bag index range per vertex; -1 when absent."""
        first = [-1] * n
        last = [-1] * n
        for i, bag in enumerate(self.bags):
            for v in bag:
                if first[v] == -1:
                    first[v] = i
                last[v] = i
        return list(zip(first, last))


def validate_path_decomposition(g: Graph, pd: PathDecomposition,
                                proper: bool = False) -> None:
    """Raise ValueError unless pd satisfies the decomposition conditions.

    Conditions: bags cover all vertices, every edge is inside some bag,
    each vertex occupies a contiguous bag interval; ``proper`` adds that
    no vertex's interval is a proper subset of another's.
    """
    n = g.n
    spans = pd.spans(n)
    covered = set()
    for bag in pd.bags:
        covered |= bag
    if covered != set(range(n)):
        raise ValueError("bags do not cover all vertices")
    for v, (s, e) in enumerate(spans):
        total = sum(1 for bag in pd.bags if v in bag)
        if total != e - s + 1:
            raise ValueError(f"vertex {v} does not occupy a contiguous interval")
    for u, v in g.edges():
        if not any(u in bag and v in bag for bag in pd.bags):
            raise ValueError(f"edge ({u},{v}) not inside any bag")
    if proper:
        for u in range(n):
            for v in range(n):
                if u == v:
                    continue
                su, eu = spans[u]
                sv, ev = spans[v]
                if sv <= su and eu <= ev and (su, eu) != (sv, ev):
                    raise ValueError(f"interval of {u} properly inside that of {v}")


def pd_to_json(pd: PathDecomposition) -> dict:
    return {"bags": [sorted(bag) for bag in pd.bags]}


def pd_from_json(data: dict) -> PathDecomposition:
    return PathDecomposition(tuple(frozenset(int(v) for v in bag)
                                   for bag in data["bags"]))


# ---------------------------------------------------------------------------
# bandwidth


def labeling_width(g: Graph, f: list[int]) -> int:
    if len(set(f)) != g.n:
        raise ValueError("labeling must be injective")
    return max((abs(f[u] - f[v]) for u, v in g.edges()), default=0)


def bandwidth(g: Graph) -> tuple[int, list[int]]:
    """Exact bandwidth with an optimal labeling f (positions 0..n-1).

    Branch and bound placing vertices position by position, pruning on
    the running maximum gap; the initial incumbent comes from a BFS
    layout.
    """
    n = g.n
    if n > 12:
        raise ValueError("bandwidth solver supports n <= 12")
    if n == 0:
        return 0, []
    from .ordering import _bfs_order

    seed = _bfs_order(g, min(range(n), key=lambda v: (g.degree(v), v)))
    f0 = [0] * n
    for pos, v in enumerate(seed):
        f0[v] = pos
    best = labeling_width(g, f0)
    best_f = list(f0)
    if best == 0:
        return 0, best_f
    if best == 1 and g.edge_count() > 0:
        return 1, best_f

    placed_pos = [-1] * n

    def rec(pos: int, used: int, cur: int):
        nonlocal best, best_f
        if cur >= best:
            return
        if pos == n:
            best, best_f = cur, list(placed_pos)
            return
        for v in range(n):
            if used & (1 << v):
                continue
            gap = cur
            ok = True
            for u in bits(g.adj[v]):
                pu = placed_pos[u]
                if pu >= 0:
                    d = pos - pu
                    if d >= best:
                        ok = False
                        break
                    gap = max(gap, d)
            if not ok:
                continue
            placed_pos[v] = pos
            rec(pos + 1, used | (1 << v), gap)
            placed_pos[v] = -1

    rec(0, 0, 0)
    return best, best_f


# ---------------------------------------------------------------------------
# pathwidth


def pathwidth(g: Graph) -> tuple[int, PathDecomposition]:
    """Exact pathwidth with a witness decomposition.

    Subset DP over elimination prefixes (vertex separation equals
    pathwidth); the witness layout is rebuilt from DP parents and
    turned into bags.
    """
    n = g.n
    if n > 16:
        raise ValueError("pathwidth solver supports n <= 16")
    if n == 0:
        return 0, PathDecomposition((frozenset(),))
    full = (1 << n) - 1
    adj = g.adj

    boundary = [0] * (1 << n)
    for s_mask in range(1, 1 << n):
        b = 0
        m = s_mask
        while m:
            low = m & -m
            m ^= low
            if adj[low.bit_length() - 1] & ~s_mask & full:
                b += 1
        boundary[s_mask] = b

    f = [0] * (1 << n)
    choice = [-1] * (1 << n)
    for s_mask in sorted(range(1, 1 << n), key=int.bit_count):
        best = None
        pick = -1
        m = s_mask
        while m:
            low = m & -m
            m ^= low
            val = f[s_mask ^ low]
            if best is None or val < best:
                best = val
                pick = low.bit_length() - 1
        f[s_mask] = max(boundary[s_mask], best or 0)
        choice[s_mask] = pick

    layout: list[int] = []
    s_mask = full
    while s_mask:
        v = choice[s_mask]
        layout.append(v)
        s_mask ^= 1 << v
    layout.reverse()

    pos = {v: i for i, v in enumerate(layout)}
    maxnbr = [max((pos[u] for u in bits(adj[v])), default=-1) for v in range(n)]
    bags = []
    for i, v in enumerate(layout):
        bag = {v}
        for j in range(i):
            u = layout[j]
            if maxnbr[u] >= i:
                bag.add(u)
        bags.append(frozenset(bag))
    pd = PathDecomposition(tuple(bags))
    validate_path_decomposition(g, pd)
    assert pd.width() == f[full]
    return f[full], pd


# ---------------------------------------------------------------------------
# decompositions -> representations


def proper_decomposition_from_labeling(g: Graph, f: list[int]) -> PathDecomposition:
    """Sliding label windows of width bandwidth(f)+1: a proper decomposition."""
    if len(set(f)) != g.n:
        raise ValueError("labeling must be injective")
    w = labeling_width(g, f)
    lo, hi = min(f), max(f)
    bags = []
    for t in range(lo - w, hi + 1):
        bags.append(frozenset(v for v in range(g.n) if t <= f[v] <= t + w))
    # trim empty end bags; interval lengths all equal w+1, so the
    # proper condition holds
    while bags and not bags[0]:
        bags.pop(0)
    while bags and not bags[-1]:
        bags.pop()
    pd = PathDecomposition(tuple(bags))
    validate_path_decomposition(g, pd, proper=True)
    return pd


def partition_from_decomposition(g: Graph, pd: PathDecomposition) -> Representation:
    """Order by first bag, color bag by bag: an independent certificate.

    New vertices of each bag take the lowest classes unused inside the
    bag; the result is consistent with the order (strongly consistent
    when the decomposition is proper) and uses at most width+1 classes.
    """
    validate_path_decomposition(g, pd)
    n = g.n
    spans = pd.spans(n)
    order = sorted(range(n), key=lambda v: (spans[v][0], v))
    class_of = [-1] * n
    prev: frozenset[int] = frozenset()
    for bag in pd.bags:
        used = {class_of[v] for v in bag if class_of[v] >= 0}
        for v in sorted(bag - prev):
            if class_of[v] >= 0:
                continue
            c = 0
            while c in used:
                c += 1
            class_of[v] = c
            used.add(c)
        prev = bag
    k = max(class_of) + 1
    rep = Representation(tuple(order), Partition(tuple(class_of), k))
    ok, wit = is_consistent(g, rep, "consistent")
    assert ok, f"decomposition procedure produced an inconsistent result: {wit}"
    return rep


# ---------------------------------------------------------------------------
# isoperimetric peak and diameter


def iso_peak(g: Graph) -> int:
    """max over sizes s of the minimum |N(X) \\ X| over vertex sets of size s."""
    n = g.n
    if n > 20:
        raise ValueError("iso_peak supports n <= 20")
    if n <= 1:
        return 0
    best_per_size = [None] * n  # index s = 1..n-1
    for mask in range(1, 1 << n):
        size = mask.bit_count()
        if size == n:
            continue
        nb = 0
        m = mask
        while m:
            low = m & -m
            m ^= low
            nb |= g.adj[low.bit_length() - 1]
        val = (nb & ~mask).bit_count()
        if best_per_size[size] is None or val < best_per_size[size]:
            best_per_size[size] = val
    return max(v for v in best_per_size[1:] if v is not None)


def diameter(g: Graph) -> int:
    """Max eccentricity via all-pairs BFS; raises on disconnected input."""
    if not g.is_connected():
        raise ValueError("diameter requires a connected graph")
    if g.n == 0:
        return 0
    diam = 0
    for s in range(g.n):
        dist = 0
        seen = 1 << s
        frontier = seen
        while True:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            if not frontier:
                break
            seen |= frontier
            dist += 1
        diam = max(diam, dist)
    return diam
