"""Exact max clique and graph coloring on bitmask adjacency rows.

Sized for conflict graphs of small instances (n up to ~40); both
routines are deterministic so golden tests stay stable.
"""

from __future__ import annotations

from .graphs import bits


def max_clique(rows: list[int], universe: int) -> tuple[int, int]:
    """Exact maximum clique within ``universe``; returns (size, mask)."""
    best_size = 0
    best_mask = 0
    # Order candidates by degree (descending) inside the universe for
    # stronger early bounds; ties by index keep the search deterministic.
    verts = sorted(bits(universe), key=lambda v: (-(rows[v] & universe).bit_count(), v))

    def expand(cur_mask: int, cur_size: int, cand: int):
        nonlocal best_size, best_mask
        if cur_size + cand.bit_count() <= best_size:
            return
        if not cand:
            if cur_size > best_size:
                best_size, best_mask = cur_size, cur_mask
            return
        for v in verts:
            bit = 1 << v
            if not cand & bit:
                continue
            if cur_size + cand.bit_count() <= best_size:
                return
            cand &= ~bit
            expand(cur_mask | bit, cur_size + 1, cand & rows[v])
        if cur_size > best_size:
            best_size, best_mask = cur_size, cur_mask

    expand(0, 0, universe)
    return best_size, best_mask


def clique_through(rows: list[int], universe: int, v: int) -> int:
    """Size of a maximum clique inside ``universe`` that contains v."""
    size, _ = max_clique(rows, rows[v] & universe)
    return size + 1


def clique_size_capped(rows: list[int], universe: int, cap: int) -> int:
    """Max clique size inside ``universe``, but stop growing at ``cap``.

    Returns min(omega, cap); cheap when cap is small, which is the hot
    case for the thinness search (cap = the class budget).
    """
    if cap <= 0:
        return 0
    best = 0

    def expand(size: int, cand: int) -> bool:
        nonlocal best
        if size > best:
            best = size
            if best >= cap:
                return True
        while cand:
            if size + cand.bit_count() <= best:
                return False
            low = cand & -cand
            cand ^= low
            if expand(size + 1, cand & rows[low.bit_length() - 1]):
                return True
        return False

    expand(0, universe)
    return best


def greedy_coloring(rows: list[int], n: int) -> list[int]:
    """First-fit coloring in vertex index order (lowest color wins)."""
    colors = [-1] * n
    for v in range(n):
        used = 0
        for u in bits(rows[v]):
            if u < n and colors[u] >= 0:
                used |= 1 << colors[u]
        c = 0
        while used & (1 << c):
            c += 1
        colors[v] = c
    return colors


def decide_colorable(rows: list[int], n: int, k: int) -> list[int] | None:
    """Proper coloring with at most k colors, or None.

    Vertices are processed in index order and each tries the lowest
    color first, so the first solution found is canonical.
    """
    if n == 0:
        return []
    if k <= 0:
        return None
    colors = [-1] * n

    def place(v: int, used: int) -> bool:
        if v == n:
            return True
        forbidden = 0
        for u in bits(rows[v]):
            if u < v:
                forbidden |= 1 << colors[u]
        limit = min(k, used + 1)
        for c in range(limit):
            if forbidden & (1 << c):
                continue
            colors[v] = c
            if place(v + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    if place(0, 0):
        return colors
    return None


def chromatic_number(rows: list[int], n: int) -> tuple[int, list[int]]:
    """Exact chromatic number with a canonical witness coloring."""
    if n == 0:
        return 0, []
    lb, _ = max_clique(rows, (1 << n) - 1)
    greedy = greedy_coloring(rows, n)
    ub = max(greedy) + 1
    if lb == ub:
        # Still produce the canonical coloring for determinism.
        return lb, decide_colorable(rows, n, lb) or greedy
    for k in range(lb, ub):
        colors = decide_colorable(rows, n, k)
        if colors is not None:
            return k, colors
    return ub, decide_colorable(rows, n, ub) or greedy
