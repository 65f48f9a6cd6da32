"""Ordered trigraph patterns and membership solvers.

A pattern fixes compulsory edges and non-edges on an ordered vertex
set; remaining pairs are free.  Three flavors: plain (one total order),
bicolored (total order plus a proper 2-coloring), bipartite (two sides,
each ordered, constraints across sides only).

Membership searches build orders left to right and reject a prefix as
soon as a pattern occurrence ends at the newest vertex; occurrences
survive into every completion, so pruning is sound and complete.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graphs import Graph, bits

FLAVORS = ("plain", "bicolored", "bipartite")


@dataclass(frozen=True)
class Pattern:
    name: str
    flavor: str
    size: int                      # total vertices; bipartite: side1 + side2
    edges: frozenset[tuple[int, int]]
    nonedges: frozenset[tuple[int, int]]
    white: frozenset[int] = field(default_factory=frozenset)  # bicolored only
    side1: int = 0                 # bipartite only

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")
        if self.edges & self.nonedges:
            raise ValueError("edges and nonedges overlap")
        if self.flavor == "bipartite":
            s2 = self.size - self.side1
            for i, j in self.edges | self.nonedges:
                if not (0 <= i < self.side1 and 0 <= j < s2):
                    raise ValueError("bipartite pair out of range")
        else:
            for i, j in self.edges | self.nonedges:
                if not (0 <= i < j < self.size):
                    raise ValueError("pair out of range")
        if self.flavor == "bicolored" and any(w >= self.size for w in self.white):
            raise ValueError("white vertex out of range")

    @property
    def side2(self) -> int:
        return self.size - self.side1


def _tuple_realizes(g: Graph, vs, pattern: Pattern) -> bool:
    for i, j in pattern.edges:
        if not g.has_edge(vs[i], vs[j]):
            return False
    for i, j in pattern.nonedges:
        if g.has_edge(vs[i], vs[j]):
            return False
    return True


def _tuple_realizes_cross(g: Graph, va, vb, pattern: Pattern) -> bool:
    for i, j in pattern.edges:
        if not g.has_edge(va[i], vb[j]):
            return False
    for i, j in pattern.nonedges:
        if g.has_edge(va[i], vb[j]):
            return False
    return True


def occurs(g: Graph, order, pattern: Pattern, coloring=None, sides=None
           ) -> tuple | None:
    """First occurrence witness of the pattern, or None.

    plain: ``order`` is a total order.  bicolored: also pass
    ``coloring`` (vertex -> 0/1; pattern white = color 1).  bipartite:
    pass ``sides`` = (order_of_side1, order_of_side2) instead of
    ``order``.
    """
    if pattern.flavor == "bipartite":
        if sides is None:
            raise ValueError("bipartite patterns need sides=(order_a, order_b)")
        oa, ob = sides
        for ta in itertools.combinations(oa, pattern.side1):
            for tb in itertools.combinations(ob, pattern.side2):
                if _tuple_realizes_cross(g, ta, tb, pattern):
                    return ta + tb
        return None
    if order is None:
        raise ValueError("plain and bicolored patterns need a total order")
    if pattern.flavor == "bicolored" and coloring is None:
        raise ValueError("bicolored patterns need a coloring")
    for vs in itertools.combinations(order, pattern.size):
        if pattern.flavor == "bicolored":
            if any((coloring[v] == 1) != (i in pattern.white) for i, v in enumerate(vs)):
                continue
        if _tuple_realizes(g, vs, pattern):
            return vs
    return None


# ---------------------------------------------------------------------------
# builtin catalog


def _plain(name, size, edges, nonedges):
    e = frozenset(tuple(sorted((a - 1, b - 1))) for a, b in edges)
    n = frozenset(tuple(sorted((a - 1, b - 1))) for a, b in nonedges)
    return Pattern(name, "plain", size, e, n)


def _bicol(name, size, white, edges, nonedges):
    e = frozenset(tuple(sorted((a - 1, b - 1))) for a, b in edges)
    n = frozenset(tuple(sorted((a - 1, b - 1))) for a, b in nonedges)
    return Pattern(name, "bicolored", size, e, n, white=frozenset(w - 1 for w in white))


def _bip(name, s1, s2, edges, nonedges):
    e = frozenset((a - 1, b - 1) for a, b in edges)
    n = frozenset((a - 1, b - 1) for a, b in nonedges)
    return Pattern(name, "bipartite", s1 + s2, e, n, side1=s1)


_CATALOG = [
    _plain("P1", 3, [(1, 3)], [(2, 3)]),
    _plain("P2", 3, [(1, 3)], [(1, 2)]),
    _plain("P3", 3, [(1, 3)], [(1, 2), (2, 3)]),
    _plain("P4", 3, [(1, 2), (1, 3), (2, 3)], []),
    _plain("P5", 3, [(1, 2), (2, 3)], []),
    _plain("P6", 4, [(1, 3), (2, 4)], [(2, 3)]),
    _plain("P7", 5, [(1, 3), (3, 5)], [(2, 3), (3, 4)]),
    _plain("P8", 6, [(1, 3), (4, 6)], [(2, 3), (4, 5)]),
    _plain("P9", 6, [(1, 4), (3, 4), (3, 6)], [(2, 4), (3, 5)]),
    _bicol("Q1", 3, [3], [(1, 3)], [(2, 3)]),
    _bicol("Q2", 3, [1, 2], [(1, 3)], [(2, 3)]),
    _bicol("Q3", 3, [1], [(1, 3)], [(1, 2)]),
    _bicol("Q4", 3, [2, 3], [(1, 3)], [(1, 2)]),
    _bip("R1", 2, 2, [(1, 2), (2, 1)], [(1, 1)]),
    _bip("R2", 2, 2, [(1, 2), (2, 1)], [(2, 2)]),
    _bip("R3", 3, 3, [(1, 3), (3, 1), (3, 3)], [(2, 3), (3, 2)]),
    _bip("R4", 3, 1, [(1, 1), (3, 1)], [(2, 1)]),
    _bip("R4p", 1, 3, [(1, 1), (1, 3)], [(1, 2)]),
]


def builtin_patterns() -> dict[str, Pattern]:
    """The named pattern catalog (P1..P9, Q1..Q4, R1..R4 and R4p)."""
    return {p.name: p for p in _CATALOG}


def parse_family(spec: str) -> list[Pattern]:
    """Family specs: comma list of names, or compact digits like P6789."""
    catalog = builtin_patterns()
    names: list[str] = []
    for tok in spec.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok in catalog:
            names.append(tok)
        elif len(tok) > 2 and tok[0].upper() in "PQR" and tok[1:].isdigit():
            names.extend(tok[0].upper() + d for d in tok[1:])
        else:
            raise ValueError(f"unknown pattern or family {tok!r}")
    pats = []
    for name in names:
        if name not in catalog:
            raise ValueError(f"unknown pattern {name!r}")
        pats.append(catalog[name])
    flavors = {p.flavor for p in pats}
    if len(flavors) > 1:
        raise ValueError("family mixes pattern flavors")
    return pats


# ---------------------------------------------------------------------------
# membership searches


def _ends_at_last(g: Graph, prefix, pattern: Pattern, coloring=None) -> bool:
    """Does some occurrence use the last prefix vertex as its maximum?"""
    last = prefix[-1]
    body = prefix[:-1]
    if len(prefix) < pattern.size:
        return False
    for head in itertools.combinations(body, pattern.size - 1):
        vs = head + (last,)
        if pattern.flavor == "bicolored":
            if any((coloring[v] == 1) != (i in pattern.white) for i, v in enumerate(vs)):
                continue
        if _tuple_realizes(g, vs, pattern):
            return True
    return False


def ord_membership(g: Graph, family, coloring=None) -> list[int] | None:
    """Order avoiding all (plain or bicolored) patterns, or None."""
    family = list(family)
    for p in family:
        if p.flavor == "bipartite":
            raise ValueError("use biord_membership for bipartite patterns")
        if p.flavor == "bicolored" and coloring is None:
            raise ValueError("bicolored families need a coloring")
    n = g.n
    prefix: list[int] = []
    used = 0

    def rec() -> bool:
        if len(prefix) == n:
            return True
        nonlocal used
        for v in range(n):
            bv = 1 << v
            if used & bv:
                continue
            prefix.append(v)
            used |= bv
            if not any(_ends_at_last(g, prefix, p, coloring) for p in family):
                if rec():
                    return True
            used &= ~bv
            prefix.pop()
        return False

    if rec():
        order = list(prefix)
        for p in family:
            assert occurs(g, order, p, coloring=coloring) is None
        return order
    return None


def _proper_colorings(g: Graph):
    """All proper 2-colorings, one choice per connected component."""
    bip = g.bipartition()
    if bip is None:
        return
    comps = []
    seen = 0
    for s in range(g.n):
        if seen & (1 << s):
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
    a_mask, _ = bip
    for flips in range(1 << len(comps)):
        coloring = [0] * g.n
        for ci, comp in enumerate(comps):
            flip = bool(flips & (1 << ci))
            for v in bits(comp):
                base = 0 if a_mask & (1 << v) else 1
                coloring[v] = base ^ flip
        yield coloring


def bicolord_membership(g: Graph, family) -> tuple[list[int], list[int]] | None:
    """(order, coloring) avoiding all bicolored patterns, or None.

    Only bipartite graphs can be members; colorings range over proper
    2-colorings (two choices per connected component).
    """
    family = list(family)
    for coloring in _proper_colorings(g):
        order = ord_membership(g, family, coloring=coloring)
        if order is not None:
            return order, coloring
    return None


def biord_membership(g: Graph, family
                     ) -> tuple[tuple[list[int], list[int]], None] | None:
    """Bipartition plus per-side orders avoiding bipartite patterns.

    Returns ((order_a, order_b), None) or None.  Side a is ordered
    completely first; side b grows with incremental occurrence checks
    (every catalog pattern touches side b, so all occurrences are
    caught when their side-b part completes).
    """
    family = list(family)
    for p in family:
        if p.flavor != "bipartite":
            raise ValueError("biord_membership needs bipartite patterns")
        if p.side2 == 0:
            raise ValueError("patterns with an empty second side are unsupported")
    for coloring in _proper_colorings(g):
        side_a = [v for v in range(g.n) if coloring[v] == 0]
        side_b = [v for v in range(g.n) if coloring[v] == 1]
        res = _biord_search(g, side_a, side_b, family)
        if res is not None:
            return res, None
    return None


def _biord_search(g: Graph, side_a, side_b, family):
    for perm_a in itertools.permutations(side_a):
        order_b: list[int] = []

        def ends_bad() -> bool:
            last = order_b[-1]
            for p in family:
                if len(order_b) < p.side2 or len(perm_a) < p.side1:
                    continue
                for tb in itertools.combinations(order_b[:-1], p.side2 - 1):
                    vb = tb + (last,)
                    for ta in itertools.combinations(perm_a, p.side1):
                        if _tuple_realizes_cross(g, ta, vb, p):
                            return True
            return False

        def rec() -> bool:
            if len(order_b) == len(side_b):
                return True
            for v in side_b:
                if v in order_b:
                    continue
                order_b.append(v)
                if not ends_bad() and rec():
                    return True
                order_b.pop()
            return False

        if rec():
            oa, ob = list(perm_a), list(order_b)
            for p in family:
                assert occurs(g, None, p, sides=(oa, ob)) is None
            return oa, ob
    return None


# ---------------------------------------------------------------------------
# classification report


CLASS_FAMILIES = {
    "interval": "P1",
    "proper_interval": "P12",
    "two_thin": "P6789",
    "independent_two_thin": "P569",
    "proper_independent_two_thin": "P34",
    "monotone_l": "P6",
}


def classify(g: Graph) -> dict:
    """Membership booleans (with witness orders) for the named classes."""
    report = {}
    for cls, spec in CLASS_FAMILIES.items():
        family = parse_family(spec)
        order = ord_membership(g, family)
        report[cls] = {"member": order is not None, "order": order}
    return report


# ---------------------------------------------------------------------------
# pattern DSL: "pattern plain 4; edge 1 3; nonedge 2 3"


def format_pattern(p: Pattern) -> str:
    parts = []
    if p.flavor == "bipartite":
        parts.append(f"pattern bipartite {p.side1} {p.side2}")
        for i, j in sorted(p.edges):
            parts.append(f"edge {i + 1} {j + 1}'")
        for i, j in sorted(p.nonedges):
            parts.append(f"nonedge {i + 1} {j + 1}'")
    else:
        parts.append(f"pattern {p.flavor} {p.size}")
        if p.flavor == "bicolored":
            for w in sorted(p.white):
                parts.append(f"white {w + 1}")
        for i, j in sorted(p.edges):
            parts.append(f"edge {i + 1} {j + 1}")
        for i, j in sorted(p.nonedges):
            parts.append(f"nonedge {i + 1} {j + 1}")
    return "; ".join(parts)


def parse_pattern(text: str, name: str = "custom") -> Pattern:
    stmts = [s.strip() for s in text.split(";") if s.strip()]
    if not stmts or not stmts[0].startswith("pattern"):
        raise ValueError("pattern text must start with a 'pattern' header")
    head = stmts[0].split()
    flavor = head[1]
    edges, nonedges, white = set(), set(), set()
    if flavor == "bipartite":
        s1, s2 = int(head[2]), int(head[3])
        size = s1 + s2
    else:
        s1 = 0
        size = int(head[2])

    def parse_vertex(tok: str, expect_prime: bool) -> int:
        primed = tok.endswith("'")
        if flavor == "bipartite" and primed != expect_prime:
            raise ValueError(f"vertex {tok!r} on the wrong side")
        return int(tok.rstrip("'")) - 1

    for stmt in stmts[1:]:
        parts = stmt.split()
        if parts[0] == "white":
            white.add(int(parts[1]) - 1)
            continue
        if parts[0] not in ("edge", "nonedge"):
            raise ValueError(f"unknown statement {parts[0]!r}")
        if flavor == "bipartite":
            pair = (parse_vertex(parts[1], False), parse_vertex(parts[2], True))
        else:
            a, b = int(parts[1]) - 1, int(parts[2]) - 1
            pair = (min(a, b), max(a, b))
        (edges if parts[0] == "edge" else nonedges).add(pair)
    return Pattern(name, flavor, size, frozenset(edges), frozenset(nonedges),
                   white=frozenset(white), side1=s1)
