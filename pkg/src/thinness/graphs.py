"""Core graph types over dense integer vertices with bitmask adjacency.

Vertices are always 0..n-1.  Adjacency rows are Python ints used as bit
sets, which keeps every algorithm in the package allocation-free and
exact regardless of n (72-vertex inputs work the same as 6-vertex ones).
Names, when present, live in a side table and never enter algorithms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph: no loops, symmetric adjacency."""

    __slots__ = ("n", "adj", "names")

    def __init__(self, n: int, adj: tuple[int, ...], names: tuple[str, ...] | None = None):
        if len(adj) != n:
            raise ValueError("adjacency length must equal n")
        for v, row in enumerate(adj):
            if row >> n:
                raise ValueError(f"vertex {v} has a neighbor out of range")
            if row & (1 << v):
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(adj):
            for u in bits(row):
                if not adj[u] & (1 << v):
                    raise ValueError(f"adjacency not symmetric at ({u},{v})")
        if names is not None and len(names) != n:
            raise ValueError("names length must equal n")
        self.n = n
        self.adj = tuple(adj)
        self.names = tuple(names) if names is not None else None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   names: Iterable[str] | None = None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), tuple(names) if names is not None else None)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            for off in bits(row):
                out.append((u, u + 1 + off))
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.full_mask()

    def bipartition(self) -> tuple[int, int] | None:
        """Return (side_a_mask, side_b_mask) if bipartite, else None.

        Vertex 0 of every connected component goes to side a.
        """
        color = [-1] * self.n
        a = b = 0
        for s in range(self.n):
            if color[s] != -1:
                continue
            color[s] = 0
            queue = [s]
            while queue:
                v = queue.pop()
                for u in bits(self.adj[v]):
                    if color[u] == -1:
                        color[u] = 1 - color[v]
                        queue.append(u)
                    elif color[u] == color[v]:
                        return None
        for v in range(self.n):
            if color[v] == 0:
                a |= 1 << v
            else:
                b |= 1 << v
        return a, b

    def name_of(self, v: int) -> str:
        return self.names[v] if self.names else str(v)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


class Digraph:
    """Directed graph on 0..n-1 without self-arcs."""

    __slots__ = ("n", "arcs")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]):
        arcset = frozenset((int(u), int(v)) for u, v in arcs)
        for u, v in arcset:
            if u == v:
                raise ValueError(f"self-arc at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) out of range")
        self.n = n
        self.arcs = arcset

    def successors(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.arcs):
            out[u].append(v)
        return out

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={len(self.arcs)})"


@dataclass(frozen=True)
class Partition:
    """Vertex -> class index map with k classes, every class nonempty."""

    class_of: tuple[int, ...]
    k: int

    def __post_init__(self):
        used = set(self.class_of)
        if any(c < 0 or c >= self.k for c in self.class_of):
            raise ValueError("class index out of range")
        if used != set(range(self.k)):
            raise ValueError("every class index in 0..k-1 must be used")

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]]) -> "Partition":
        groups = [list(c) for c in classes]
        n = sum(len(c) for c in groups)
        class_of = [-1] * n
        for idx, group in enumerate(groups):
            for v in group:
                class_of[v] = idx
        if -1 in class_of:
            raise ValueError("classes do not cover all vertices")
        return cls(tuple(class_of), len(groups))

    def members(self, c: int) -> list[int]:
        return [v for v, cv in enumerate(self.class_of) if cv == c]

    def class_masks(self) -> list[int]:
        masks = [0] * self.k
        for v, c in enumerate(self.class_of):
            masks[c] |= 1 << v
        return masks


@dataclass(frozen=True)
class Representation:
    """A vertex order plus a class partition.

    Consistency with a graph is a checked property (see ``ordering``),
    not an invariant of the value itself.
    """

    order: tuple[int, ...]
    partition: Partition

    def __post_init__(self):
        n = len(self.order)
        if sorted(self.order) != list(range(n)):
            raise ValueError("order must be a permutation of 0..n-1")
        if len(self.partition.class_of) != n:
            raise ValueError("partition size does not match order size")

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def k(self) -> int:
        return self.partition.k

    def positions(self) -> list[int]:
        """position[v] = index of v in the order."""
        pos = [0] * self.n
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos


# ---------------------------------------------------------------------------
# operations


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, relabeled densely in input order."""
    vs = list(vertices)
    if any(v < 0 or v >= g.n for v in vs):
        raise ValueError("vertex out of range")
    index = {v: i for i, v in enumerate(vs)}
    if len(index) != len(vs):
        raise ValueError("duplicate vertices")
    rows = [0] * len(vs)
    for i, v in enumerate(vs):
        for u in bits(g.adj[v]):
            j = index.get(u)
            if j is not None:
                rows[i] |= 1 << j
    names = tuple(g.name_of(v) for v in vs) if g.names else None
    return Graph(len(vs), tuple(rows), names)


def bipartite_half(g: Graph, a: Iterable[int], b: Iterable[int]) -> Graph:
    """Graph on a+b keeping only edges with one endpoint in each set.

    Not necessarily an induced subgraph: edges inside a or inside b are
    dropped.  Vertices are relabeled densely, a first then b.
    """
    alist, blist = list(a), list(b)
    if set(alist) & set(blist):
        raise ValueError("sides overlap")
    vs = alist + blist
    index = {v: i for i, v in enumerate(vs)}
    na = len(alist)
    rows = [0] * len(vs)
    for i, v in enumerate(alist):
        for u in bits(g.adj[v]):
            j = index.get(u)
            if j is not None and j >= na:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    names = tuple(g.name_of(v) for v in vs) if g.names else None
    return Graph(len(vs), tuple(rows), names)


def topological_sort(d: Digraph) -> tuple[list[int] | None, list[int] | None]:
    """Return (order, None) or (None, cycle); a cycle is a normal outcome.

    The order picks the smallest-index available source first, so output
    is deterministic.  The cycle witness is a shortest directed cycle
    through the first back-arc found by a DFS in index order, closed by
    repeating its first vertex.
    """
    import heapq

    succ = d.successors()
    indeg = [0] * d.n
    for _, v in d.arcs:
        indeg[v] += 1
    heap = [v for v in range(d.n) if indeg[v] == 0]
    heapq.heapify(heap)
    order: list[int] = []
    indeg = list(indeg)
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for u in succ[v]:
            indeg[u] -= 1
            if indeg[u] == 0:
                heapq.heappush(heap, u)
    if len(order) == d.n:
        return order, None
    return None, _find_cycle(d, succ)


def _find_cycle(d: Digraph, succ: list[list[int]]) -> list[int]:
    # First back-arc in a DFS from the lowest-index vertex, then a
    # shortest path (BFS) from its head back to its tail.
    state = [0] * d.n  # 0 new, 1 on stack, 2 done
    back: tuple[int, int] | None = None

    def dfs(v: int) -> bool:
        nonlocal back
        state[v] = 1
        for u in succ[v]:
            if state[u] == 1:
                back = (v, u)
                return True
            if state[u] == 0 and dfs(u):
                return True
        state[v] = 2
        return False

    import sys

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, d.n * 2 + 100))
    try:
        for s in range(d.n):
            if state[s] == 0 and dfs(s):
                break
    finally:
        sys.setrecursionlimit(old)
    assert back is not None
    tail, head = back
    # BFS head -> tail
    prev = {head: None}
    frontier = [head]
    while tail not in prev:
        nxt = []
        for v in frontier:
            for u in succ[v]:
                if u not in prev:
                    prev[u] = v
                    nxt.append(u)
        frontier = nxt
    path = [tail]
    while path[-1] != head:
        path.append(prev[path[-1]])
    path.reverse()  # head .. tail
    return path + [head]


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected graph on n labeled vertices, by edge-mask order.

    No isomorphism rejection: coverage is the point, not minimality.
    """
    if n > 8:
        raise ValueError("enumerate_connected_graphs supports n <= 8")
    if n == 0:
        return
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    m = len(pairs)
    full = (1 << n) - 1
    for mask in range(1 << m):
        rows = [0] * n
        em = mask
        while em:
            low = em & -em
            u, v = pairs[low.bit_length() - 1]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            em ^= low
        # connectivity over bitmask rows
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            frontier = nxt & ~seen
            seen |= frontier
        if seen == full:
            yield Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# IO: text format "n m" + edge lines, and JSON


def parse_graph_text(text: str) -> Graph:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
    if not lines:
        raise ValueError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("first line must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edges(n, edges)


def format_graph_text(g: Graph, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    edges = g.edges()
    out.append(f"{g.n} {len(edges)}")
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def graph_to_json(g: Graph) -> dict:
    data: dict = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    if g.names:
        data["names"] = list(g.names)
    return data


def graph_from_json(data: dict) -> Graph:
    names = data.get("names")
    return Graph.from_edges(int(data["n"]),
                            [(int(u), int(v)) for u, v in data["edges"]],
                            names)


def load_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse a graph from text or JSON content."""
    if fmt == "auto":
        fmt = "json" if text.lstrip()[:1] == "{" else "text"
    if fmt == "json":
        return graph_from_json(json.loads(text))
    if fmt == "text":
        return parse_graph_text(text)
    raise ValueError(f"unknown graph format {fmt!r}")
