"""Immutable simple graphs with one bitset row per vertex.

Vertices are the integers ``0..n-1``.  A vertex set is a plain ``int`` used as
a bitmask (bit ``v`` set means ``v`` is in the set); the helpers ``bits`` and
``mask_of`` convert between masks and vertex sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64


class OrderError(ValueError):
    """Raised when a construction would exceed ``MAX_ORDER`` vertices."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``rows[v]`` is the neighbour bitmask of ``v``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise OrderError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.rows) != self.n:
            raise ValueError("row count does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside the vertex range")
            if row >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency {v}-{u}")

    # construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def _trusted(cls, n: int, rows: Sequence[int]) -> Graph:
        # Skips validation; only for rows produced by this package's own algebra.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", tuple(rows))
        return g

    # queries ------------------------------------------------------------

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in combinations(range(self.n), 2) if not self.rows[u] >> v & 1]

    # derived graphs -----------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            r = 0
            for u in bits(row):
                r |= 1 << perm[u]
            rows[perm[v]] = r
        return Graph._trusted(self.n, rows)

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise ValueError("self-loop")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._trusted(self.n, rows)

    def remove_edge(self, u: int, v: int) -> Graph:
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._trusted(self.n, rows)

    def remove_vertex(self, v: int) -> Graph:
        return induced(self, self.full & ~(1 << v))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# named graphs -------------------------------------------------------------


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, [full & ~(1 << v) for v in range(n)])


def empty(n: int) -> Graph:
    return Graph._trusted(n, [0] * n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(s: int, t: int) -> Graph:
    return join(empty(s), empty(t))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# algebra ------------------------------------------------------------------


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g + h``: vertices of ``h`` are shifted up by ``g.n``."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise OrderError(f"union order {n} exceeds {MAX_ORDER}")
    return Graph._trusted(n, list(g.rows) + [r << g.n for r in h.rows])


def join(g: Graph, h: Graph) -> Graph:
    """``g ∨ h``: the disjoint union plus every edge between the two parts."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise OrderError(f"join order {n} exceeds {MAX_ORDER}")
    g_mask = g.full
    h_mask = h.full << g.n
    rows = [r | h_mask for r in g.rows] + [(r << g.n) | g_mask for r in h.rows]
    return Graph._trusted(n, rows)


def union_all(parts: Iterable[Graph]) -> Graph:
    out = empty(0)
    for p in parts:
        out = disjoint_union(out, p)
    return out


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph._trusted(g.n, [full & ~r & ~(1 << v) for v, r in enumerate(g.rows)])


def induced(g: Graph, s: int) -> Graph:
    """``G[S]``, relabelled to ``0..|S|-1`` preserving vertex order."""
    if s == 0:
        raise ValueError("induced subgraph on an empty vertex set")
    if s & ~g.full:
        raise ValueError("vertex set outside the vertex range")
    verts = list(bits(s))
    pos = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        r = 0
        for u in bits(g.rows[v] & s):
            r |= 1 << pos[u]
        rows.append(r)
    return Graph._trusted(len(verts), rows)


# structure ----------------------------------------------------------------


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("minimum degree of the null graph")
    return min(r.bit_count() for r in g.rows)


def reach(g: Graph, start: int, within: int) -> int:
    """Mask of vertices reachable from ``start`` using only vertices in ``within``."""
    rows = g.rows
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= rows[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``G[within]`` as masks, ordered by least vertex."""
    left = g.full if within is None else within
    out = []
    while left:
        v = (left & -left).bit_length() - 1
        comp = reach(g, v, left)
        out.append(comp)
        left &= ~comp
    return out


def is_connected(g: Graph, within: int | None = None) -> bool:
    s = g.full if within is None else within
    if s == 0:
        return True
    v = (s & -s).bit_length() - 1
    return reach(g, v, s) == s


def articulation_points(g: Graph) -> int:
    """Mask of cut-vertices (vertices whose removal increases the number of components).

    Iterative Hopcroft-Tarjan lowpoint computation.
    """
    n = g.n
    rows = g.rows
    disc = [-1] * n
    low = [0] * n
    cut = 0
    t = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        root_children = 0
        stack = [(root, -1, iter(bits(rows[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] < 0:
                    disc[u] = low[u] = t
                    t += 1
                    if v == root:
                        root_children += 1
                    stack.append((u, v, iter(bits(rows[u]))))
                    advanced = True
                    break
                if u != parent and disc[u] < low[v]:
                    low[v] = disc[u]
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if parent != root and low[v] >= disc[parent]:
                    cut |= 1 << parent
        if root_children > 1:
            cut |= 1 << root
    return cut


def is_2connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and articulation_points(g) == 0


def is_2connected_naive(g: Graph) -> bool:
    """Definitional check: connected, ``n >= 3`` and ``G - v`` connected for all ``v``."""
    if g.n < 3 or not is_connected(g):
        return False
    full = g.full
    return all(is_connected(g, full & ~(1 << v)) for v in range(g.n))


def is_clique(g: Graph, s: int) -> bool:
    return all((g.rows[v] | 1 << v) & s == s for v in bits(s))
