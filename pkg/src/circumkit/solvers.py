"""Exact solvers with certificates: longest cycle, maximum clique, longest
rooted path, plus crossing pairs on a path and the Pósa lower bound.

All searches are exact.  The path/cycle searches count DFS nodes against a
budget and raise ``BudgetExceeded`` instead of returning an estimate.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, bits, is_2connected

DEFAULT_BUDGET = int(os.environ.get("CIRCUMKIT_BUDGET", 10**8))


class BudgetExceeded(RuntimeError):
    def __init__(self, what: str, budget: int) -> None:
        super().__init__(f"{what}: search exceeded {budget} nodes")
        self.budget = budget


class InvalidCertificate(ValueError):
    pass


@dataclass(frozen=True)
class CycleCertificate:
    vertices: tuple[int, ...]

    def validate(self, g: Graph) -> None:
        vs = self.vertices
        if len(vs) < 3 or len(set(vs)) != len(vs):
            raise InvalidCertificate(f"not a cycle: {vs}")
        for a, b in zip(vs, vs[1:] + vs[:1]):
            if not g.has_edge(a, b):
                raise InvalidCertificate(f"cycle uses non-edge {a}-{b}")


@dataclass(frozen=True)
class CliqueCertificate:
    vertices: tuple[int, ...]

    def validate(self, g: Graph) -> None:
        vs = self.vertices
        if not vs or len(set(vs)) != len(vs):
            raise InvalidCertificate(f"not a vertex set: {vs}")
        for i, a in enumerate(vs):
            for b in vs[i + 1:]:
                if not g.has_edge(a, b):
                    raise InvalidCertificate(f"clique misses edge {a}-{b}")


@dataclass(frozen=True)
class PathCertificate:
    vertices: tuple[int, ...]

    def validate(self, g: Graph) -> None:
        vs = self.vertices
        if not vs or len(set(vs)) != len(vs):
            raise InvalidCertificate(f"not a path: {vs}")
        for a, b in zip(vs, vs[1:]):
            if not g.has_edge(a, b):
                raise InvalidCertificate(f"path uses non-edge {a}-{b}")

    def __len__(self) -> int:
        return len(self.vertices)


class _Stop(Exception):
    pass


def _reach(rows: Sequence[int], start: int, within: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= rows[low.bit_length() - 1]
            frontier ^= low
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def longest_cycle(g: Graph, at_least: int | None = None,
                  budget: int = DEFAULT_BUDGET) -> tuple[int, CycleCertificate | None]:
    """Longest cycle by DFS over paths anchored at the cycle's least vertex.

    Branches are cut when the vertices still reachable from the active end
    cannot beat the incumbent, or when none of them can close back to the
    anchor.  With ``at_least`` set, the search stops at the first cycle of
    that length (the result is then a lower bound, not the circumference).
    """
    n, rows = g.n, g.rows
    goal = n if at_least is None else min(at_least, n)
    best = 0
    best_cycle: list[int] | None = None
    count = 0
    path: list[int] = []

    def dfs(v: int, visited: int, anchor: int, free_all: int) -> None:
        nonlocal best, best_cycle, count
        count += 1
        if count > budget:
            raise BudgetExceeded("longest cycle", budget)
        k = len(path)
        if k >= 3 and rows[v] >> anchor & 1 and k > best:
            best = k
            best_cycle = list(path)
            if best >= goal:
                raise _Stop
        free = free_all & ~visited
        nbrs = rows[v] & free
        if not nbrs:
            return
        r = _reach(rows, v, free | (1 << v))
        if not (r & ~(1 << v) & rows[anchor]):
            return
        if k + r.bit_count() - 1 <= best:
            return
        while nbrs:
            low = nbrs & -nbrs
            u = low.bit_length() - 1
            nbrs ^= low
            path.append(u)
            dfs(u, visited | low, anchor, free_all)
            path.pop()

    try:
        for s in range(n):
            if n - s <= best:
                break
            allowed = g.full & ~((1 << s) - 1)
            comp = _reach(rows, s, allowed)
            if comp.bit_count() <= best or comp.bit_count() < 3:
                continue
            path[:] = [s]
            dfs(s, 1 << s, s, comp)
    except _Stop:
        pass
    if best_cycle is None:
        return 0, None
    cert = CycleCertificate(tuple(best_cycle))
    cert.validate(g)
    return best, cert


def circumference(g: Graph, budget: int = DEFAULT_BUDGET) -> tuple[int, CycleCertificate | None]:
    """Exact length of a longest cycle, ``(0, None)`` for forests.

    Among longest cycles the lexicographically smallest vertex sequence
    (starting at its least vertex) is returned.
    """
    return longest_cycle(g, budget=budget)


def has_cycle_at_least(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> bool:
    if k > g.n:
        return False
    return longest_cycle(g, at_least=k, budget=budget)[0] >= k


def is_hamiltonian(g: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    if g.n < 3:
        return False
    return has_cycle_at_least(g, g.n, budget)


def clique_number(g: Graph) -> tuple[int, CliqueCertificate]:
    """Maximum clique by branch and bound with a greedy-colouring bound."""
    if g.n == 0:
        raise ValueError("clique number of the null graph")
    rows = g.rows
    best: list[int] = [0]
    best_set: list[int] = [0]

    def colour_sort(p: int) -> tuple[list[int], list[int]]:
        order: list[int] = []
        colours: list[int] = []
        uncoloured = p
        c = 0
        while uncoloured:
            c += 1
            q = uncoloured
            while q:
                low = q & -q
                v = low.bit_length() - 1
                uncoloured &= ~low
                q &= ~low & ~rows[v]
                order.append(v)
                colours.append(c)
        return order, colours

    def expand(size: int, cur: int, p: int) -> None:
        order, colours = colour_sort(p)
        for idx in range(len(order) - 1, -1, -1):
            if size + colours[idx] <= best[0]:
                return
            v = order[idx]
            newp = p & rows[v]
            newcur = cur | (1 << v)
            if newp:
                expand(size + 1, newcur, newp)
            elif size + 1 > best[0]:
                best[0] = size + 1
                best_set[0] = newcur
            p &= ~(1 << v)

    expand(0, 0, g.full)
    cert = CliqueCertificate(tuple(bits(best_set[0])))
    cert.validate(g)
    return best[0], cert


def longest_rooted_path(g: Graph, x: int, y: int,
                        budget: int = DEFAULT_BUDGET) -> tuple[int, PathCertificate | None]:
    """Maximum order (vertex count) of an ``(x, y)``-path; ``(0, None)`` if none."""
    if x == y:
        raise ValueError("roots must be distinct")
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise ValueError("root outside the vertex range")
    rows = g.rows
    n = g.n
    best = 0
    best_path: list[int] | None = None
    count = 0
    path = [x]
    ybit = 1 << y

    def dfs(v: int, visited: int) -> None:
        nonlocal best, best_path, count
        count += 1
        if count > budget:
            raise BudgetExceeded("longest rooted path", budget)
        free = g.full & ~visited
        r = _reach(rows, v, free | (1 << v))
        if not r & ybit:
            return
        if len(path) + r.bit_count() - 1 <= best:
            return
        nbrs = rows[v] & free
        while nbrs:
            low = nbrs & -nbrs
            u = low.bit_length() - 1
            nbrs ^= low
            path.append(u)
            if u == y:
                if len(path) > best:
                    best = len(path)
                    best_path = list(path)
                    if best == n:
                        raise _Stop
            else:
                dfs(u, visited | low)
            path.pop()

    try:
        dfs(x, 1 << x)
    except _Stop:
        pass
    if best_path is None:
        return 0, None
    cert = PathCertificate(tuple(best_path))
    cert.validate(g)
    if cert.vertices[0] != x or cert.vertices[-1] != y:
        raise InvalidCertificate("rooted path has wrong endpoints")
    return best, cert


# crossing pairs -----------------------------------------------------------


@dataclass(frozen=True)
class CrossingPair:
    """1-based positions ``i < j`` on ``P = v_1 ... v_m`` with ``v_i ~ v_m``
    and ``v_j ~ v_1``.  ``kind`` is ``"plain"``, ``"minimal"`` or ``"minimum"``."""

    i: int
    j: int
    kind: str

    @property
    def minimal(self) -> bool:
        return self.kind in ("minimal", "minimum")


def _path_neighbours(g: Graph, p: Sequence[int], end: int) -> set[int]:
    """1-based positions on ``p`` adjacent to ``p[end]``."""
    v = p[end]
    return {k + 1 for k, u in enumerate(p) if u != v and g.has_edge(u, v)}


def crossing_pairs(g: Graph, p: PathCertificate | Sequence[int]) -> list[CrossingPair]:
    verts = tuple(p.vertices if isinstance(p, PathCertificate) else p)
    PathCertificate(verts).validate(g)
    if len(verts) < 3:
        raise ValueError("crossing pairs need a path of order at least 3")
    first = _path_neighbours(g, verts, 0)
    last = _path_neighbours(g, verts, -1)
    either = first | last
    raw = [(i, j) for i in sorted(last) for j in sorted(first) if i < j]
    minimal = {(i, j) for i, j in raw if not any(h in either for h in range(i + 1, j))}
    gap = min((j - i for i, j in minimal), default=None)
    out = []
    for i, j in raw:
        if (i, j) in minimal:
            kind = "minimum" if j - i == gap else "minimal"
        else:
            kind = "plain"
        out.append(CrossingPair(i, j, kind))
    return out


def longest_path_order(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Vertex count of a longest path (1 for a graph with no edges, 0 if empty)."""
    if g.n == 0:
        return 0
    best = 1
    for x in range(g.n):
        for y in range(x + 1, g.n):
            best = max(best, longest_rooted_path(g, x, y, budget)[0])
    return best


def posa_bound(g: Graph, p: PathCertificate | Sequence[int], longest: bool = False,
               budget: int = DEFAULT_BUDGET) -> int:
    """Lower bound on ``c(G)`` from the end-degrees of a path in a 2-connected graph.

    ``min(cap, d1 + dk)`` in general; ``+1`` when the path has no crossing
    pair and the ends share a path-neighbour; ``+2`` with no crossing pair
    and no shared path-neighbour.  Every neighbour of both ends must lie on
    the path.  ``cap`` is the path order, or ``n`` when ``longest`` is set
    (which is then checked against an exhaustive longest-path search).
    Capping by ``n`` for arbitrary end-closed paths is false: in
    K2 ∨ (K3 + 2K1) the path 3-5-2-6-4 has d1 + dk = 8 but c = 6.
    """
    if not is_2connected(g):
        raise ValueError("Pósa bound requires a 2-connected graph")
    verts = tuple(p.vertices if isinstance(p, PathCertificate) else p)
    pairs = crossing_pairs(g, verts)
    on_path = 0
    for v in verts:
        on_path |= 1 << v
    if (g.rows[verts[0]] | g.rows[verts[-1]]) & ~on_path:
        raise ValueError("path ends have neighbours off the path")
    if longest and len(verts) != longest_path_order(g, budget):
        raise ValueError("path is not a longest path")
    first = _path_neighbours(g, verts, 0)
    last = _path_neighbours(g, verts, -1)
    total = len(first) + len(last)
    if not pairs:
        total += 1 if first & last else 2
    return min(g.n if longest else len(verts), total)


def posa_check(g: Graph, p: PathCertificate | Sequence[int], longest: bool = False,
               budget: int = DEFAULT_BUDGET) -> int:
    """``posa_bound`` after asserting it does not exceed the true circumference."""
    bound = posa_bound(g, p, longest, budget)
    if not has_cycle_at_least(g, bound, budget):
        raise AssertionError(f"Pósa bound {bound} exceeds the circumference")
    return bound


def is_edge_maximal(g: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    """Every added non-edge creates a cycle longer than ``c(G)``."""
    c, _ = circumference(g, budget)
    for u, v in g.non_edges():
        if not has_cycle_at_least(g.add_edge(u, v), c + 1, budget):
            return False
    return True
