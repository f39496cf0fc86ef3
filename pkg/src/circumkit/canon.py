"""Canonical labelling by colour refinement plus individualisation search.

The search tree is the usual one: refine the current ordered partition to an
equitable one, pick the first smallest non-singleton cell, and branch on each
of its vertices.  Every leaf is a discrete partition, i.e. a vertex ordering;
the canonical form is the leaf whose relabelled adjacency code is largest.
Leaves with equal codes yield automorphisms, which prune sibling branches in
the same orbit of the pointwise stabiliser of the current prefix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, bits
from . import graph6


@dataclass(frozen=True)
class CanonicalForm:
    """``key`` is the graph6 encoding of the canonically relabelled graph;
    ``labeling[v]`` is the canonical position of original vertex ``v``."""

    key: bytes
    labeling: tuple[int, ...]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)


def refine(rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Split pieces are ordered by neighbour count, so the result is
    label-invariant given a label-invariant input partition.
    """
    n = len(rows)
    queue = []
    for c in cells:
        m = 0
        for v in c:
            m |= 1 << v
        queue.append(m)
    qi = 0
    ncells = len(cells)
    while qi < len(queue) and ncells < n:
        w = queue[qi]
        qi += 1
        new = []
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            groups: dict[int, list[int]] = {}
            for v in c:
                k = (rows[v] & w).bit_count()
                g = groups.get(k)
                if g is None:
                    groups[k] = [v]
                else:
                    g.append(v)
            if len(groups) == 1:
                new.append(c)
                continue
            for k in sorted(groups):
                piece = groups[k]
                new.append(piece)
                m = 0
                for v in piece:
                    m |= 1 << v
                queue.append(m)
            ncells += len(groups) - 1
        cells = new
    return cells


def _leaf_code(rows: Sequence[int], order: list[int]) -> int:
    n = len(order)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    code = 0
    for i, v in enumerate(order):
        r = 0
        for u in bits(rows[v]):
            r |= 1 << pos[u]
        code = (code << n) | r
    return code


class _Search:
    def __init__(self, rows: Sequence[int]) -> None:
        self.rows = rows
        self.best_code = -1
        self.best_order: list[int] | None = None
        self.first_code = -1
        self.first_order: list[int] | None = None
        self.auts: list[tuple[int, ...]] = []

    def _record_aut(self, src: list[int], dst: list[int]) -> None:
        perm = [0] * len(src)
        for a, b in zip(src, dst):
            perm[a] = b
        t = tuple(perm)
        if t != tuple(range(len(t))):
            self.auts.append(t)

    def _orbit(self, v: int, fixed: list[int]) -> set[int]:
        gens = [p for p in self.auts if all(p[x] == x for x in fixed)]
        orbit = {v}
        todo = [v]
        while todo:
            x = todo.pop()
            for p in gens:
                y = p[x]
                if y not in orbit:
                    orbit.add(y)
                    todo.append(y)
        return orbit

    def run(self, cells: list[list[int]], seq: list[int]) -> None:
        n = len(self.rows)
        if len(cells) == n:
            order = [c[0] for c in cells]
            code = _leaf_code(self.rows, order)
            if self.first_order is None:
                self.first_order, self.first_code = order, code
            elif code == self.first_code:
                self._record_aut(order, self.first_order)
            if code > self.best_code:
                self.best_code, self.best_order = code, order
            elif code == self.best_code and order is not self.best_order:
                self._record_aut(order, self.best_order)
            return
        t = -1
        size = n + 1
        for i, c in enumerate(cells):
            if 1 < len(c) < size:
                t, size = i, len(c)
        target = cells[t]
        tried: list[int] = []
        for v in target:
            if tried and self.auts:
                if self._orbit(v, seq) & set(tried):
                    continue
            rest = [u for u in target if u != v]
            child = cells[:t] + [[v], rest] + cells[t + 1:]
            self.run(refine(self.rows, child), seq + [v])
            tried.append(v)


def canonical_search(g: Graph, colors: Sequence[Sequence[int]] | None = None) -> _Search:
    """Run the search; ``colors`` is an optional ordered initial partition."""
    cells = [list(c) for c in colors] if colors is not None else [list(range(g.n))]
    cells = [c for c in cells if c]
    s = _Search(g.rows)
    if g.n == 0:
        s.best_order, s.best_code = [], 0
        return s
    s.run(refine(g.rows, cells), [])
    return s


def canonical_order(g: Graph, colors: Sequence[Sequence[int]] | None = None) -> list[int]:
    """Vertices listed in canonical position order."""
    return canonical_search(g, colors).best_order


def canonical_form(g: Graph) -> CanonicalForm:
    order = canonical_order(g)
    labeling = [0] * g.n
    for i, v in enumerate(order):
        labeling[v] = i
    return CanonicalForm(graph6.encode(g.relabel(labeling)).encode("ascii"), tuple(labeling))


def canonical_graph(g: Graph) -> Graph:
    """The canonical relabelling of ``g`` (equal for isomorphic inputs)."""
    order = canonical_order(g)
    labeling = [0] * g.n
    for i, v in enumerate(order):
        labeling[v] = i
    return g.relabel(labeling)


def canonical_key(g: Graph, colors: Sequence[Sequence[int]] | None = None) -> tuple[int, int]:
    """Cheap hashable invariant: equal iff isomorphic (respecting ``colors``)."""
    s = canonical_search(g, colors)
    return g.n, s.best_code


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_key(g) == canonical_key(h)


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """A bijection ``phi`` with ``phi[v]`` the image in ``h`` of ``g``'s vertex ``v``."""
    if g.n != h.n:
        return None
    sg, sh = canonical_search(g), canonical_search(h)
    if sg.best_code != sh.best_code:
        return None
    phi = [0] * g.n
    for a, b in zip(sg.best_order, sh.best_order):
        phi[a] = b
    return phi


def same_orbit(g: Graph, v: int, w: int) -> bool:
    """Whether some automorphism of ``g`` maps ``v`` to ``w``."""
    if v == w:
        return True
    rest_v = [u for u in range(g.n) if u != v]
    rest_w = [u for u in range(g.n) if u != w]
    return canonical_search(g, [[v], rest_v]).best_code == canonical_search(g, [[w], rest_w]).best_code
