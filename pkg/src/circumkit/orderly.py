"""Isomorph-free generation of small graphs by canonical vertex augmentation.

A child ``G' = P + v`` of a parent ``P`` is kept only when ``v`` is in the
automorphism orbit of the canonical deletion vertex of ``G'``: among the
deletable vertices (all vertices, or the non-cut vertices for connected
classes) those minimising ``(degree, sorted neighbour degrees)``, the one
with the largest canonical position.  Isomorphic siblings from the same
parent are merged by canonical code.  Every class is therefore produced
exactly once, from exactly one parent, so parents can be processed
independently.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator

from .canon import canonical_search, same_orbit
from .graph import Graph, articulation_points, bits, is_2connected

KINDS = ("all", "connected", "biconnected")
MAX_ENUM_ORDER = 10


class EnumerationCapError(ValueError):
    pass


def _key(rows, v: int) -> tuple:
    return (rows[v].bit_count(), tuple(sorted(rows[u].bit_count() for u in bits(rows[v]))))


def _accept(child: Graph, v: int, eligible: int) -> tuple[bool, int, list[int] | None]:
    """Canonical-deletion test; returns (accepted, canonical code, labelling)."""
    rows = child.rows
    kv = _key(rows, v)
    ties = [v]
    for u in bits(eligible & ~(1 << v)):
        ku = _key(rows, u)
        if ku < kv:
            return False, 0, None
        if ku == kv:
            ties.append(u)
    s = canonical_search(child)
    order = s.best_order
    labeling = [0] * child.n
    for i, u in enumerate(order):
        labeling[u] = i
    if len(ties) > 1:
        w = max(ties, key=lambda u: labeling[u])
        if w != v:
            orbit = {v}
            todo = [v]
            while todo:
                x = todo.pop()
                for p in s.auts:
                    y = p[x]
                    if y not in orbit:
                        orbit.add(y)
                        todo.append(y)
            if w not in orbit and not same_orbit(child, v, w):
                return False, 0, None
    return True, s.best_code, labeling


def _neighbourhoods(parent: Graph, kind: str) -> Iterator[int]:
    """Candidate neighbourhoods of the new vertex, pre-filtered by degree."""
    m = parent.n
    if kind == "all":
        # new vertex must have minimum degree in the child
        deg = parent.degrees()
        for d in range(0, m + 1):
            if any(x < d - 1 for x in deg):
                break
            forced = [u for u in range(m) if deg[u] == d - 1]
            if len(forced) > d:
                continue
            free = [u for u in range(m) if deg[u] >= d]
            base = 0
            for u in forced:
                base |= 1 << u
            for extra in combinations(free, d - len(forced)):
                nb = base
                for u in extra:
                    nb |= 1 << u
                yield nb
    elif kind == "connected":
        for nb in range(1, 1 << m):
            yield nb
    elif kind == "biconnected":
        deg = parent.degrees()
        for d in range(2, m + 1):
            if any(x < d - 1 for x in deg):
                break
            forced = [u for u in range(m) if deg[u] == d - 1]
            if len(forced) > d:
                continue
            free = [u for u in range(m) if deg[u] >= d]
            base = 0
            for u in forced:
                base |= 1 << u
            for extra in combinations(free, d - len(forced)):
                nb = base
                for u in extra:
                    nb |= 1 << u
                yield nb
    else:
        raise ValueError(f"unknown graph class {kind!r}")


def children(parent: Graph, kind: str) -> list[Graph]:
    """Accepted canonical children of ``parent`` in class ``kind``.

    ``parent`` must be a canonical representative of class ``all`` (for
    ``kind="all"``) or ``connected`` (otherwise).
    """
    m = parent.n
    v = m
    seen: set[int] = set()
    out = []
    prow = parent.rows
    for nb in _neighbourhoods(parent, kind):
        rows = [r | ((nb >> u & 1) << v) for u, r in enumerate(prow)]
        rows.append(nb)
        child = Graph._trusted(m + 1, rows)
        if kind == "all":
            eligible = child.full
        elif kind == "biconnected":
            if not is_2connected(child):
                continue
            eligible = child.full
        else:
            eligible = child.full & ~articulation_points(child)
            if not eligible >> v & 1:
                continue
        ok, code, labeling = _accept(child, v, eligible)
        if not ok or code in seen:
            continue
        seen.add(code)
        out.append(child.relabel(labeling))
    return out


@lru_cache(maxsize=None)
def _level(n: int, kind: str) -> tuple[Graph, ...]:
    if n <= 0:
        return ()
    if kind == "biconnected":
        if n < 3:
            return ()
        parents = _level(n - 1, "connected")
    else:
        if n == 1:
            return (Graph._trusted(1, [0]),)
        parents = _level(n - 1, kind)
    out = []
    for p in parents:
        out.extend(children(p, kind))
    return tuple(out)


def parents_for(n: int, kind: str) -> tuple[Graph, ...]:
    """Parent representatives whose children make up level ``n`` of ``kind``."""
    if n <= 1:
        return ()
    return _level(n - 1, "all" if kind == "all" else "connected")


def enumerate_graphs(n: int, kind: str = "all",
                     predicate: Callable[[Graph], bool] | None = None,
                     cap: int = MAX_ENUM_ORDER) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of order ``n``."""
    if kind not in KINDS:
        raise ValueError(f"unknown graph class {kind!r}")
    if n > cap:
        raise EnumerationCapError(f"order {n} exceeds enumeration cap {cap}")
    for g in _level(n, kind):
        if predicate is None or predicate(g):
            yield g
