"""Slow, obviously-correct reference implementations used only by tests.

They work on plain edge sets and adjacency sets, share no code with the
package, and are exponential on purpose.
"""

from __future__ import annotations

from itertools import combinations, permutations


def adjacency(n: int, edges) -> list[set[int]]:
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def circumference(n: int, edges) -> int:
    """Largest k such that some k vertices admit a cyclic order along edges."""
    adj = adjacency(n, edges)
    for k in range(n, 2, -1):
        for subset in combinations(range(n), k):
            first, rest = subset[0], subset[1:]
            for perm in permutations(rest):
                if perm[0] > perm[-1]:
                    continue  # each cycle once per direction
                seq = (first,) + perm
                if all(seq[i + 1] in adj[seq[i]] for i in range(k - 1)) and first in adj[seq[-1]]:
                    return k
    return 0


def clique_number(n: int, edges) -> int:
    adj = adjacency(n, edges)
    best = 1 if n else 0
    for mask in range(1, 1 << n):
        vs = [v for v in range(n) if mask >> v & 1]
        if len(vs) > best and all(b in adj[a] for a, b in combinations(vs, 2)):
            best = len(vs)
    return best


def longest_rooted_path(n: int, edges, x: int, y: int) -> int:
    """Maximum vertex count over all simple x-y paths (0 if none)."""
    adj = adjacency(n, edges)
    best = 0

    def walk(v: int, seen: set[int], length: int) -> None:
        nonlocal best
        if v == y:
            best = max(best, length)
            return
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                walk(u, seen, length + 1)
                seen.remove(u)

    walk(x, {x}, 1)
    return best


def min_degree(n: int, edges) -> int:
    adj = adjacency(n, edges)
    return min(len(a) for a in adj)


def connected(n: int, edges, removed=()) -> bool:
    adj = adjacency(n, edges)
    keep = [v for v in range(n) if v not in removed]
    if not keep:
        return True
    seen = {keep[0]}
    stack = [keep[0]]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen and u not in removed:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(keep)


def two_connected(n: int, edges) -> bool:
    return n >= 3 and connected(n, edges) and all(connected(n, edges, {v}) for v in range(n))


def cut_vertices(n: int, edges) -> set[int]:
    adj = adjacency(n, edges)
    out = set()
    for v in range(n):
        others = [u for u in range(n) if u != v]
        # only count separation of the component containing v
        comp = {v}
        stack = [v]
        while stack:
            a = stack.pop()
            for b in adj[a]:
                if b not in comp:
                    comp.add(b)
                    stack.append(b)
        sub = [u for u in others if u in comp]
        if len(sub) < 2:
            continue
        seen = {sub[0]}
        stack = [sub[0]]
        while stack:
            a = stack.pop()
            for b in adj[a]:
                if b != v and b not in seen:
                    seen.add(b)
                    stack.append(b)
        if len(seen) < len(sub):
            out.add(v)
    return out


def brute_canonical(n: int, edges) -> tuple:
    """Lexicographically smallest sorted edge list over all relabellings."""
    edges = [tuple(e) for e in edges]
    best = None
    for perm in permutations(range(n)):
        code = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or code < best:
            best = code
    return (n, best)


def all_labelled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
