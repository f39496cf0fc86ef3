"""Family recognition and per-graph theorem verdicts.

Verdicts are always computed from the graph's own invariants
``(n, delta, omega, c)``; family parameters only enter through isomorphism
and containment tests against generated instances of the same order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from . import families as fam
from .canon import canonical_graph
from .families import FamilyError, FamilyParams
from .graph import Graph, bits, is_2connected, min_degree
from .graph6 import encode
from .solvers import DEFAULT_BUDGET, BudgetExceeded, circumference, clique_number, longest_rooted_path

THEOREM_FAMILIES = ("H", "Z", "H1a", "H1b", "H2", "H3", "H4", "G1", "G2", "G3", "G4")
# members of the family set whose spanning subgraphs make up the class 𝒢
SCRIPT_F = ("H1a", "H1b", "H2", "G1", "G2", "G3", "G4")

BOUND_MET, CASE_I, CASE_II, VIOLATION = "bound_met", "case_i", "case_ii", "VIOLATION"


class NotTwoConnected(ValueError):
    pass


# parameter enumeration ----------------------------------------------------


def _partitions(total: int, smallest: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of parts >= ``smallest`` summing to ``total``."""
    if total == 0:
        yield ()
        return
    top = total if largest is None else min(largest, total)
    for first in range(top, smallest - 1, -1):
        for rest in _partitions(total - first, smallest, first):
            yield (first,) + rest


def _l_partitions(size: int, delta: int) -> Iterator[tuple[int, ...]]:
    """Branch-count tuples of L(δ) with total order ``size``."""
    if size == 0:
        yield ()
        return

    def rec(left: int, cap: int) -> Iterator[tuple[int, ...]]:
        if left == 0:
            yield ()
            return
        for h in range(cap, 1, -1):
            order = h * (delta - 1) + 1
            if order <= left:
                for rest in rec(left - order, h):
                    yield (h,) + rest

    yield from rec(size, size)


def _g23_params(n: int, family: str) -> list[FamilyParams]:
    out = []
    for delta in range(2, n):
        for omega in range(delta + 1, n + 1):
            for l1 in range(0, n + 1):
                for l2 in range(0, n + 1):
                    if l1 + l2 < 1:
                        continue
                    base = omega + l1 * (delta - 1) + l2 * delta
                    if base > n:
                        break
                    l3_range = [0] if family == "G2" else range(2, n + 1)
                    for l3 in l3_range:
                        fixed = base + (1 + l3 * (delta - 1) if family == "G3" else 0)
                        if fixed > n:
                            break
                        spare = n - fixed
                        for s_total in range(0, spare + 1):
                            for stars in _partitions(s_total, 4):
                                for branches in _l_partitions(spare - s_total, delta):
                                    kw = dict(l1=l1, l2=l2, stars=stars, branches=branches)
                                    if family == "G3":
                                        for glue in ("a1", "a2"):
                                            out.append(fam.params_for("G3", omega=omega, delta=delta,
                                                                      l3=l3, glue=glue, **kw))
                                    else:
                                        out.append(fam.params_for("G2", omega=omega, delta=delta, **kw))
    return [p for p in out if p.n == n]


def enumerate_feasible_params(n: int, family: str) -> list[FamilyParams]:
    """Every parameter tuple of ``family`` that satisfies its constraints at order ``n``.

    For G2/G3 this is constructive feasibility only; the circumference filter
    is applied by ``build`` (see ``family_instances``).
    """
    out: list[FamilyParams] = []
    P = fam.params_for
    if family in ("H", "Z", "H1a", "H1b", "H2", "G1"):
        for delta in range(2, n):
            for omega in range(2, n + 1):
                try:
                    p = P(family, n=n, omega=omega, delta=delta)
                    fam.build(p)
                except FamilyError:
                    continue
                out.append(p)
    elif family == "H3":
        for omega in range(4, n + 1):
            for b1 in range(2, n - omega - 1):
                b2 = n - omega - b1
                if b2 >= 2:
                    out.append(P("H3", omega=omega, b1=b1, b2=b2))
    elif family == "H4":
        for omega in range(4, n + 1):
            for l2 in range(0, (n - omega) // 2 + 1):
                l1 = n - omega - 2 * l2
                if l1 + l2 >= 3:
                    out.append(P("H4", omega=omega, l1=l1, l2=l2))
    elif family == "G4":
        for omega in range(4, n - 2):
            k = n - omega - 3
            for k1 in range(k + 1):
                for k2 in range(k - k1 + 1):
                    out.append(P("G4", omega=omega, clones=(k1, k2, k - k1 - k2)))
    elif family in ("G2", "G3"):
        out = _g23_params(n, family)
    else:
        raise ValueError(f"unknown family {family!r}")
    return out


@dataclass(frozen=True)
class Instance:
    params: FamilyParams
    graph: Graph
    key: str  # graph6 of the canonical relabelling


@lru_cache(maxsize=None)
def family_instances(n: int) -> tuple[Instance, ...]:
    """Every buildable (and, for G2/G3, filter-surviving) family instance of order ``n``."""
    out = []
    for family in THEOREM_FAMILIES:
        for p in enumerate_feasible_params(n, family):
            try:
                g, _ = fam.build(p)
            except FamilyError:
                continue
            out.append(Instance(p, g, encode(canonical_graph(g))))
    return tuple(out)


@lru_cache(maxsize=None)
def _by_key(n: int) -> dict[str, list[Instance]]:
    d: dict[str, list[Instance]] = {}
    for inst in family_instances(n):
        d.setdefault(inst.key, []).append(inst)
    return d


INDEXED = ("H1a", "H1b", "H2")  # written with explicit (n, ω+1, δ)-style indices


@lru_cache(maxsize=None)
def _script_f(n: int, omega: int, delta: int, strict: bool = False) -> tuple[Instance, ...]:
    """Host instances of order n for context (omega, delta), deduplicated.

    H1a/H1b/H2 carry explicit indices and are always built at the context
    (omega, delta).  G1..G4 appear unindexed; by default they range over
    every feasible parameterization of order n, with ``strict=True`` they
    are restricted to the context values too (G4 has no delta).
    """
    seen = set()
    out = []
    for inst in family_instances(n):
        p = inst.params
        if p.family not in SCRIPT_F:
            continue
        if p.family in INDEXED or strict:
            if p.omega != omega or (p.family != "G4" and p.delta != delta):
                continue
        if inst.key in seen:
            continue
        seen.add(inst.key)
        out.append(inst)
    return tuple(out)


# recognition --------------------------------------------------------------


@dataclass
class FamilyMembership:
    matches: list[tuple[str, FamilyParams]] = field(default_factory=list)

    def families(self) -> set[str]:
        return {f for f, _ in self.matches}

    def to_list(self) -> list[dict]:
        return [p.to_dict() for _, p in self.matches]


def match_family(g: Graph, key: str | None = None) -> FamilyMembership:
    """All generated family instances of order ``|g|`` isomorphic to ``g``."""
    if key is None:
        key = encode(canonical_graph(g))
    hits = _by_key(g.n).get(key, [])
    return FamilyMembership([(i.params.family, i.params) for i in hits])


def find_spanning_embedding(g: Graph, host: Graph, budget: int = DEFAULT_BUDGET) -> list[int] | None:
    """Bijection ``phi`` mapping every edge of ``g`` onto an edge of ``host``."""
    n = g.n
    if host.n != n:
        return None
    if g.num_edges() > host.num_edges():
        return None
    dg = g.degrees()
    dh = host.degrees()
    if any(a > b for a, b in zip(sorted(dg, reverse=True), sorted(dh, reverse=True))):
        return None
    at_least = [0] * (n + 1)
    for d in range(n + 1):
        m = 0
        for v in range(n):
            if dh[v] >= d:
                m |= 1 << v
        at_least[d] = m
    order: list[int] = []
    placed = 0
    while len(order) < n:
        best = max((v for v in range(n) if not placed >> v & 1),
                   key=lambda v: ((g.rows[v] & placed).bit_count(), dg[v], -v))
        order.append(best)
        placed |= 1 << best
    grows, hrows = g.rows, host.rows
    phi = [-1] * n
    count = 0

    def rec(k: int, used: int) -> bool:
        nonlocal count
        if k == n:
            return True
        count += 1
        if count > budget:
            raise BudgetExceeded("spanning embedding", budget)
        v = order[k]
        cand = at_least[dg[v]] & ~used
        for u in bits(grows[v]):
            if phi[u] >= 0:
                cand &= hrows[phi[u]]
        while cand:
            low = cand & -cand
            phi[v] = low.bit_length() - 1
            if rec(k + 1, used | low):
                return True
            cand ^= low
        phi[v] = -1
        return False

    if not rec(0, 0):
        return None
    return phi


@dataclass
class ScriptGWitness:
    params: FamilyParams
    injection: list[int]


def in_script_G(g: Graph, delta: int | None = None, omega: int | None = None,
                key: str | None = None, strict: bool = False) -> tuple[bool, ScriptGWitness | None]:
    """Membership in 𝒢 for the context ``(delta, omega)`` (default: ``g``'s own).

    True iff ``g`` has exactly that minimum degree and clique number, is a
    spanning subgraph of some host of order n (see ``_script_f`` for which
    parameterizations count), and is isomorphic to neither H(n, ω, δ) nor
    Z(n, ω, δ).
    """
    if not is_2connected(g):
        raise NotTwoConnected("graph is not 2-connected")
    own_delta = min_degree(g)
    own_omega = clique_number(g)[0]
    delta = own_delta if delta is None else delta
    omega = own_omega if omega is None else omega
    if (own_delta, own_omega) != (delta, omega):
        return False, None
    if key is None:
        key = encode(canonical_graph(g))
    for inst in _by_key(g.n).get(key, []):
        p = inst.params
        if p.family in ("H", "Z") and (p.omega, p.delta) == (omega, delta):
            return False, None
    for inst in _script_f(g.n, omega, delta, strict):
        phi = find_spanning_embedding(g, inst.graph)
        if phi is not None:
            return True, ScriptGWitness(inst.params, phi)
    return False, None


# theorem verdicts ---------------------------------------------------------


@dataclass
class TheoremVerdict:
    case: str
    n: int
    delta: int
    omega: int
    c: int
    matches: FamilyMembership
    witness: ScriptGWitness | None = None

    def to_dict(self) -> dict:
        d = {"case": self.case, "n": self.n, "delta": self.delta, "omega": self.omega,
             "c": self.c, "matches": self.matches.to_list()}
        if self.witness is not None:
            d["witness"] = {"host": self.witness.params.to_dict(), "injection": self.witness.injection}
        return d


@dataclass(frozen=True)
class Invariants:
    n: int
    delta: int
    omega: int
    c: int


def invariants(g: Graph, budget: int = DEFAULT_BUDGET) -> Invariants:
    return Invariants(g.n, min_degree(g), clique_number(g)[0], circumference(g, budget)[0])


def _require_2conn(g: Graph) -> None:
    if not is_2connected(g):
        raise NotTwoConnected("graph is not 2-connected")


def _matches_hz(m: FamilyMembership, inv: Invariants) -> bool:
    return any(f in ("H", "Z") and (p.omega, p.delta) == (inv.omega, inv.delta) for f, p in m.matches)


def check_theorem_main(g: Graph, inv: Invariants | None = None, key: str | None = None,
                       budget: int = DEFAULT_BUDGET, strict: bool = False) -> TheoremVerdict:
    """Trichotomy: bound met, case (i) with g in {H, Z}, or case (ii) with g in
    {H3, H4} ∪ 𝒢; anything else is a VIOLATION."""
    _require_2conn(g)
    inv = inv or invariants(g, budget)
    if key is None:
        key = encode(canonical_graph(g))
    m = match_family(g, key)
    n, d, w, c = inv.n, inv.delta, inv.omega, inv.c

    def verdict(case: str, witness: ScriptGWitness | None = None) -> TheoremVerdict:
        return TheoremVerdict(case, n, d, w, c, m, witness)

    if c >= min(n, w + d + 1):
        return verdict(BOUND_MET)
    if c == w + d - 1 and _matches_hz(m, inv):
        return verdict(CASE_I)
    if c == w + d:
        for f, p in m.matches:
            if (f == "H3" and d == 2 or f == "H4" and d == 3) and p.omega == w:
                return verdict(CASE_II)
        ok, wit = in_script_G(g, d, w, key, strict)
        if ok:
            return verdict(CASE_II, wit)
    return verdict(VIOLATION)


def check_theorem_yuan(g: Graph, inv: Invariants | None = None, key: str | None = None,
                       budget: int = DEFAULT_BUDGET) -> TheoremVerdict:
    """Dichotomy: c >= min(n, ω+δ), or g is H(n, ω, δ) or Z(n, ω, δ) (tagged ``case_i``)."""
    _require_2conn(g)
    inv = inv or invariants(g, budget)
    if key is None:
        key = encode(canonical_graph(g))
    m = match_family(g, key)
    if inv.c >= min(inv.n, inv.omega + inv.delta):
        case = BOUND_MET
    elif _matches_hz(m, inv):
        case = CASE_I
    else:
        case = VIOLATION
    return TheoremVerdict(case, inv.n, inv.delta, inv.omega, inv.c, m)


# rooted-path lemma --------------------------------------------------------

PATH_FOUND, EXC_LT, EXC_SLT = "path_found", "exceptional_LT", "exceptional_SLT"


class PreconditionError(ValueError):
    pass


@dataclass
class LemmaVerdict:
    kind: str
    order: int
    path: tuple[int, ...] | None
    components: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)
    reason: str = ""

    def to_dict(self) -> dict:
        return {"kind": self.kind, "order": self.order,
                "path": list(self.path) if self.path else None,
                "components": [[k, list(vs)] for k, vs in self.components],
                "reason": self.reason}


def rooted_hypotheses(g: Graph, x: int, y: int, delta: int) -> str | None:
    """Why ``(g, x, y)`` fails the rooted-lemma hypotheses, or ``None``."""
    if delta < 2:
        return "delta >= 2"
    if x == y:
        return "roots must differ"
    if g.n < delta + 3:
        return "order >= delta + 3"
    if not is_2connected(g.add_edge(x, y) if not g.has_edge(x, y) else g):
        return "G + xy must be 2-connected"
    for v in range(g.n):
        if v not in (x, y) and g.degree(v) < delta:
            return "minimum degree off the roots >= delta"
    return None


def _l_component(g: Graph, comp: int, delta: int) -> int | None:
    """Cut-vertex of ``comp`` if G[comp] is K_1 ∨ h K_{δ−1} with h >= 2."""
    size = comp.bit_count()
    if (size - 1) % (delta - 1) or (size - 1) // (delta - 1) < 2:
        return None
    for a in bits(comp):
        rest = comp & ~(1 << a)
        if g.rows[a] & rest != rest:
            continue
        blocks = 0
        left = rest
        ok = True
        while left:
            v = (left & -left).bit_length() - 1
            # component of v inside rest
            seen = 1 << v
            frontier = seen
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= g.rows[u]
                nxt &= rest & ~seen
                seen |= nxt
                frontier = nxt
            left &= ~seen
            if seen.bit_count() != delta - 1 or any((g.rows[u] | 1 << u) & seen != seen for u in bits(seen)):
                ok = False
                break
            blocks += 1
        if ok and blocks >= 2:
            return a
    return None


def _is_star(g: Graph, comp: int) -> bool:
    size = comp.bit_count()
    if size < 4:
        return False
    edges = sum((g.rows[v] & comp).bit_count() for v in bits(comp)) // 2
    if edges != size - 1:
        return False
    return any(g.rows[v] & comp == comp & ~(1 << v) for v in bits(comp))


def check_lemma_rooted(g: Graph, x: int, y: int, delta: int,
                       budget: int = DEFAULT_BUDGET) -> LemmaVerdict:
    """Either an (x, y)-path of order >= δ+3, or G − {x, y} decomposes as
    L(δ) + T(δ) (or S + L(3) + T(3) when δ = 3) with the cut-vertex
    attachment rule on every L component; otherwise VIOLATION."""
    why = rooted_hypotheses(g, x, y, delta)
    if why is not None:
        raise PreconditionError(why)
    order, cert = longest_rooted_path(g, x, y, budget)
    path = cert.vertices if cert else None
    if order >= delta + 3:
        return LemmaVerdict(PATH_FOUND, order, path)
    rest = g.full & ~(1 << x) & ~(1 << y)
    from .graph import components
    comps = components(g, rest)
    labelled: list[tuple[str, tuple[int, ...]]] = []
    has_star = False
    for comp in comps:
        verts = tuple(bits(comp))
        size = len(verts)
        if size in (delta - 1, delta):
            labelled.append(("T", verts))
            continue
        a = _l_component(g, comp, delta)
        if a is not None:
            inner = comp & ~(1 << a)
            xs = g.rows[x] & inner
            ys = g.rows[y] & inner
            if xs and ys:
                return LemmaVerdict(VIOLATION, order, path, labelled,
                                    f"L component {verts}: both roots see non-cut vertices")
            labelled.append(("L", verts))
            continue
        if delta == 3 and _is_star(g, comp):
            has_star = True
            labelled.append(("S", verts))
            continue
        return LemmaVerdict(VIOLATION, order, path, labelled, f"component {verts} fits no block type")
    return LemmaVerdict(EXC_SLT if has_star else EXC_LT, order, path, labelled)
