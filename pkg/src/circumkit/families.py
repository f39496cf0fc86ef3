"""Generators for the named extremal constructions.

Each ``make_*`` returns ``(graph, parts)`` where ``parts`` names the blocks of
the construction.  Vertex layout is fixed per family: apex vertices first,
then the clique core, then the appendages in the order they are listed in the
family's definition.  Integer constraints are checked up front and a
violation raises ``FamilyError`` naming the failed inequality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .graph import Graph, bits, complete, empty, join, union_all

FAMILIES = ("H", "Z", "H1a", "H1b", "H2", "H3", "H4", "G1", "G2", "G3", "G4",
            "L", "T", "StarUnion")


class FamilyError(ValueError):
    """Parameters violate a family's defining constraints."""


class FilterRejected(FamilyError):
    """The graph was built but fails the non-hamiltonian / circumference filter."""


@dataclass(frozen=True)
class FamilyParams:
    family: str
    n: int
    omega: int
    delta: int
    extras: tuple[tuple[str, Any], ...] = ()

    def get(self, key: str, default: Any = None) -> Any:
        for k, v in self.extras:
            if k == key:
                return v
        return default

    def to_dict(self) -> dict:
        d: dict[str, Any] = {"family": self.family, "n": self.n, "omega": self.omega, "delta": self.delta}
        for k, v in self.extras:
            d[k] = list(v) if isinstance(v, tuple) else v
        return d

    @classmethod
    def from_dict(cls, d: dict) -> FamilyParams:
        d = dict(d)
        fam = d.pop("family")
        n, omega, delta = d.pop("n"), d.pop("omega"), d.pop("delta")
        extras = tuple(sorted((k, tuple(v) if isinstance(v, list) else v) for k, v in d.items()))
        return cls(fam, n, omega, delta, extras)

    def label(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in self.to_dict().items() if k != "family")
        return f"{self.family}({inner})"


@dataclass
class LabeledParts:
    """Named vertex blocks partitioning V(G), plus distinguished vertices."""

    parts: dict[str, tuple[int, ...]] = field(default_factory=dict)
    marks: dict[str, int] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def validate(self, n: int) -> None:
        seen: list[int] = []
        for vs in self.parts.values():
            seen.extend(vs)
        if sorted(seen) != list(range(n)):
            raise AssertionError("parts do not partition the vertex set")
        for name, v in self.marks.items():
            if not 0 <= v < n:
                raise AssertionError(f"mark {name} outside the vertex range")

    def to_dict(self) -> dict:
        return {"parts": {k: list(v) for k, v in self.parts.items()},
                "marks": dict(self.marks), "notes": list(self.notes)}


class _Layout:
    """Accumulates vertex blocks and edges for a construction."""

    def __init__(self) -> None:
        self.n = 0
        self.edges: set[tuple[int, int]] = set()
        self.parts = LabeledParts()

    def block(self, name: str, size: int, clique: bool) -> tuple[int, ...]:
        vs = tuple(range(self.n, self.n + size))
        self.n += size
        self.parts.parts[name] = vs
        if clique:
            for i, a in enumerate(vs):
                for b in vs[i + 1:]:
                    self.edge(a, b)
        return vs

    def edge(self, a: int, b: int) -> None:
        self.edges.add((min(a, b), max(a, b)))

    def connect(self, xs: Sequence[int], ys: Sequence[int]) -> None:
        for a in xs:
            for b in ys:
                if a != b:
                    self.edge(a, b)

    def build(self) -> tuple[Graph, LabeledParts]:
        g = Graph.from_edges(self.n, sorted(self.edges))
        self.parts.validate(g.n)
        return g, self.parts


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise FamilyError(f"constraint violated: {what}")


def _joined_core(lay: _Layout, apex_size: int, core_size: int,
                 blocks: Sequence[tuple[str, int, bool]]) -> None:
    """K_apex ∨ (K_core + blocks); each block is (name, size, is_clique)."""
    apex = lay.block("apex", apex_size, True)
    core = lay.block("core", core_size, True)
    lay.connect(apex, core)
    for name, size, clique in blocks:
        vs = lay.block(name, size, clique)
        lay.connect(apex, vs)


# H, Z and the Notation-1 variants -----------------------------------------


def make_H(n: int, omega: int, delta: int) -> tuple[Graph, LabeledParts]:
    """K_δ ∨ (K_{ω−δ} + K̄_{n−ω}); layout: apex, core, independent."""
    _require(delta >= 1, "delta >= 1")
    _require(n >= omega + delta, "n >= omega + delta")
    _require(omega + delta > 2 * delta, "omega + delta > 2*delta")
    lay = _Layout()
    _joined_core(lay, delta, omega - delta, [("independent", n - omega, False)])
    return lay.build()


def _block_count(n: int, fixed: int, delta: int) -> int:
    _require(delta >= 2, "delta >= 2")
    rest = n - fixed
    if rest % (delta - 1):
        raise FamilyError(f"l non-integral: (n - {fixed}) / (delta - 1) = {rest}/{delta - 1}")
    l = rest // (delta - 1)
    _require(l >= 2, f"l >= 2 (got l={l})")
    return l


def make_Z(n: int, omega: int, delta: int) -> tuple[Graph, LabeledParts]:
    """K_2 ∨ (K_{ω−2} + l K_{δ−1}) with l derived from n = ω + l(δ−1)."""
    _require(omega > delta, "omega > delta")
    _require(omega >= 2, "omega >= 2")
    l = _block_count(n, omega, delta)
    lay = _Layout()
    _joined_core(lay, 2, omega - 2, [(f"block{i + 1}", delta - 1, True) for i in range(l)])
    g, parts = lay.build()
    parts.notes.append(f"l={l}")
    return g, parts


def make_H1a(n: int, omega: int, delta: int) -> tuple[Graph, LabeledParts]:
    """H_1(n, ω+1, δ) = K_δ ∨ (K_{ω+1−δ} + K̄_{n−ω−1})."""
    _require(delta >= 1, "delta >= 1")
    _require(n >= omega + delta + 1, "n >= omega + delta + 1")
    _require(omega + delta + 1 >= 2 * delta + 1, "omega + delta + 1 >= 2*delta + 1")
    lay = _Layout()
    _joined_core(lay, delta, omega + 1 - delta, [("independent", n - omega - 1, False)])
    return lay.build()


def make_H1b(n: int, omega: int, delta: int) -> tuple[Graph, LabeledParts]:
    """H_1(n, ω, δ+1) = K_{δ+1} ∨ (K_{ω−1−δ} + K̄_{n−ω})."""
    _require(delta >= 1, "delta >= 1")
    _require(n >= omega + delta + 1, "n >= omega + delta + 1")
    _require(omega + delta + 1 >= 2 * delta + 3, "omega + delta + 1 >= 2*delta + 3")
    lay = _Layout()
    _joined_core(lay, delta + 1, omega - 1 - delta, [("independent", n - omega, False)])
    return lay.build()


def make_H2(n: int, omega: int, delta: int) -> tuple[Graph, LabeledParts]:
    """H_2(n, ω+1, δ) = K_2 ∨ (K_{ω−1} + l K_{δ−1}) with n = ω + 1 + l(δ−1)."""
    _require(omega >= delta, "omega >= delta")
    l = _block_count(n, omega + 1, delta)
    lay = _Layout()
    _joined_core(lay, 2, omega - 1, [(f"block{i + 1}", delta - 1, True) for i in range(l)])
    g, parts = lay.build()
    parts.notes.append(f"l={l}")
    return g, parts


# H3, H4 -------------------------------------------------------------------


def make_H3(n: int, omega: int, b1: int, b2: int) -> tuple[Graph, LabeledParts]:
    """K_ω on A with B1 joined to {v1, v2} ⊆ A and B2 joined to {v3, v4} ⊆ A.

    Layout: A = 0..ω−1 with v1..v4 = 0..3, then B1, then B2.
    """
    _require(omega >= 4, "omega >= 4")
    _require(min(b1, b2) >= 2, "min(b1, b2) >= 2")
    _require(n == omega + b1 + b2, "n = omega + b1 + b2")
    lay = _Layout()
    a = lay.block("A", omega, True)
    bb1 = lay.block("B1", b1, False)
    bb2 = lay.block("B2", b2, False)
    lay.connect(a[0:2], bb1)
    lay.connect(a[2:4], bb2)
    for i in range(4):
        lay.parts.marks[f"v{i + 1}"] = a[i]
    return lay.build()


def make_H4(n: int, omega: int, l1: int, l2: int) -> tuple[Graph, LabeledParts]:
    """R_1 = C_1 ∨ (K_{ω−3} + K̄_{l1}) with C_1 = K_3, plus l2 copies of K_2
    each joined to the same two vertices c1, c2 of C_1.

    Layout: C1 (c1, c2, c3), core K_{ω−3}, the l1 independent vertices, then
    the l2 pairs.  With l1 = 0 or l2 = 0 the graph coincides with Z(n, ω, 3)
    or H(n, ω, 3); this is recorded in ``parts.notes``.
    """
    _require(omega > 3, "omega > 3")
    _require(l1 >= 0 and l2 >= 0, "l1, l2 >= 0")
    _require(l1 + l2 >= 3, "l1 + l2 >= 3")
    _require(n == omega + l1 + 2 * l2, "n = omega + l1 + 2*l2")
    lay = _Layout()
    c = lay.block("C1", 3, True)
    core = lay.block("core", omega - 3, True)
    lay.connect(c, core)
    ind = lay.block("independent", l1, False)
    lay.connect(c, ind)
    for i in range(l2):
        pair = lay.block(f"pair{i + 1}", 2, True)
        lay.connect(c[:2], pair)
    for i, v in enumerate(c):
        lay.parts.marks[f"c{i + 1}"] = v
    g, parts = lay.build()
    if l2 == 0:
        parts.notes.append("degenerate: l2=0, graph is H(n, omega, 3)")
    if l1 == 0:
        parts.notes.append("degenerate: l1=0, graph is Z(n, omega, 3)")
    if n == omega + 3:
        parts.notes.append("boundary: n = omega + 3")
    return g, parts


# G1 -----------------------------------------------------------------------


def make_G1(n: int, omega: int, delta: int) -> tuple[Graph, LabeledParts]:
    """K_δ ∨ (K_{ω−δ} + K_2 + K̄_{n−ω−2}).

    For ω = δ+1 the apex together with the K_2 is a clique of order δ+2, so
    the clique number is ω+1 there; noted in ``parts.notes``.
    """
    _require(delta >= 1, "delta >= 1")
    _require(n >= omega + delta + 1, "n >= omega + delta + 1")
    _require(omega + delta + 1 > 2 * delta + 1, "omega + delta + 1 > 2*delta + 1")
    lay = _Layout()
    _joined_core(lay, delta, omega - delta,
                 [("pair", 2, True), ("independent", n - omega - 2, False)])
    g, parts = lay.build()
    if omega == delta + 1:
        parts.notes.append("degenerate: omega = delta + 1, apex plus pair is a larger clique")
    return g, parts


# building blocks ----------------------------------------------------------


def make_L(delta: int, branches: Sequence[int]) -> Graph:
    """L(δ): disjoint union of K_1 ∨ h_i K_{δ−1}; each component lists its apex first."""
    return _L_parts(delta, branches)[0]


def _L_parts(delta: int, branches: Sequence[int]) -> tuple[Graph, LabeledParts]:
    _require(delta >= 2, "delta >= 2")
    for h in branches:
        _require(h >= 2, f"h_i >= 2 (got {h})")
    lay = _Layout()
    for i, h in enumerate(branches):
        apex = lay.block(f"L{i + 1}.apex", 1, False)
        lay.parts.marks[f"L{i + 1}.cut"] = apex[0]
        for j in range(h):
            blk = lay.block(f"L{i + 1}.block{j + 1}", delta - 1, True)
            lay.connect(apex, blk)
    return lay.build()


def make_T(delta: int, orders: Sequence[int]) -> Graph:
    """T(δ) realised with complete components K_δ or K_{δ−1}."""
    for o in orders:
        _require(o in (delta - 1, delta) and o >= 1, f"T component order in {{delta-1, delta}} (got {o})")
    return union_all(complete(o) for o in orders)


def make_stars(orders: Sequence[int]) -> Graph:
    """Disjoint union of stars K_{1, o−1}, centre listed first."""
    for o in orders:
        _require(o >= 4, f"star order >= 4 (got {o})")
    return union_all(join(complete(1), empty(o - 1)) for o in orders)


# G2, G3 -------------------------------------------------------------------


def _t3_layout(omega: int, delta: int, l1: int, l2: int, stars: Sequence[int],
               branches: Sequence[int]) -> _Layout:
    lay = _Layout()
    a = lay.block("A1", 2, True)
    lay.parts.marks["a1"], lay.parts.marks["a2"] = a
    core = lay.block("core", omega - 2, True)
    lay.connect(a, core)
    for i in range(l1):
        lay.connect(a, lay.block(f"small{i + 1}", delta - 1, True))
    for i in range(l2):
        lay.connect(a, lay.block(f"large{i + 1}", delta, True))
    for i, o in enumerate(stars):
        centre = lay.block(f"S{i + 1}.centre", 1, False)
        leaves = lay.block(f"S{i + 1}.leaves", o - 1, False)
        lay.connect(centre, leaves)
        lay.connect(a, centre + leaves)
    for i, h in enumerate(branches):
        apex = lay.block(f"L{i + 1}.apex", 1, False)
        lay.parts.marks[f"L{i + 1}.cut"] = apex[0]
        lay.connect([a[0]], apex)
        lay.connect([a[1]], apex)
        for j in range(h):
            blk = lay.block(f"L{i + 1}.block{j + 1}", delta - 1, True)
            lay.connect(apex, blk)
            lay.connect([a[0]], blk)
    return lay


def _g23_checks(omega: int, delta: int, l1: int, l2: int, stars: Sequence[int],
                branches: Sequence[int]) -> None:
    _require(delta >= 2, "delta >= 2")
    _require(omega > delta, "omega > delta")
    _require(l1 >= 0 and l2 >= 0, "l1, l2 >= 0")
    _require(l1 + l2 >= 1, "l1 + l2 >= 1")
    for o in stars:
        _require(o >= 4, f"star order >= 4 (got {o})")
    for h in branches:
        _require(h >= 2, f"h_i >= 2 (got {h})")


def g2_order(omega: int, delta: int, l1: int, l2: int, stars: Sequence[int],
             branches: Sequence[int]) -> int:
    return omega + l1 * (delta - 1) + l2 * delta + sum(stars) + sum(h * (delta - 1) + 1 for h in branches)


def g3_order(omega: int, delta: int, l1: int, l2: int, l3: int, stars: Sequence[int],
             branches: Sequence[int]) -> int:
    return g2_order(omega, delta, l1, l2, stars, branches) + 1 + l3 * (delta - 1)


def _apply_filter(g: Graph, omega: int, delta: int, check: bool) -> None:
    if not check:
        return
    from .solvers import circumference

    c, _ = circumference(g)
    if c == g.n:
        raise FilterRejected("filter: T3 is hamiltonian")
    if c != omega + delta:
        raise FilterRejected(f"filter: c(T3) != omega+delta ({c} != {omega + delta})")


def _g23_notes(parts: LabeledParts, omega: int, delta: int, l1: int, l2: int,
               stars: Sequence[int], branches: Sequence[int]) -> None:
    if l2 and omega == delta + 1:
        parts.notes.append("degenerate: A1 joined to a K_delta block is a clique of order omega+1")
    if stars and omega < 4:
        parts.notes.append("degenerate: A1 joined to a star edge is a K4")
    if not l1 and not stars and not branches:
        parts.notes.append("degenerate: no K_{delta-1} block, minimum degree exceeds delta")


def make_G2(omega: int, delta: int, l1: int, l2: int, stars: Sequence[int] = (),
            branches: Sequence[int] = (), check: bool = True) -> tuple[Graph, LabeledParts]:
    """T_3: A_1 ∨ (K_{ω−2} + l1 K_{δ−1} + l2 K_δ + S), with a1 joined to all of
    L(δ) and a2 joined to each L-component's cut-vertex.

    Kept only if T_3 is non-hamiltonian with circumference ω+δ (``FilterRejected``
    otherwise; ``check=False`` skips the solver call).
    Layout: a1, a2, core, the l1 blocks, the l2 blocks, stars, L components.
    """
    _g23_checks(omega, delta, l1, l2, stars, branches)
    g, parts = _t3_layout(omega, delta, l1, l2, stars, branches).build()
    _apply_filter(g, omega, delta, check)
    _g23_notes(parts, omega, delta, l1, l2, stars, branches)
    return g, parts


def make_G3(omega: int, delta: int, l1: int, l2: int, l3: int, stars: Sequence[int] = (),
            branches: Sequence[int] = (), glue: str = "a1",
            check: bool = True) -> tuple[Graph, LabeledParts]:
    """T_3 and T_2 = A_2 ∨ l3 K_{δ−1} glued at one vertex of A_1 and one of
    A_2, plus an edge between the two remaining apex vertices.

    ``glue`` picks which vertex of A_1 (``"a1"`` or ``"a2"``) is identified.
    Layout: T_3 as in ``make_G2`` (the glued vertex keeps its index), then
    the other vertex of A_2, then the l3 blocks.  The order is
    |T_3| + 1 + l3(δ−1).
    """
    _g23_checks(omega, delta, l1, l2, stars, branches)
    _require(l3 >= 2, "l3 >= 2")
    _require(glue in ("a1", "a2"), "glue in {a1, a2}")
    t3, _ = _t3_layout(omega, delta, l1, l2, stars, branches).build()
    _apply_filter(t3, omega, delta, check)
    lay = _t3_layout(omega, delta, l1, l2, stars, branches)
    v = lay.parts.marks[glue]
    other = lay.parts.marks["a2" if glue == "a1" else "a1"]
    a2p = lay.block("A2.other", 1, False)[0]
    lay.edge(v, a2p)
    lay.edge(other, a2p)
    for i in range(l3):
        blk = lay.block(f"T2.block{i + 1}", delta - 1, True)
        lay.connect([v, a2p], blk)
    lay.parts.marks["v"] = v
    lay.parts.marks["a2'"] = a2p
    g, parts = lay.build()
    _g23_notes(parts, omega, delta, l1, l2, stars, branches)
    return g, parts


# G4 -----------------------------------------------------------------------


def make_G4(n: int, omega: int, clones: Sequence[int] = (0, 0, 0)) -> tuple[Graph, LabeledParts]:
    """F_2 plus twins of c1, c2, c3 (``clones[i]`` copies of c_{i+1}).

    F_1: A (ω−2) ∪ B (2) is K_ω, C (3) independent, [B, C] complete.
    F_2 adds a1c1, a2c2 and removes b2c1, b2c2.
    Layout: A (a1, a2 first), B (b1, b2), C (c1, c2, c3), then the twins.
    """
    _require(omega >= 4, "omega >= 4")
    _require(n >= omega + 3, "n >= omega + 3")
    clones = tuple(clones)
    _require(len(clones) == 3 and min(clones) >= 0, "three non-negative clone counts")
    _require(sum(clones) == n - omega - 3, "clone counts sum to n - omega - 3")
    lay = _Layout()
    a = lay.block("A", omega - 2, False)
    b = lay.block("B", 2, False)
    lay.parts.parts.pop("A")
    lay.parts.parts.pop("B")
    ab = a + b
    for i, x in enumerate(ab):
        for y in ab[i + 1:]:
            lay.edge(x, y)
    lay.parts.parts["A"] = a
    lay.parts.parts["B"] = b
    c = lay.block("C", 3, False)
    nbhd = {
        0: [b[0], a[0]],
        1: [b[0], a[1]],
        2: [b[0], b[1]],
    }
    for i in range(3):
        lay.connect([c[i]], nbhd[i])
    for i, k in enumerate(clones):
        if k:
            twins = lay.block(f"twins_c{i + 1}", k, False)
            lay.connect(twins, nbhd[i])
    for name, v in (("a1", a[0]), ("a2", a[1]), ("b1", b[0]), ("b2", b[1]),
                    ("c1", c[0]), ("c2", c[1]), ("c3", c[2])):
        lay.parts.marks[name] = v
    return lay.build()


# dispatch -----------------------------------------------------------------


def params_for(family: str, **kw: Any) -> FamilyParams:
    """Normalise keyword parameters into a ``FamilyParams`` (n derived where implied)."""
    kw = {k: (tuple(v) if isinstance(v, list) else v) for k, v in kw.items()}
    omega = kw.pop("omega", 0)
    delta = kw.pop("delta", 0)
    n = kw.pop("n", None)
    if family == "H3":
        delta = 2
        n = omega + kw["b1"] + kw["b2"] if n is None else n
    elif family == "H4":
        delta = 3
        n = omega + kw["l1"] + 2 * kw["l2"] if n is None else n
    elif family == "G4":
        delta = 2
        kw["clones"] = tuple(kw.get("clones", (0, 0, 0)))
        n = omega + 3 + sum(kw["clones"]) if n is None else n
    elif family in ("G2", "G3"):
        kw.setdefault("stars", ())
        kw.setdefault("branches", ())
        kw["stars"] = tuple(sorted(kw["stars"], reverse=True))
        kw["branches"] = tuple(sorted(kw["branches"], reverse=True))
        if family == "G3":
            kw.setdefault("glue", "a1")
            implied = g3_order(omega, delta, kw["l1"], kw["l2"], kw["l3"], kw["stars"], kw["branches"])
        else:
            implied = g2_order(omega, delta, kw["l1"], kw["l2"], kw["stars"], kw["branches"])
        if n is not None and n != implied:
            raise FamilyError(f"constraint violated: n = {implied} implied by the parts (got n={n})")
        n = implied
    if n is None:
        raise FamilyError(f"{family} needs n")
    return FamilyParams(family, n, omega, delta, tuple(sorted(kw.items())))


def build(p: FamilyParams, check: bool = True) -> tuple[Graph, LabeledParts]:
    f = p.family
    if f == "H":
        return make_H(p.n, p.omega, p.delta)
    if f == "Z":
        return make_Z(p.n, p.omega, p.delta)
    if f == "H1a":
        return make_H1a(p.n, p.omega, p.delta)
    if f == "H1b":
        return make_H1b(p.n, p.omega, p.delta)
    if f == "H2":
        return make_H2(p.n, p.omega, p.delta)
    if f == "H3":
        return make_H3(p.n, p.omega, p.get("b1"), p.get("b2"))
    if f == "H4":
        return make_H4(p.n, p.omega, p.get("l1"), p.get("l2"))
    if f == "G1":
        return make_G1(p.n, p.omega, p.delta)
    if f == "G2":
        g, parts = make_G2(p.omega, p.delta, p.get("l1"), p.get("l2"), p.get("stars", ()),
                           p.get("branches", ()), check=check)
    elif f == "G3":
        g, parts = make_G3(p.omega, p.delta, p.get("l1"), p.get("l2"), p.get("l3"),
                           p.get("stars", ()), p.get("branches", ()), p.get("glue", "a1"), check=check)
    elif f == "G4":
        return make_G4(p.n, p.omega, p.get("clones", (0, 0, 0)))
    elif f == "L":
        return _L_parts(p.delta, p.get("branches", ()))
    elif f == "T":
        g = make_T(p.delta, p.get("orders", ()))
        return g, LabeledParts({"all": tuple(range(g.n))})
    elif f == "StarUnion":
        g = make_stars(p.get("orders", ()))
        return g, LabeledParts({"all": tuple(range(g.n))})
    else:
        raise FamilyError(f"unknown family {f!r}")
    if g.n != p.n:
        raise FamilyError(f"constraint violated: n = {g.n} implied by the parts (got n={p.n})")
    return g, parts


def claimed_triple(p: FamilyParams) -> tuple[int, int, int]:
    """(minimum degree, clique number, circumference) as stated for the family."""
    w, d = p.omega, p.delta
    f = p.family
    if f in ("H", "Z"):
        return d, w, w + d - 1
    if f in ("H1a", "H2"):
        return d, w + 1, w + d
    if f == "H1b":
        return d + 1, w, w + d
    if f == "H3":
        return 2, w, w + 2
    if f == "H4":
        return 3, w, w + 3
    if f == "G1":
        return d, w, w + d
    if f in ("G2", "G3"):
        return (3 if p.get("stars") else d), w, w + d
    if f == "G4":
        return 2, w, w + 2
    raise FamilyError(f"no claimed triple for {f!r}")
