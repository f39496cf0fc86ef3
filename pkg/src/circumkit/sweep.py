"""Exhaustive verification sweeps over small 2-connected graphs.

Work is split by parent representative of the orderly generator: each task
expands one parent into its canonical children and classifies them, so
tasks are independent and the final (sorted) record list does not depend
on the number of workers.  Timestamps and wall time live in the report
header only; the body is byte-deterministic.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from . import classify as cl
from .graph6 import decode, encode
from .orderly import MAX_ENUM_ORDER, EnumerationCapError, children, parents_for
from .solvers import DEFAULT_BUDGET, BudgetExceeded

REPORT_VERSION = 1


@dataclass
class SweepConfig:
    n_min: int = 3
    n_max: int = 9
    workers: int = 1
    budget: int = DEFAULT_BUDGET
    retry_budget: int | None = None  # defaults to 10 * budget
    keep: str = "exceptional"  # "all" or "exceptional"
    strict_hosts: bool = False  # G1..G4 hosts only at the graph's own (ω, δ)

    def __post_init__(self) -> None:
        if self.keep not in ("all", "exceptional"):
            raise ValueError("keep must be 'all' or 'exceptional'")
        if self.workers < 1:
            raise ValueError("workers >= 1")


@dataclass
class LemmaConfig:
    delta: int = 2
    order_max: int = 7
    workers: int = 1
    budget: int = DEFAULT_BUDGET
    retry_budget: int | None = None
    keep: str = "exceptional"


@dataclass
class VerdictRecord:
    graph6: str
    n: int
    delta: int
    omega: int
    circumference: int
    verdict_main: str
    verdict_yuan: str
    matches: list[str]
    host: str | None = None  # containing family instance for case_ii via 𝒢

    @property
    def exceptional(self) -> bool:
        return self.verdict_main != cl.BOUND_MET or self.verdict_yuan != cl.BOUND_MET

    def sort_key(self) -> tuple:
        return (self.n, self.graph6)


@dataclass
class LemmaRecord:
    graph6: str
    n: int
    x: int
    y: int
    delta: int
    order: int
    verdict: str
    components: list
    reason: str = ""

    @property
    def exceptional(self) -> bool:
        return self.verdict != cl.PATH_FOUND

    def sort_key(self) -> tuple:
        return (self.n, self.graph6, self.x, self.y)


@dataclass
class Incident:
    graph6: str
    what: str
    roots: tuple[int, int] | None = None


@dataclass
class SweepReport:
    kind: str
    config: dict
    n_range: tuple[int, int]
    totals: dict
    records: list
    incidents: list[Incident] = field(default_factory=list)
    digest: str = ""
    header: dict = field(default_factory=dict)

    @property
    def complete(self) -> bool:
        return not self.incidents

    @property
    def violations(self) -> int:
        t = self.totals
        if self.kind == "main":
            return t["main"].get(cl.VIOLATION, 0) + t["yuan"].get(cl.VIOLATION, 0)
        return t["verdict"].get(cl.VIOLATION, 0)

    def body(self) -> dict:
        return {
            "version": REPORT_VERSION,
            "kind": self.kind,
            "config": self.config,
            "n_range": list(self.n_range),
            "totals": self.totals,
            "records": [asdict(r) for r in self.records],
            "incidents": [asdict(i) for i in self.incidents],
            "digest": self.digest,
        }

    def body_json(self) -> str:
        return json.dumps(self.body(), sort_keys=True, indent=1)

    def to_json(self) -> str:
        return json.dumps({"header": self.header, "body": self.body()}, sort_keys=True, indent=1)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if self.kind == "main":
            w.writerow(["graph6", "n", "delta", "omega", "circumference", "verdict_main",
                        "verdict_yuan", "matches"])
            for r in self.records:
                w.writerow([r.graph6, r.n, r.delta, r.omega, r.circumference, r.verdict_main,
                            r.verdict_yuan, ";".join(r.matches)])
        else:
            w.writerow(["graph6", "n", "x", "y", "delta", "order", "verdict"])
            for r in self.records:
                w.writerow([r.graph6, r.n, r.x, r.y, r.delta, r.order, r.verdict])
        return buf.getvalue()

    def corpus(self) -> str:
        """graph6 lines of every exceptional or violating graph (deduplicated)."""
        seen: list[str] = []
        for r in self.records:
            if r.exceptional and (not seen or seen[-1] != r.graph6):
                seen.append(r.graph6)
        return "".join(s + "\n" for s in seen)

    def write(self, directory: str | Path, stem: str) -> list[Path]:
        d = Path(directory)
        d.mkdir(parents=True, exist_ok=True)
        out = []
        for suffix, text in ((".json", self.to_json()), (".csv", self.to_csv()), (".g6", self.corpus())):
            path = d / (stem + suffix)
            atomic_write(path, text)
            out.append(path)
        return out


def atomic_write(path: str | Path, text: str) -> None:
    path = Path(path)
    tmp = path.with_name(f".{path.name}.{os.getpid()}.tmp")
    with open(tmp, "w", encoding="ascii") as fh:
        fh.write(text)
    os.replace(tmp, path)


# workers ------------------------------------------------------------------


def _classify_one(g, budget: int, strict: bool = False) -> VerdictRecord:
    key = encode(g)  # children are canonical relabellings
    inv = cl.invariants(g, budget)
    main = cl.check_theorem_main(g, inv, key, budget, strict)
    yuan = cl.check_theorem_yuan(g, inv, key, budget)
    host = main.witness.params.label() if main.witness else None
    return VerdictRecord(key, inv.n, inv.delta, inv.omega, inv.c, main.case, yuan.case,
                         sorted(p.label() for _, p in main.matches.matches), host)


def _main_task(args: tuple[str, int, bool]) -> tuple[list[VerdictRecord], list[Incident]]:
    parent_g6, budget, strict = args
    recs, incs = [], []
    for g in children(decode(parent_g6), "biconnected"):
        try:
            recs.append(_classify_one(g, budget, strict))
        except BudgetExceeded as e:
            incs.append(Incident(encode(g), str(e)))
    return recs, incs


def _lemma_one(g, x: int, y: int, delta: int, budget: int) -> LemmaRecord:
    v = cl.check_lemma_rooted(g, x, y, delta, budget)
    return LemmaRecord(encode(g), g.n, x, y, delta, v.order, v.kind,
                       [[k, list(vs)] for k, vs in v.components], v.reason)


def _lemma_task(args: tuple[str, int, int]) -> tuple[list[LemmaRecord], list[Incident]]:
    parent_g6, delta, budget = args
    recs, incs = [], []
    for g in children(decode(parent_g6), "connected"):
        for x in range(g.n):
            for y in range(x + 1, g.n):
                if cl.rooted_hypotheses(g, x, y, delta) is not None:
                    continue
                try:
                    recs.append(_lemma_one(g, x, y, delta, budget))
                except BudgetExceeded as e:
                    incs.append(Incident(encode(g), str(e), (x, y)))
    return recs, incs


def _run_tasks(fn, tasks: list, workers: int) -> tuple[list, list]:
    recs, incs = [], []
    if workers == 1 or len(tasks) <= 1:
        results = map(fn, tasks)
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(fn, tasks, chunksize=max(1, len(tasks) // (workers * 8)))
    try:
        for r, i in results:
            recs.extend(r)
            incs.extend(i)
    finally:
        if workers > 1 and len(tasks) > 1:
            pool.shutdown()
    return recs, incs


def _digest(records: list) -> str:
    h = hashlib.sha256()
    for r in records:
        h.update(json.dumps(asdict(r), sort_keys=True).encode())
        h.update(b"\n")
    return h.hexdigest()


def _header(started: float, complete: bool) -> dict:
    return {
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "wall_time_s": round(time.perf_counter() - started, 3),
        "status": "COMPLETE" if complete else "INCOMPLETE",
    }


def _check_cap(n: int) -> None:
    if n > MAX_ENUM_ORDER:
        raise EnumerationCapError(f"order {n} exceeds enumeration cap {MAX_ENUM_ORDER}")


# sweeps -------------------------------------------------------------------


def run_sweep(n_max: int = 9, config: SweepConfig | None = None) -> SweepReport:
    """Both theorem checks on every 2-connected class of order ``n_min..n_max``."""
    cfg = config or SweepConfig(n_max=n_max)
    cfg.n_max = n_max
    _check_cap(n_max)
    started = time.perf_counter()
    lo = max(3, cfg.n_min)
    tasks = []
    for n in range(lo, n_max + 1):
        tasks.extend((encode(p), cfg.budget, cfg.strict_hosts) for p in parents_for(n, "biconnected"))
    records, incidents = _run_tasks(_main_task, tasks, cfg.workers)

    unresolved = []
    retry = cfg.retry_budget or 10 * cfg.budget
    for inc in incidents:
        try:
            records.append(_classify_one(decode(inc.graph6), retry, cfg.strict_hosts))
        except BudgetExceeded as e:
            unresolved.append(Incident(inc.graph6, str(e)))

    records.sort(key=VerdictRecord.sort_key)
    totals: dict = {"classes": {}, "main": {}, "yuan": {}}
    for r in records:
        totals["classes"][str(r.n)] = totals["classes"].get(str(r.n), 0) + 1
        totals["main"][r.verdict_main] = totals["main"].get(r.verdict_main, 0) + 1
        totals["yuan"][r.verdict_yuan] = totals["yuan"].get(r.verdict_yuan, 0) + 1
    digest = _digest(records)
    kept = records if cfg.keep == "all" else [r for r in records if r.exceptional]
    conf = asdict(cfg)
    conf.pop("workers")
    rep = SweepReport("main", conf, (lo, n_max), totals, kept, sorted(unresolved, key=lambda i: i.graph6),
                      digest)
    rep.header = _header(started, rep.complete)
    rep.header["workers"] = cfg.workers
    return rep


def run_lemma_sweep(delta: int = 2, order_max: int = 7, config: LemmaConfig | None = None) -> SweepReport:
    """Rooted-path lemma on every connected graph of order ``δ+3..order_max``
    and every unordered root pair meeting the lemma's hypotheses."""
    cfg = config or LemmaConfig(delta=delta, order_max=order_max)
    cfg.delta, cfg.order_max = delta, order_max
    if delta not in (2, 3, 4):
        raise ValueError("lemma sweep supports delta in {2, 3, 4}")
    _check_cap(order_max)
    started = time.perf_counter()
    lo = delta + 3
    tasks = []
    for n in range(lo, order_max + 1):
        tasks.extend((encode(p), delta, cfg.budget) for p in parents_for(n, "connected"))
    records, incidents = _run_tasks(_lemma_task, tasks, cfg.workers)

    unresolved = []
    retry = cfg.retry_budget or 10 * cfg.budget
    for inc in incidents:
        x, y = inc.roots
        try:
            records.append(_lemma_one(decode(inc.graph6), x, y, delta, retry))
        except BudgetExceeded as e:
            unresolved.append(Incident(inc.graph6, str(e), inc.roots))

    records.sort(key=LemmaRecord.sort_key)
    totals: dict = {"instances": {}, "verdict": {}}
    for r in records:
        totals["instances"][str(r.n)] = totals["instances"].get(str(r.n), 0) + 1
        totals["verdict"][r.verdict] = totals["verdict"].get(r.verdict, 0) + 1
    digest = _digest(records)
    kept = records if cfg.keep == "all" else [r for r in records if r.exceptional]
    conf = asdict(cfg)
    conf.pop("workers")
    rep = SweepReport("lemma", conf, (lo, order_max), totals, kept,
                      sorted(unresolved, key=lambda i: (i.graph6, i.roots)), digest)
    rep.header = _header(started, rep.complete)
    rep.header["workers"] = cfg.workers
    return rep
