"""Command-line front end.

Exit codes: 0 success, 1 usage, 2 parse, 3 constraint, 4 budget,
5 violation found, 6 incomplete sweep.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import classify as cl
from . import families as fam
from .graph import Graph, min_degree
from .graph6 import Graph6Error, decode, encode
from .orderly import MAX_ENUM_ORDER
from .solvers import (DEFAULT_BUDGET, BudgetExceeded, circumference, clique_number,
                      is_edge_maximal, longest_cycle, longest_rooted_path)
from .sweep import LemmaConfig, SweepConfig, atomic_write, run_lemma_sweep, run_sweep

OK, USAGE, PARSE, CONSTRAINT, BUDGET, VIOLATION, INCOMPLETE = range(7)
MIN_BUDGET = 10**4
VERIFY_MAX_N = 12


class CliError(Exception):
    def __init__(self, code: int, msg: str) -> None:
        super().__init__(msg)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class CliConfig:
    subcommand: str
    input: str | None = None
    output: str | None = None
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    fmt: str = "human"


def _budget(text: str) -> int:
    try:
        b = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"budget must be an integer, got {text!r}")
    if b < MIN_BUDGET:
        raise argparse.ArgumentTypeError(f"budget must be >= {MIN_BUDGET}")
    return b


def _env_budget() -> int:
    text = os.environ.get("CIRCUMKIT_BUDGET")
    if not text:
        return DEFAULT_BUDGET
    try:
        return _budget(text)
    except argparse.ArgumentTypeError as e:
        raise SystemExit(f"circumkit: CIRCUMKIT_BUDGET: {e}")


# input/output -------------------------------------------------------------


def _read_graphs(path: str | None) -> list[Graph]:
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text(encoding="ascii")
        except (OSError, UnicodeDecodeError) as e:
            raise CliError(PARSE, f"cannot read {path}: {e}")
    graphs = []
    for i, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        try:
            graphs.append(decode(line))
        except Graph6Error as e:
            raise CliError(PARSE, f"line {i}: {e}")
    if not graphs:
        raise CliError(PARSE, "no graph6 input")
    return graphs


def _check_input(path: str | None) -> None:
    if path not in (None, "-") and not Path(path).is_file():
        raise CliError(USAGE, f"input file not found: {path}")


def _check_out_dir(path: str | Path) -> None:
    d = Path(path)
    if d.exists() and not d.is_dir():
        raise CliError(USAGE, f"not a directory: {d}")
    parent = d if d.exists() else d.parent
    if not os.access(parent if str(parent) else ".", os.W_OK):
        raise CliError(USAGE, f"cannot write to {d}")


def _emit(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        atomic_write(out, text)


# gen ----------------------------------------------------------------------


def _parse_value(text: str):
    if "," in text or text == "":
        return [int(t) for t in text.split(",") if t]
    try:
        return int(text)
    except ValueError:
        return text


def _parse_kv(items: Sequence[str]) -> dict:
    kw = {}
    for item in items:
        if "=" not in item:
            raise CliError(USAGE, f"expected key=value, got {item!r}")
        k, v = item.split("=", 1)
        try:
            kw[k.strip()] = _parse_value(v.strip())
        except ValueError:
            raise CliError(USAGE, f"bad integer list in {item!r}")
    for k in ("stars", "branches", "clones"):
        if isinstance(kw.get(k), int):
            kw[k] = [kw[k]]
    return kw


_REQUIRED = {
    "H3": ("omega", "b1", "b2"),
    "H4": ("omega", "l1", "l2"),
    "G4": ("omega",),
    "G2": ("omega", "delta", "l1", "l2"),
    "G3": ("omega", "delta", "l1", "l2", "l3"),
}


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family not in fam.FAMILIES:
        raise CliError(USAGE, f"unknown family {args.family!r}; choose from {', '.join(fam.FAMILIES)}")
    if args.family in ("L", "T", "StarUnion", "F1", "F2"):
        raise CliError(USAGE, f"{args.family} is a building block; gen covers the theorem families")
    kw = _parse_kv(args.params)
    missing = [k for k in _REQUIRED.get(args.family, ("n", "omega", "delta")) if k not in kw]
    if missing:
        raise CliError(USAGE, f"missing parameter(s): {', '.join(missing)}")
    try:
        p = fam.params_for(args.family, **kw)
        g, parts = fam.build(p)
    except KeyError as e:
        raise CliError(USAGE, f"missing parameter {e.args[0]}")
    except TypeError as e:
        raise CliError(USAGE, str(e))
    except fam.FamilyError as e:
        raise CliError(CONSTRAINT, str(e))
    verify = args.verify if args.verify is not None else g.n <= VERIFY_MAX_N
    status = OK
    if verify:
        got = (min_degree(g), clique_number(g)[0], circumference(g, args.budget)[0])
        want = fam.claimed_triple(p)
        tag = "OK" if got == want else f"MISMATCH claimed delta={want[0]} omega={want[1]} c={want[2]}"
        print(f"delta={got[0]} omega={got[1]} c={got[2]} {tag}", file=sys.stderr)
        if got != want:
            status = VIOLATION
    for note in parts.notes:
        print(f"note: {note}", file=sys.stderr)
    _emit(encode(g) + "\n", args.output)
    if args.parts:
        sidecar = {"params": p.to_dict(), "parts": parts.to_dict()}
        atomic_write(args.parts, json.dumps(sidecar, sort_keys=True, indent=1) + "\n")
    return status


# solve --------------------------------------------------------------------


def cmd_solve(args: argparse.Namespace) -> int:
    _check_input(args.input)
    what = args.what
    if what == "path" and len(args.roots) != 2:
        raise CliError(USAGE, "path needs two roots: solve path X Y")
    if what != "path" and args.roots:
        raise CliError(USAGE, f"{what} takes no positional arguments")
    out = []
    for g in _read_graphs(args.input):
        if what == "circ":
            c, cert = circumference(g, args.budget)
            out.append(str(c))
            out.append("cycle: " + (" ".join(map(str, cert.vertices)) if cert else "none"))
        elif what == "clique":
            w, cert = clique_number(g)
            out.append(str(w))
            out.append("clique: " + " ".join(map(str, cert.vertices)))
        elif what == "ham":
            c, cert = longest_cycle(g, at_least=g.n, budget=args.budget)
            ham = g.n >= 3 and c == g.n
            out.append("true" if ham else "false")
            if ham:
                out.append("cycle: " + " ".join(map(str, cert.vertices)))
        elif what == "path":
            x, y = args.roots
            if not (0 <= x < g.n and 0 <= y < g.n) or x == y:
                raise CliError(USAGE, f"roots must be distinct vertices in 0..{g.n - 1}")
            k, cert = longest_rooted_path(g, x, y, args.budget)
            out.append(str(k))
            out.append("path: " + (" ".join(map(str, cert.vertices)) if cert else "none"))
        elif what == "edge-maximal":
            out.append("true" if is_edge_maximal(g, args.budget) else "false")
    _emit("\n".join(out) + "\n", args.output)
    return OK


# classify -----------------------------------------------------------------


def cmd_classify(args: argparse.Namespace) -> int:
    _check_input(args.input)
    results = []
    status = OK
    for g in _read_graphs(args.input):
        try:
            inv = cl.invariants(g, args.budget)
            main = cl.check_theorem_main(g, inv, budget=args.budget, strict=args.strict_hosts)
            yuan = cl.check_theorem_yuan(g, inv, budget=args.budget)
        except cl.NotTwoConnected:
            raise CliError(CONSTRAINT, f"not 2-connected: {encode(g)}")
        if cl.VIOLATION in (main.case, yuan.case):
            status = VIOLATION
        results.append({"graph6": encode(g), "main": main.to_dict(), "yuan": yuan.to_dict()})
    if args.format == "json":
        text = json.dumps(results if len(results) > 1 else results[0], sort_keys=True, indent=1) + "\n"
    else:
        lines = []
        for r in results:
            m = r["main"]
            fams = ", ".join(d["family"] for d in m["matches"]) or "-"
            lines.append(f"{r['graph6']}: n={m['n']} delta={m['delta']} omega={m['omega']} c={m['c']} "
                         f"main={m['case']} yuan={r['yuan']['case']} matches={fams}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return status


# sweeps -------------------------------------------------------------------


def _finish(rep, args: argparse.Namespace, stem: str) -> int:
    paths = rep.write(args.out_dir, stem)
    if args.format == "json":
        print(json.dumps({"header": rep.header, "totals": rep.totals, "digest": rep.digest,
                          "files": [str(p) for p in paths]}, sort_keys=True, indent=1))
    else:
        print(f"status: {rep.header['status']}  wall time: {rep.header['wall_time_s']}s")
        for k, v in rep.totals.items():
            print(f"{k}: " + ", ".join(f"{a}={b}" for a, b in sorted(v.items())))
        print(f"violations: {rep.violations}  unresolved incidents: {len(rep.incidents)}")
        for p in paths:
            print(f"wrote {p}")
    if rep.violations:
        return VIOLATION
    if not rep.complete:
        return INCOMPLETE
    return OK


def cmd_sweep(args: argparse.Namespace) -> int:
    if not 1 <= args.n_max <= MAX_ENUM_ORDER:
        raise CliError(CONSTRAINT, f"--n-max must be in 1..{MAX_ENUM_ORDER} (enumeration cap)")
    _check_out_dir(args.out_dir)
    cfg = SweepConfig(n_max=args.n_max, workers=args.workers, budget=args.budget,
                      keep=args.keep, strict_hosts=args.strict_hosts)
    rep = run_sweep(args.n_max, cfg)
    return _finish(rep, args, args.stem or f"sweep_n{args.n_max}")


def cmd_lemma_sweep(args: argparse.Namespace) -> int:
    if args.delta not in (2, 3, 4):
        raise CliError(CONSTRAINT, "--delta must be 2, 3 or 4")
    if not 1 <= args.order_max <= MAX_ENUM_ORDER:
        raise CliError(CONSTRAINT, f"--order-max must be in 1..{MAX_ENUM_ORDER} (enumeration cap)")
    _check_out_dir(args.out_dir)
    cfg = LemmaConfig(delta=args.delta, order_max=args.order_max, workers=args.workers,
                      budget=args.budget, keep=args.keep)
    rep = run_lemma_sweep(args.delta, args.order_max, cfg)
    return _finish(rep, args, args.stem or f"lemma_d{args.delta}_n{args.order_max}")


# parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="circumkit", description="Circumference extremal families, exact solvers and sweeps.")
    sub = ap.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--budget", type=_budget, default=_env_budget(),
                       help="solver node budget (default: $CIRCUMKIT_BUDGET or 1e8)")

    g = sub.add_parser("gen", help="generate a family instance as graph6")
    g.add_argument("family")
    g.add_argument("params", nargs="*", help="key=value pairs, lists comma-separated")
    g.add_argument("-o", "--output", help="graph6 output file (default stdout)")
    g.add_argument("--parts", help="write the labelled parts as a JSON sidecar")
    g.add_argument("--verify", dest="verify", action="store_true", default=None,
                   help=f"solver-check the claimed triple (default on for n <= {VERIFY_MAX_N})")
    g.add_argument("--no-verify", dest="verify", action="store_false")
    common(g)
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="exact invariants with certificates")
    s.add_argument("what", choices=["circ", "clique", "ham", "path", "edge-maximal"])
    s.add_argument("roots", nargs="*", type=int, help="x y for 'path'")
    s.add_argument("-i", "--input", help="graph6 file (default stdin)")
    s.add_argument("-o", "--output")
    common(s)
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("classify", help="theorem verdicts and family matches")
    c.add_argument("-i", "--input", help="graph6 file (default stdin)")
    c.add_argument("-o", "--output")
    c.add_argument("--format", choices=["json", "human"], default="json")
    c.add_argument("--strict-hosts", action="store_true",
                   help="pin G1..G4 hosts to the graph's own (omega, delta)")
    common(c)
    c.set_defaults(func=cmd_classify)

    for name, fn in (("sweep", cmd_sweep), ("lemma-sweep", cmd_lemma_sweep)):
        w = sub.add_parser(name, help="exhaustive verification sweep")
        if name == "sweep":
            w.add_argument("--n-max", type=int, default=9)
            w.add_argument("--strict-hosts", action="store_true")
        else:
            w.add_argument("--delta", type=int, default=2)
            w.add_argument("--order-max", type=int, default=7)
        w.add_argument("--workers", type=int, default=1)
        w.add_argument("--out-dir", default=".")
        w.add_argument("--stem", help="report file stem")
        w.add_argument("--keep", choices=["all", "exceptional"], default="exceptional",
                       help="records kept in the report body")
        w.add_argument("--format", choices=["json", "human"], default="human")
        common(w)
        w.set_defaults(func=fn)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        ap.error("--workers must be >= 1")
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return BUDGET


if __name__ == "__main__":
    sys.exit(main())
