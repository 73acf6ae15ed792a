"""Command-line front end.

    kromatic compute [FILE|-] [--generate N] [--basis mbar|monomial] [--degree D]
    kromatic recover [FILE|-] (--order4 | --order5 | --tree | --star H K | --small)
    kromatic scan    [FILE|-] [--generate N] [--invariant kromatic|classical]
    kromatic verify  SUITE [--sizes A..B] [--seed S] [--random N]

Graphs are read one per line (graph6 or ``n; u v; ...``).  Human output
goes to stdout; ``--out`` writes line-delimited JSON records.  The exit
status is 0 only if every graph was processed and every check passed.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict

from .engine import classical_chromatic, kromatic_truncated, mbar_vector
from .errors import KromaticError
from .graphs import Graph, generate_nonisomorphic, parse_graph, to_graph6
from .recovery import order4_recover, order5_recover, order_leq3_counts, star_recover, tree_recover
from .scan import scan
from .verify import SUITES, run_suites


def _sizes(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None


def _weights(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(w) for w in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _read_input(args) -> list[tuple[int, str, Graph | None, str | None]]:
    """``(line, text, graph, error)`` per input graph, in input order."""
    if getattr(args, "generate", None):
        return [(i + 1, to_graph6(e.graph), e.graph, None) for i, e in enumerate(generate_nonisomorphic(args.generate))]
    if args.input in (None, "-"):
        lines = sys.stdin.read().splitlines()
    else:
        with open(args.input) as fh:
            lines = fh.read().splitlines()
    out = []
    for lineno, line in enumerate(lines, 1):
        s = line.strip()
        if not s or s.startswith("#") or s == ">>graph6<<":
            continue
        try:
            out.append((lineno, s, parse_graph(s), None))
        except (KromaticError, ValueError) as exc:
            out.append((lineno, s, None, f"line {lineno}: {exc}"))
    return out


def _run(fn, items, jobs):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _emit(records, text_blocks, out_path):
    for block in text_blocks:
        sys.stdout.write(block)
    if out_path:
        with open(out_path, "w") as fh:
            for rec in records:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")


# compute -----------------------------------------------------------------

def _compute_one(task):
    (lineno, text, g, err), opts = task
    rec = {"line": lineno, "graph": text}
    if err:
        return dict(rec, error=err), f"# error: {err}\n"
    try:
        if opts["weights"] is not None:
            g = g.with_weights(opts["weights"])
        if opts["basis"] == "mbar":
            terms = mbar_vector(g).terms(max_weight=opts["degree"])
        elif opts["basis"] == "classical":
            terms = classical_chromatic(g).items()
        else:
            terms = kromatic_truncated(g, opts["degree"]).items()
    except (KromaticError, ValueError) as exc:
        return dict(rec, error=f"line {lineno}: {exc}"), f"# line {lineno}: error: {exc}\n"
    rec.update(basis=opts["basis"], terms=[[p.to_text(), c] for p, c in terms])
    body = "".join(f"{p.to_text()} : {c}\n" for p, c in terms)
    return rec, f"# {text}\n{body}"


def cmd_compute(args) -> int:
    if args.basis == "monomial" and args.degree is None:
        raise SystemExit("--basis monomial needs --degree")
    opts = {"basis": args.basis, "degree": args.degree, "weights": args.weights}
    results = _run(_compute_one, [(item, opts) for item in _read_input(args)], args.jobs)
    _emit([r for r, _ in results], [t for _, t in results], args.out)
    return 1 if any("error" in r for r, _ in results) else 0


# recover -----------------------------------------------------------------

def _recover_one(task):
    (lineno, text, g, err), mode = task
    rec = {"line": lineno, "graph": text}
    if err:
        return dict(rec, error=err), f"# error: {err}\n"
    try:
        v = mbar_vector(g)
        kind = mode[0]
        if kind == "small":
            counts = asdict(order_leq3_counts(v))
            rec["counts"] = counts
            body = "".join(f"  {k}: {x}\n" for k, x in counts.items())
        elif kind == "star":
            h, k = mode[1], mode[2]
            value = star_recover(v, h, k)
            rec.update(h=h, k=k, count=value)
            body = f"  star h={h} k={k}: {value}\n"
        else:
            if kind == "order4":
                reports = [order4_recover(v)]
            elif kind == "order5":
                reports = [order5_recover(v, mode[1])]
            else:
                reports = list(tree_recover(v))
            rec["reports"] = [r.to_json() for r in reports]
            body = "".join(r.to_table() for r in reports)
    except (KromaticError, ValueError) as exc:
        return dict(rec, error=f"line {lineno}: {exc}"), f"# {text}\nerror: {exc}\n"
    return rec, f"# {text}\n{body}"


def cmd_recover(args) -> int:
    if args.star:
        mode = ("star", args.star[0], args.star[1])
    elif args.order5:
        mode = ("order5", args.lifts)
    elif args.tree:
        mode = ("tree",)
    elif args.small:
        mode = ("small",)
    else:
        mode = ("order4",)
    results = _run(_recover_one, [(item, mode) for item in _read_input(args)], args.jobs)
    _emit([r for r, _ in results], [t for _, t in results], args.out)
    return 1 if any("error" in r for r, _ in results) else 0


# scan ----------------------------------------------------------------------

def cmd_scan(args) -> int:
    items = _read_input(args)
    errors = [err for _, _, _, err in items if err]
    for err in errors:
        sys.stderr.write(err + "\n")
    try:
        result = scan([g for _, _, g, err in items if not err], args.invariant, args.jobs)
    except KromaticError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    _emit([result.to_json()], [result.to_text()], args.out)
    return 1 if errors else 0


# verify --------------------------------------------------------------------

def cmd_verify(args) -> int:
    results = run_suites(args.suite, args.sizes, args.seed, args.random)
    records = [
        {"suite": r.suite, "checked": r.checked, "passed": r.passed, "failures": r.failures} for r in results
    ]
    _emit(records, [r.line() + "\n" for r in results], args.out)
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kromatic", description="Kromatic symmetric function toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def source(p, generate=True):
        p.add_argument("input", nargs="?", help="graph file, one graph per line; '-' for stdin")
        if generate:
            p.add_argument("--generate", type=int, metavar="N", help="use every graph on N vertices")
        p.add_argument("--out", help="write line-delimited JSON records here")
        p.add_argument("--jobs", type=int, default=1, help="worker processes (output order is unchanged)")

    p = sub.add_parser("compute", help="invariant of each graph")
    source(p)
    p.add_argument("--basis", choices=("mbar", "monomial", "classical"), default="mbar")
    p.add_argument("--degree", type=int, help="degree cap (monomial) or weight cap (mbar)")
    p.add_argument("--weights", type=_weights, help="vertex weights, comma-separated (monomial only)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("recover", help="induced-subgraph counts from the invariant")
    source(p)
    which = p.add_mutually_exclusive_group()
    which.add_argument("--order4", action="store_true")
    which.add_argument("--order5", action="store_true")
    which.add_argument("--tree", action="store_true")
    which.add_argument("--small", action="store_true", help="vertices, edges and 3-vertex counts")
    which.add_argument("--star", nargs=2, type=int, metavar=("H", "K"))
    p.add_argument("--lifts", choices=("all", "determined"), default="all", help="order-5 lift rows")
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("scan", help="look for nonisomorphic graphs with equal invariants")
    source(p)
    p.add_argument("--invariant", choices=("kromatic", "classical"), default="kromatic")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run a self-verification suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--sizes", type=_sizes, help="vertex range A..B (tree suite: tree orders)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random", type=int, default=0, help="extra seeded graphs for order4/order5")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, KromaticError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
