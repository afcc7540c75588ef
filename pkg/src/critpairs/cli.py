"""Command-line interface.

Exit codes: 0 success, 1 a verification failure was found, 2 usage or
parse error (including unmet preconditions and exceeded budgets), 3 I/O
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from critpairs.bounds import bounds_report, theorem31_params
from critpairs.config import load_config
from critpairs.duality import dual_pairs
from critpairs.errors import (
    BudgetExceededError,
    DomainError,
    InternalContradictionError,
    ParseError,
    PreconditionError,
)
from critpairs.groups import parse_group, parse_subset
from critpairs.harness import (
    DEDUP_MODES,
    EnumerationTask,
    classify_one,
    enumerate_pairs,
    records_to_csv,
    records_to_jsonl,
)
from critpairs.suites import DEFAULT_GROUPS, SUITES, verify_suite

EXIT_OK, EXIT_FAILURE, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="critpairs",
        description="Classify and verify small-doubling pairs in finite abelian groups.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify one pair and print its certificate")
    c.add_argument("group", help="e.g. z7 or z2xz4")
    c.add_argument("a", metavar="A", help="set literal, e.g. '{0,1,3}'")
    c.add_argument("b", metavar="B", help="set literal")
    c.add_argument("--json", action="store_true", help="print the record as JSON")

    e = sub.add_parser("enumerate", help="classify every canonical pair of a group")
    e.add_argument("group")
    e.add_argument("--r", type=int, default=None, help="keep only pairs with |A+B|-|A|-|B| = R")
    e.add_argument("--min-a", type=int, default=1)
    e.add_argument("--max-a", type=int, default=None)
    e.add_argument("--min-b", type=int, default=1)
    e.add_argument("--max-b", type=int, default=None)
    e.add_argument("--dedup", choices=DEDUP_MODES, default=None)
    e.add_argument("--workers", type=int, default=None)
    e.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    e.add_argument("--out", default=None, help="output file (default: stdout)")
    e.add_argument("--config", default=None, help="INI file with budgets and workers")

    v = sub.add_parser("verify", help="run the theorem and lemma property suites")
    v.add_argument("groups", nargs="*", default=list(DEFAULT_GROUPS))
    v.add_argument("--suite", choices=("all",) + SUITES, action="append", default=None)
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--json", action="store_true")
    v.add_argument("--config", default=None)

    b = sub.add_parser("bounds", help="evaluate the |A+B| lower bounds from |A-B| data")
    b.add_argument("group")
    b.add_argument("a", metavar="A")
    b.add_argument("b", metavar="B")
    b.add_argument("t", metavar="T", help="set containing every x with nu_x(A,-B) > k")
    b.add_argument("k", type=int)

    d = sub.add_parser("dual", help="dual pairs of a non-extendible pair")
    d.add_argument("group")
    d.add_argument("a", metavar="A")
    d.add_argument("b", metavar="B")
    return p


def _cmd_classify(args) -> int:
    rec, lines = classify_one(args.group, args.a, args.b)
    if args.json:
        print(json.dumps(rec.to_dict(), separators=(",", ":")))
    else:
        print("\n".join(lines))
        if rec.certificate is not None:
            print("certificate:")
            print(json.dumps(rec.certificate, indent=2))
    return EXIT_FAILURE if rec.verified is False else EXIT_OK


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _cmd_enumerate(args) -> int:
    cfg = load_config(args.config)
    task = EnumerationTask(
        group=args.group,
        r=args.r,
        min_a=args.min_a,
        max_a=args.max_a,
        min_b=args.min_b,
        max_b=args.max_b,
        dedup=args.dedup or cfg.dedup,
        workers=args.workers or cfg.workers,
        max_pairs=cfg.max_pairs,
        max_order=cfg.max_order,
    )
    records = list(enumerate_pairs(task))
    text = records_to_jsonl(records) if args.format == "jsonl" else records_to_csv(records)
    _write(text, args.out)
    failed = sum(1 for r in records if r.verified is False)
    if failed:
        print(f"{failed} records failed verification", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def _cmd_verify(args) -> int:
    cfg = load_config(args.config)
    groups = [parse_group(g) for g in args.groups]
    for g in groups:
        if g.order > cfg.max_order:
            raise BudgetExceededError(f"{g.name} has order {g.order} > budget {cfg.max_order}")
    seed = cfg.seed if args.seed is None else args.seed
    report = verify_suite(groups, args.suite or ["all"], seed=seed)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.to_text())
    return EXIT_OK if report.ok else EXIT_FAILURE


def _cmd_bounds(args) -> int:
    g = parse_group(args.group)
    a, b, t = (parse_subset(g, x) for x in (args.a, args.b, args.t))
    params = theorem31_params(a, b, t, args.k)
    print(json.dumps(bounds_report(params), indent=2))
    return EXIT_OK if params.holds() else EXIT_FAILURE


def _cmd_dual(args) -> int:
    g = parse_group(args.group)
    a, b = parse_subset(g, args.a), parse_subset(g, args.b)
    dp = dual_pairs(a, b)
    out = {
        "group": g.name,
        "excess": dp.excess,
        "first": [list(dp.first[0]), list(dp.first[1])],
        "second": [list(dp.second[0]), list(dp.second[1])],
    }
    print(json.dumps(out, indent=2))
    return EXIT_OK


COMMANDS = {
    "classify": _cmd_classify,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "bounds": _cmd_bounds,
    "dual": _cmd_dual,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ParseError, PreconditionError, DomainError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalContradictionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
