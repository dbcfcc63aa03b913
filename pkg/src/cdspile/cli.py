"""Command-line front end: ``cdspile {analyze,hist,merge-numbers,oeis,verify}``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import kernels, oracle, reports, verification
from .counting import SERIES, histogram_formula, oeis_terms
from .merge import MergeNumberTable, merge_number_table, printed_table
from .perm import GroundSetError, parse_one_line

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# merge numbers beyond this pile size take too long to compute on demand
FORMULA_K_MAX = 12
REACH_AUTO_MAX = 7


class UsageError(Exception):
    pass


def _load_table(path: str | None) -> MergeNumberTable | None:
    if path is None:
        return None
    try:
        return MergeNumberTable.from_file(path)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read merge-number table {path}: {exc}") from None


def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        p = parse_one_line(args.perm)
    except (ValueError, GroundSetError) as exc:
        raise UsageError(f"not a permutation: {exc}") from None
    reach = args.reach or (p.size <= REACH_AUTO_MAX and not args.no_reach)
    sys.stdout.write(reports.render_analysis(p, reach))
    return EXIT_OK


def _histogram(args: argparse.Namespace) -> dict[int, int]:
    n = args.n
    if args.method == "oracle":
        if not 2 <= n <= 10:
            raise UsageError("oracle histograms need 2 <= n <= 10")
        return oracle.census(n, workers=args.workers).histogram
    if not 2 <= n <= 30:
        raise UsageError("formula histograms need 2 <= n <= 30")
    table = _load_table(args.table)
    if table is None and n - 1 > FORMULA_K_MAX:
        raise UsageError(f"n={n} needs merge numbers up to k={n - 1}; supply them with --table")
    if table is not None:
        missing = [k for k in range(1, n) if k not in table.ks()]
        if missing:
            print(f"note: table has no rows for k={missing}; those entries read as 0", file=sys.stderr)
    return histogram_formula(n, table)


def cmd_hist(args: argparse.Namespace) -> int:
    hist = _histogram(args)
    if args.json:
        doc = {"n": args.n, "method": args.method, "histogram": {str(k): str(v) for k, v in hist.items()}}
        print(json.dumps(doc))
    else:
        width = max(len(str(v)) for v in hist.values())
        for k, v in hist.items():
            print(f"{k:>3}  {v:>{width}}")
    return EXIT_OK


def cmd_merge_numbers(args: argparse.Namespace) -> int:
    if not 1 <= args.k_max <= 8:
        raise UsageError("--k-max must be between 1 and 8")
    fn = oracle.merge_number_oracle if args.method == "oracle" else None
    table = merge_number_table(args.k_max, args.method, merge_fn=fn)
    for k in table.ks():
        print(f"c[{k}] = " + " ".join(map(str, table.row(k))))
    reference = _load_table(args.table) or printed_table()
    label = args.table or "printed table"
    visible = MergeNumberTable({key: v for key, v in reference.entries.items() if key[0] <= args.k_max})
    diff = table.diff(visible)
    if not diff:
        print(f"no differences against {label}")
    for k, l, ours, theirs in diff:
        print(f"diff: c({k},{l}) = {ours}, {label} has {theirs}")
    return EXIT_OK


def cmd_oeis(args: argparse.Namespace) -> int:
    tag = args.series.upper()
    if tag not in SERIES:
        raise UsageError(f"unknown series {args.series}; known: {', '.join(SERIES)}")
    if args.terms < 1:
        raise UsageError("--terms must be positive")
    print(", ".join(map(str, oeis_terms(tag, args.terms))))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    opt = verification.Options(
        n_max=args.n_max,
        k_max=args.k_max,
        workers=args.workers,
        golden_dir=Path(args.golden) if args.golden else None,
    )
    print(f"backend: {kernels.BACKEND}")
    ok = True
    for check in verification.CHECKS:
        result = verification.run_check(check, opt)
        print(result.line())
        for line in result.details:
            print("    " + line.replace("\n", "\n    "))
        ok &= result.passed
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cdspile", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    default_workers = os.cpu_count() or 1

    a = sub.add_parser("analyze", help="pile, pair and merge structure of one permutation")
    a.add_argument("perm", help='one-line permutation, e.g. "2 5 1 4 3" or [2,5,1,4,3]')
    a.add_argument("--reach", action="store_true", help="search reachable fixed points even for n > 7")
    a.add_argument("--no-reach", action="store_true", help="skip the reachability search")
    a.set_defaults(func=cmd_analyze)

    h = sub.add_parser("hist", help="pile-size histogram of S_n")
    h.add_argument("n", type=int)
    h.add_argument("--method", choices=["oracle", "formula"], default="oracle")
    h.add_argument("--json", action="store_true")
    h.add_argument("--workers", type=int, default=default_workers)
    h.add_argument("--table", help="merge-number override file for the formula")
    h.set_defaults(func=cmd_hist)

    m = sub.add_parser("merge-numbers", help="print the merge-number matrix")
    m.add_argument("--k-max", type=int, default=6)
    m.add_argument("--method", choices=["structure", "bruteforce", "oracle"], default="structure")
    m.add_argument("--table", help="diff against this file instead of the printed table")
    m.set_defaults(func=cmd_merge_numbers)

    o = sub.add_parser("oeis", help="terms of a pile-size series")
    o.add_argument("series", help=", ".join(SERIES))
    o.add_argument("--terms", type=int, default=10)
    o.set_defaults(func=cmd_oeis)

    v = sub.add_parser("verify", help="run the acceptance checks")
    v.add_argument("--n-max", type=int, default=8)
    v.add_argument("--k-max", type=int, default=7)
    v.add_argument("--workers", type=int, default=default_workers)
    v.add_argument("--golden", help="directory of golden files")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cdspile: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
