"""Command-line front end: run check suites, emit JSON-lines reports.

One report per line on stdout; a human summary table on stderr (suppressed by
--json-only).  Exit code 0 when every check passes, 1 when any fails, 2 on
usage errors.  Two runs with the same seed and configuration produce
byte-identical stdout.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import time

from .reports import SuiteContext
from .suites import SUITE_NAMES, suite_checks, suite_manifest


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="g2lab",
        description="Run certification and verification suites; JSON lines on "
                    "stdout, summary table on stderr.")
    p.add_argument("--suite", default="all",
                   help=f"one of: {', '.join(SUITE_NAMES)} (default: all)")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--samples", type=int, default=200,
                   help="global sample budget; per-check counts scale with it")
    p.add_argument("--h", type=float, default=None,
                   help="override the base stencil step where supported")
    p.add_argument("--json-only", action="store_true",
                   help="suppress the human summary table")
    p.add_argument("--list", action="store_true", dest="list_checks",
                   help="list the checks of the selected suite and exit")
    p.add_argument("--out", default=None, metavar="FILE",
                   help="also write the JSON lines to FILE")
    p.add_argument("--dump-samples", default=None, metavar="DIR",
                   help="write per-check CSV sample tables into DIR")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2

    try:
        suite_manifest(args.suite)
        checks = suite_checks(args.suite)
    except KeyError:
        print(f"error: unknown suite {args.suite!r}; known: "
              f"{', '.join(SUITE_NAMES)}", file=sys.stderr)
        return 2
    if args.samples <= 0 or (args.h is not None and args.h <= 0):
        print("error: --samples and --h must be positive", file=sys.stderr)
        return 2

    if args.list_checks:
        for check_id, _ in checks:
            print(check_id)
        return 0

    ctx = SuiteContext(seed=args.seed, samples=args.samples, h=args.h,
                       dump_dir=args.dump_samples)
    out_fh = open(args.out, "w") if args.out else None
    reports = []
    try:
        for check_id, fn in checks:
            t0 = time.perf_counter()
            rep = fn(ctx)
            rep.runtime_ms = int((time.perf_counter() - t0) * 1000)
            reports.append(rep)
            line = rep.json_line()
            print(line)
            if out_fh:
                out_fh.write(line + "\n")
    finally:
        if out_fh:
            out_fh.close()

    if args.dump_samples:
        os.makedirs(args.dump_samples, exist_ok=True)
        for check_id, (header, rows) in ctx.sample_rows.items():
            path = os.path.join(args.dump_samples, check_id.replace("/", "_") + ".csv")
            with open(path, "w", newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow(header)
                writer.writerows(rows)

    if not args.json_only:
        width = max(len(r.check_id) for r in reports) + 2
        print(f"\n{'check':<{width}}{'status':<8}{'worst residual':<16}"
              f"{'order':<10}{'ms':>6}", file=sys.stderr)
        for r in reports:
            worst = max(r.residuals.values()) if r.residuals else 0.0
            order = ("" if r.order_estimate is None
                     else (r.order_estimate if isinstance(r.order_estimate, str)
                           else f"{r.order_estimate:.2f}"))
            print(f"{r.check_id:<{width}}{r.status:<8}{worst:<16.3e}"
                  f"{order:<10}{r.runtime_ms:>6}", file=sys.stderr)
        n_fail = sum(1 for r in reports if r.status == "fail")
        print(f"\n{len(reports)} checks, {n_fail} failed", file=sys.stderr)

    return 1 if any(r.status == "fail" for r in reports) else 0


if __name__ == "__main__":
    sys.exit(main())
