"""Command-line driver: run a verification suite and emit a machine-readable report.

One JSON object per run goes to standard output; a human-readable table goes
to standard error. Exit status: 0 all checks pass, 1 a check failed, 2 usage
or input errors. A single seed controls every randomized probe, so identical
invocations produce identical reports (up to the wall-clock elapsed_ms field).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .errors import ValidationError
from .groups import parse_cocycle_file, parse_group_file
from .registry import SUITES, get_group, group_names, registry_text
from .suites import run_suite_checks

REPORT_SCHEMA = {
    "type": "object",
    "required": ["suite", "group", "seed", "tol", "pass", "checks", "elapsed_ms"],
    "properties": {
        "suite": {"type": "string"},
        "group": {"type": "string"},
        "seed": {"type": "integer"},
        "tol": {"type": "number"},
        "pass": {"type": "boolean"},
        "elapsed_ms": {"type": "number"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "tol", "pass", "detail"],
                "properties": {
                    "name": {"type": "string"},
                    "residual": {"type": "number"},
                    "tol": {"type": "number"},
                    "pass": {"type": "boolean"},
                    "detail": {"type": "string"},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hopfstar",
        description="Numerical verification suites for finite-dimensional "
                    "Hopf structures, crossed products, and duality.")
    p.add_argument("--suite", choices=SUITES, help="suite to run")
    p.add_argument("--group", help=f"built-in group ({', '.join(group_names())})")
    p.add_argument("--group-file", help="path to a multiplication-table file")
    p.add_argument("--cocycle-file", help="path to a cocycle table file "
                                          "(counterexample-twisted only)")
    p.add_argument("--tol", type=float, default=1e-9, help="residual tolerance")
    p.add_argument("--seed", type=int, default=1729, help="seed for randomized probes")
    p.add_argument("--report", choices=("json", "text"), default="json",
                   help="stdout format (a text table always goes to stderr)")
    p.add_argument("--list", action="store_true", help="list built-in groups and suites")
    return p


def _table(report: dict) -> str:
    rows = [f"suite {report['suite']} | group {report['group']} | "
            f"seed {report['seed']} | tol {report['tol']:g}"]
    width = max((len(c["name"]) for c in report["checks"]), default=4)
    for c in report["checks"]:
        res = f"{c['residual']:.3e}" if "residual" in c else "-"
        status = "pass" if c["pass"] else "FAIL"
        detail = f"  [{c['detail']}]" if c["detail"] else ""
        rows.append(f"  {c['name']:<{width}}  {res:>10}  {status}{detail}")
    rows.append(f"result: {'PASS' if report['pass'] else 'FAIL'} "
                f"({report['elapsed_ms']:.1f} ms)")
    return "\n".join(rows)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.list:
        print(registry_text())
        return 0
    if not args.suite:
        parser.error("--suite is required (or use --list)")
    if bool(args.group) == bool(args.group_file):
        parser.error("exactly one of --group / --group-file is required")

    try:
        if args.group:
            G = get_group(args.group)
            gname = args.group
        else:
            with open(args.group_file, "r", encoding="utf-8") as fh:
                G = parse_group_file(fh.read(), name="file-group")
            gname = args.group_file
        cocycle = None
        if args.cocycle_file:
            with open(args.cocycle_file, "r", encoding="utf-8") as fh:
                cocycle = parse_cocycle_file(fh.read(), G)
    except (KeyError, OSError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    start = time.perf_counter()
    try:
        checks = run_suite_checks(args.suite, G, args.tol, args.seed, cocycle)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # structural failures are reported, not swallowed
        checks = [{"name": "suite execution", "tol": args.tol, "pass": False,
                   "detail": f"{type(exc).__name__}: {exc}"}]
    elapsed = (time.perf_counter() - start) * 1000.0

    report = {
        "suite": args.suite,
        "group": gname,
        "seed": args.seed,
        "tol": args.tol,
        "pass": all(c["pass"] for c in checks),
        "checks": checks,
        "elapsed_ms": elapsed,
    }
    if args.report == "json":
        print(json.dumps(report))
    else:
        print(_table(report))
    print(_table(report), file=sys.stderr)
    return 0 if report["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
