"""Command-line surface: enumeration, polynomials, verification, search.

Record streams are JSON Lines by default (``--format csv`` for delimited
output with a documented header).  Data records are byte-deterministic for
a fixed configuration; timings go to stderr only.

Exit codes: 0 success, 1 assertion failure in a verify suite, 2 usage or
validation error, 3 enumeration cap exceeded.  ``CORELATTICE_CAP``
overrides the default enumeration cap.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import ehrhart, perms, qpoly, qt
from .errors import CapExceededError
from .simplex import (
    DEFAULT_CAP,
    SimplexSpec,
    armstrong_average,
    core_record,
    enumerate_cores,
    rational_catalan,
)
from .suites import SUITE_NAMES, build_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _json_line(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _env_cap() -> int:
    raw = os.environ.get("CORELATTICE_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"CORELATTICE_CAP must be an integer, got {raw!r}") from exc
    if cap <= 0:
        raise ValueError("CORELATTICE_CAP must be positive")
    return cap


def _open_output(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def _ints_csv(values) -> str:
    return " ".join(str(v) for v in values)


def cmd_enumerate(args, out) -> int:
    spec = SimplexSpec(args.a, args.b)
    cores = enumerate_cores(spec, args.cap)
    records = [core_record(spec, cv) for cv in cores]
    total = sum(r["size"] for r in records)
    average = Fraction(total, len(records))
    if args.summary:
        summary = {
            "a": args.a,
            "b": args.b,
            "count": len(records),
            "total_size": total,
            "average_size": str(average),
            "average_size_expected": str(armstrong_average(args.a, args.b)),
        }
        print(_json_line(summary), file=out)
        return EXIT_OK
    if args.format == "csv":
        print("charges,z,partition,size,length,skew_length,co_skew_length", file=out)
        for r in records:
            print(
                ",".join(
                    (
                        _ints_csv(r["charges"]),
                        _ints_csv(r["z"]),
                        _ints_csv(r["partition"]),
                        str(r["size"]),
                        str(r["length"]),
                        str(r["skew_length"]),
                        str(r["co_skew_length"]),
                    )
                ),
                file=out,
            )
        print(f"# count={len(records)} total_size={total} average_size={average}", file=out)
    else:
        for r in records:
            print(_json_line({"type": "core", **r}), file=out)
        footer = {
            "type": "summary",
            "count": len(records),
            "total_size": total,
            "average_size": str(average),
            "average_size_expected": str(armstrong_average(args.a, args.b)),
        }
        print(_json_line(footer), file=out)
    return EXIT_OK


def cmd_poly(args, out) -> int:
    spec = SimplexSpec(args.a, args.b)
    catq = qpoly.cat_q(args.a, args.b)
    catqt = qt.cat_qt(spec, args.cap)
    report = {
        "a": args.a,
        "b": args.b,
        "catalan": rational_catalan(args.a, args.b),
        "cat_q": catq.to_pairs(),
        "cat_qt": catqt.to_triples(),
        "qt_symmetric": catqt == catqt.swapped(),
        "qt_specialization": qt.check_specialization(spec, args.cap),
        "unimodality": [
            {"residue": r.residue, "coefficients": list(r.coefficients), "unimodal": r.unimodal}
            for r in qpoly.unimodality_report(catq, args.a)
        ],
    }
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["key", "value"])
        for key, value in report.items():
            writer.writerow([key, json.dumps(value, separators=(",", ":"))])
    else:
        print(_json_line(report), file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    checks = build_suite(
        args.suite,
        a_max=args.a_max,
        b_max=args.b_max,
        n_max=args.n_max,
        k_max=args.k_max,
        radius=args.radius,
        cap=args.cap,
    )
    jobs = args.jobs or os.cpu_count() or 1

    def run(check):
        start = time.monotonic()
        ok, detail = check.run()
        return ok, detail, time.monotonic() - start

    if jobs > 1 and len(checks) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run, checks))
    else:
        results = [run(check) for check in checks]

    failures = 0
    for check, (ok, detail, elapsed) in zip(checks, results):
        record = {"check": check.name, "params": check.params, "pass": ok}
        if check.exploration:
            record["exploration"] = True
        if detail is not None:
            record["detail"] = detail
        if not args.summary:
            print(_json_line(record), file=out)
        print(f"[corelattice] {check.name} {check.params} in {elapsed*1000:.1f}ms", file=sys.stderr)
        if not ok and not check.exploration:
            failures += 1
    summary = {"suite": args.suite, "checks": len(checks), "failures": failures}
    print(_json_line({"type": "summary", **summary}), file=out)
    return EXIT_OK if failures == 0 else EXIT_FAIL


def cmd_perm(args, out) -> int:
    dist = perms.distribution(args.n)
    report = {
        "n": args.n,
        "distribution": dist.to_triples(),
        "total": dist.total(),
        "sizmaj2": dist == perms.sizmaj_product(args.n),
        "ld_weights": perms.check_ld_weights(args.n),
        "sqin": perms.check_sqin_relation(args.n),
    }
    print(_json_line(report), file=out)
    return EXIT_OK


def cmd_ehrhart(args, out) -> int:
    if args.residue is not None:
        counts = ehrhart.core_count_series(args.a, args.residue, args.samples, cap=args.cap)
        sums = ehrhart.core_qsum_series(args.a, args.residue, args.samples, cap=args.cap)
        report = {
            "a": args.a,
            "residue": args.residue % args.a,
            "counts": [[b, n] for b, n in sorted(counts.items())],
            "size_sums": [[b, n] for b, n in sorted(sums.items())],
        }
        print(_json_line(report), file=out)
        return EXIT_OK
    f, g, p = ehrhart.fit_core_polynomials(args.a, cap=args.cap)
    report = {
        "a": args.a,
        "count_poly": [str(c) for c in f],
        "size_sum_poly": [str(c) for c in g],
        "average_poly": [str(c) for c in p],
        "root_structure": ehrhart.check_root_structure(args.a, args.cap),
    }
    print(_json_line(report), file=out)
    return EXIT_OK


def cmd_search_age(args, out) -> int:
    if args.b_list:
        try:
            b_list = [int(v) for v in args.b_list.split(",") if v.strip()]
        except ValueError as exc:
            raise ValueError(f"--b-list must be a comma-separated integer list: {exc}") from exc
    else:
        b_list = [args.a * j + 1 for j in range(1, 4)]
    result = qpoly.search_age_function(args.a, b_list, cap=args.cap)
    report = {
        "a": result.a,
        "b_list": list(result.b_list),
        "found": result.found,
        "age_product_ok": result.age_product_ok,
        "reason": result.reason,
        "shifts": (
            [
                {"coset": list(lab), "shift": s, "simplex_size": result.simplex_sizes[lab]}
                for lab, s in sorted(result.shifts.items())
            ]
            if result.found
            else None
        ),
    }
    print(_json_line(report), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corelattice",
        description="Simultaneous (a,b)-core partitions as lattice points: "
        "enumeration, statistics, polynomials, and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv"), default="json", help="record format")
        p.add_argument("--output", default=None, help="output path (default: stdout)")
        p.add_argument("--cap", type=int, default=None, help="enumeration cap (default: CORELATTICE_CAP or 10^7)")

    p_enum = sub.add_parser("enumerate", help="list all (a,b)-cores with their statistics")
    p_enum.add_argument("a", type=int)
    p_enum.add_argument("b", type=int)
    p_enum.add_argument("--summary", action="store_true", help="emit the summary object only")
    common(p_enum)
    p_enum.set_defaults(fn=cmd_enumerate)

    p_poly = sub.add_parser("poly", help="q- and (q,t)-Catalan polynomials and verdicts")
    p_poly.add_argument("a", type=int)
    p_poly.add_argument("b", type=int)
    common(p_poly)
    p_poly.set_defaults(fn=cmd_poly)

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument("suite", choices=SUITE_NAMES)
    p_verify.add_argument("--a-max", type=int, default=None)
    p_verify.add_argument("--b-max", type=int, default=None)
    p_verify.add_argument("--n-max", type=int, default=None)
    p_verify.add_argument("--k-max", type=int, default=None)
    p_verify.add_argument("--radius", type=int, default=None, help="charge box radius for the quadratic suite")
    p_verify.add_argument("--jobs", type=int, default=None, help="parallel checks (default: cpu count)")
    p_verify.add_argument("--summary", action="store_true", help="emit the summary object only")
    common(p_verify)
    p_verify.set_defaults(fn=cmd_verify)

    p_perm = sub.add_parser("perm", help="permutation statistic distribution and identities")
    p_perm.add_argument("n", type=int)
    common(p_perm)
    p_perm.set_defaults(fn=cmd_perm)

    p_ehr = sub.add_parser("ehrhart", help="fit the core count/size polynomials for a modulus")
    p_ehr.add_argument("a", type=int)
    p_ehr.add_argument("--residue", type=int, default=None, help="emit the raw series for one residue class instead")
    p_ehr.add_argument("--samples", type=int, default=6, help="series length for --residue")
    common(p_ehr)
    p_ehr.set_defaults(fn=cmd_ehrhart)

    p_age = sub.add_parser("search-age", help="search for coset shifts decomposing cat_q")
    p_age.add_argument("a", type=int)
    p_age.add_argument("--b-list", default=None, help="comma-separated b values (one residue class mod a)")
    common(p_age)
    p_age.set_defaults(fn=cmd_search_age)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.cap is None:
            args.cap = _env_cap()
        out, close = _open_output(args.output)
        try:
            return args.fn(args, out)
        finally:
            if close:
                out.close()
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
