"""
Command Line Interface
- verify, rtable, mu, search and selftest subcommands
- verify --pairs recomputes written search records
- Exit codes: 0 counterexample certified, 1 checks ran and failed, 2 invalid input or file error
"""

import argparse
import csv
import sys
from pathlib import Path
from typing import Optional, Sequence

from config import Settings, load_run_config, load_settings
from finite_fields import least_primitive_polynomial, make_field, set_max_field_order
from metrics import RunMetrics
from utils import ZassenhausError, get_logger, setup_logging
from zassenhaus import mu_table, parse_record, r_rows, r_table, recheck_record, search_prime_pairs
from .appender import SearchAppender
from .pipeline import run_verification
from .selftest import run_selftest

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2

log = get_logger(__name__)


def _poly(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"polynomial must be C1,C0, got {text!r}")
    return int(parts[0]), int(parts[1])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zassenhaus", description="Counterexample certificates for G(p,q;d)")
    parser.add_argument("--log-level", default=None, help="Override ZASSENHAUS_LOG_LEVEL")
    parser.add_argument("--metrics-file", default=None, help="Write Prometheus metrics to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="Run every check on a configuration, or re-check search output")
    source = verify.add_mutually_exclusive_group(required=True)
    source.add_argument("--config")
    source.add_argument("--pairs", help="Search output to re-check line by line")
    verify.add_argument("--effective-check", action="store_true", help="With --pairs, rerun the eps check")
    verify.add_argument("--aux-prime", type=int, action="append", dest="aux_primes")
    verify.add_argument("--out", default=None, help="Write the JSON report here instead of stdout")

    rtable = sub.add_parser("rtable", help="Print the r-table of one prime")
    rtable.add_argument("-p", type=int, required=True)
    rtable.add_argument("-d", type=int, required=True)
    rtable.add_argument("--poly", type=_poly, default=None)
    rtable.add_argument("--csv", default=None)

    mu = sub.add_parser("mu", help="Print the multiplicity tables of both sides")
    mu.add_argument("--config", required=True)

    search = sub.add_parser("search", help="Search prime pairs above the threshold")
    search.add_argument("-d", type=int, required=True)
    search.add_argument("-M", type=int, required=True, dest="m")
    search.add_argument("--max", type=int, required=True, dest="p_max")
    search.add_argument("--out", required=True)
    search.add_argument("--effective-check", action="store_true")

    sub.add_parser("selftest", help="Run the oracle-equivalence suites")
    return parser


def cmd_verify(args, settings: Settings, metrics: RunMetrics) -> int:
    if args.pairs:
        return cmd_verify_pairs(args, settings, metrics)
    cfg = load_run_config(args.config)
    report = run_verification(cfg, settings, args.aux_primes, metrics)
    text = report.model_dump_json(indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    for reason in report.reasons:
        print(f"reason: {reason}", file=sys.stderr)
    log.info("verify finished", command="verify", p=cfg.p, q=cfg.q, d=cfg.d,
             outcome="counterexample" if report.is_counterexample else "failed")
    return EXIT_OK if report.is_counterexample else EXIT_FAILED


def cmd_verify_pairs(args, settings: Settings, metrics: RunMetrics) -> int:
    lines = [line for line in Path(args.pairs).read_text().splitlines() if line.strip()]
    records = [parse_record(line) for line in lines]
    mismatches = 0
    for record in records:
        with metrics.time_check("recheck"):
            result = recheck_record(
                record,
                effective=args.effective_check,
                sample_size=settings.effective_sample_size,
                box_limit=settings.exhaustive_box_limit,
                seed=settings.random_seed,
            )
        status = "ok" if result.matches else f"MISMATCH recomputed {result.recomputed.to_line()}"
        eff = result.recomputed.effective
        if eff is not None:
            status += f" ({eff.mode} eps check: {eff.failures} of {eff.checked} failed)"
        print(f"{record.to_line()}: {status}")
        mismatches += not result.matches
    print(f"{len(records) - mismatches}/{len(records)} records reproduced")
    log.info("pairs re-checked", command="verify", records=len(records), mismatches=mismatches)
    return EXIT_FAILED if mismatches else EXIT_OK


def cmd_rtable(args) -> int:
    poly = args.poly or least_primitive_polynomial(args.p)
    fld = make_field(args.p, *poly)
    table = r_table(fld, args.d)
    print(str(table.one_indexed()))
    rows = r_rows(fld, args.d)
    for row in rows:
        print(f"x={row.x:>4}  Nr={row.signed_norm:>5}  class={row.one_indexed_class}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["x", "norm", "signed_norm", "class", "class_0"])
            for row in rows:
                writer.writerow([row.x, row.norm, row.signed_norm, row.one_indexed_class, row.cls])
    log.info("rtable printed", command="rtable", p=args.p, d=args.d)
    return EXIT_OK


def cmd_mu(args) -> int:
    cfg = load_run_config(args.config)
    params = cfg.to_params()
    eps = cfg.to_epsilon()
    negative = False
    for prime in (params.p, params.q):
        table = mu_table(params, eps, prime)
        print(f"{prime}-side: trivial={table.trivial} kernel-N={table.n_kernel} "
              f"kernel-U={table.u_kernel} cosets={table.cosets}")
        negative = negative or not table.is_nonnegative
    return EXIT_FAILED if negative else EXIT_OK


def cmd_search(args, settings: Settings, metrics: RunMetrics) -> int:
    appender = SearchAppender(args.out)
    result = search_prime_pairs(
        args.d, args.m, args.p_max,
        effective=args.effective_check,
        workers=settings.search_workers,
        sample_size=settings.effective_sample_size,
        box_limit=settings.exhaustive_box_limit,
        seed=settings.random_seed,
        sink=appender,
        metrics=metrics,
    )
    print(f"threshold {result.threshold:g}")
    for cand in result.candidates:
        if not cand.above_threshold:
            continue
        print(f"p={cand.p}: {cand.status}")
    below = [c.p for c in result.candidates if not c.above_threshold]
    if below:
        print(f"{len(below)} primes below threshold: per-eps check required")
    print(f"{len(result.pairs)} pairs written to {args.out}")
    failed = any(r.effective is not None and r.guaranteed and not r.effective.passed for r in result.pairs)
    failed = failed or not all(check.passes for check in result.gauss)
    log.info("search finished", command="search", d=args.d, m=args.m, pairs=len(result.pairs))
    return EXIT_FAILED if failed else EXIT_OK


def cmd_selftest() -> int:
    results = run_selftest()
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}")
    passed = sum(1 for r in results if r.passed)
    print(f"{passed}/{len(results)} suites passed")
    return EXIT_OK if passed == len(results) else EXIT_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INVALID

    try:
        settings = load_settings()
        setup_logging(args.log_level or settings.log_level)
        set_max_field_order(settings.max_field_order)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID

    metrics = RunMetrics()
    try:
        if args.command == "verify":
            code = cmd_verify(args, settings, metrics)
        elif args.command == "rtable":
            code = cmd_rtable(args)
        elif args.command == "mu":
            code = cmd_mu(args)
        elif args.command == "search":
            code = cmd_search(args, settings, metrics)
        else:
            code = cmd_selftest()
    except ZassenhausError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        log.error("invalid input", command=args.command, error=type(e).__name__)
        code = EXIT_INVALID
    except OSError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        log.error("file access failed", command=args.command, error=type(e).__name__)
        code = EXIT_INVALID

    metrics_file = args.metrics_file or settings.metrics_file
    if metrics_file:
        metrics.write(metrics_file)
    return code


if __name__ == "__main__":
    sys.exit(main())
