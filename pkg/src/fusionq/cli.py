"""Command-line front end: compute, verify, bench, list-tableaux.

Exit codes: 0 success, 1 a verification check failed, 2 usage error,
3 a mathematical invariant was violated (for example an unexpected pole).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from fractions import Fraction
from pathlib import Path

from .cache import CacheKey, ResultCache
from .exact_arith import PoleError
from .fusion import FusionResult, FusionSpec, evaluate_F, evaluate_G
from .numeric import DEFAULT_SEED
from .repr_tools import evaluate_at
from .serialize import dumps, result_to_json
from .tableaux import GROUP_MODES, hook_tableau, parse_partition, standard_tableaux
from .verify import SUITES, Verifier, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3

# symbolic evaluation beyond this size is slow enough that bench skips it
SYMBOLIC_BENCH_MAX_N = 6

log = logging.getLogger("fusionq")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _shape(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _select_tableau(shape, selector: str):
    if selector == "hook":
        return hook_tableau(shape)
    try:
        k = int(selector)
    except ValueError:
        raise UsageError(f"--tableau must be 'hook' or an index, got {selector!r}") from None
    tabs = standard_tableaux(shape)
    if not 0 <= k < len(tabs):
        raise UsageError(f"tableau index {k} out of range 0..{len(tabs) - 1}")
    return tabs[k]


def _write(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _compute(T, variant: str, kind: str, mode: str, q0, seed: int) -> FusionResult:
    if kind == "F":
        return evaluate_F(FusionSpec(T, variant), mode, q0, seed)
    return evaluate_G(T, mode, q0, variant, seed)


def cmd_compute(args) -> int:
    shape = _shape(args.shape)
    T = _select_tableau(shape, args.tableau)
    try:
        q0 = Fraction(args.q0) if args.q0 else None
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--q0 must be a rational number, got {args.q0!r}") from None
    if q0 is not None and (q0 == 0 or abs(q0) == 1):
        raise UsageError("--q0 must differ from 0 and +-1")
    key = CacheKey(T, args.variant, args.kind, args.mode, q0,
                   args.seed if args.mode == "numeric" else None)
    compute = lambda: _compute(T, args.variant, args.kind, args.mode, q0, args.seed)
    result = compute() if args.no_cache else ResultCache().get_or_compute(key, compute)
    _write(dumps(result_to_json(result)), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_n < 1:
        raise UsageError("--max-n must be positive")
    names = list(SUITES) if args.suite == "all" else args.suite.split(",")
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {unknown}; choose from {sorted(SUITES)} or 'all'")
    verifier = Verifier(args.max_n, args.mode, args.seed)
    records = run_suites(names, verifier)
    report = {"suites": names, "max_n": args.max_n, "mode": args.mode,
              "checks": [r.to_json() for r in records]}
    failed = [r for r in records if not r.passed]
    summary = f"{len(records) - len(failed)}/{len(records)} checks passed"
    log.info(summary)
    if args.report:
        Path(args.report).write_text(dumps(report), encoding="utf-8")
    else:
        sys.stdout.write(dumps(report))
    print(summary, file=sys.stderr)
    for r in failed:
        print(f"FAIL {r.check} shape={r.shape} tableau={r.tableau} {r.detail}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_bench(args) -> int:
    shape = _shape(args.shape)
    if args.repetitions < 1:
        raise UsageError("--repetitions must be at least 1")
    T = hook_tableau(shape)
    spec = FusionSpec(T)
    rows = []
    results = {}
    for mode in ("symbolic", "numeric"):
        if mode == "symbolic" and shape.n > SYMBOLIC_BENCH_MAX_N:
            rows.append((mode, None, f"skipped: n > {SYMBOLIC_BENCH_MAX_N}"))
            continue
        times = []
        for _ in range(args.repetitions):
            t0 = time.perf_counter()
            results[mode] = evaluate_F(spec, mode, seed=args.seed)
            times.append(time.perf_counter() - t0)
        rows.append((mode, min(times), f"{len(results[mode].element)} terms"))
    if len(results) == 2:
        num = results["numeric"]
        equal = evaluate_at(results["symbolic"].element, num.q0) == num.element
    else:
        equal = None
    print(f"{'mode':10s} {'seconds':>10s}  note")
    for mode, sec, note in rows:
        print(f"{mode:10s} {('%.4f' % sec) if sec is not None else '-':>10s}  {note}")
    print(f"equal results: {'n/a' if equal is None else str(equal).lower()}")
    return EXIT_OK if equal is not False else EXIT_INVARIANT


def cmd_list_tableaux(args) -> int:
    shape = _shape(args.shape)
    hook = hook_tableau(shape)
    for k, T in enumerate(standard_tableaux(shape)):
        mark = "  (hook tableau)" if T == hook else ""
        print(f"{k}: {json.dumps(T.to_lists())}{mark}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fusionq", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="evaluate F or G for one tableau and print JSON")
    c.add_argument("--shape", required=True, help="partition such as 3,3,2")
    c.add_argument("--tableau", default="hook", help="'hook' or an index from list-tableaux")
    c.add_argument("--variant", choices=GROUP_MODES, default="hook")
    c.add_argument("--kind", choices=("F", "G"), default="F")
    c.add_argument("--mode", choices=("symbolic", "numeric"), default="symbolic")
    c.add_argument("--q0", help="rational sample point for numeric mode, e.g. 3/7")
    c.add_argument("--seed", type=int, default=DEFAULT_SEED)
    c.add_argument("--out", help="output file (default stdout)")
    c.add_argument("--no-cache", action="store_true", help="bypass the result cache")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="run property suites and write a JSON report")
    v.add_argument("--suite", default="all",
                   help="'all' or a comma-separated list of: " + ", ".join(SUITES))
    v.add_argument("--max-n", type=int, default=4)
    v.add_argument("--mode", choices=("symbolic", "numeric"), default="symbolic")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--report", help="report file (default stdout)")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time symbolic against numeric evaluation of F")
    b.add_argument("--shape", required=True)
    b.add_argument("--repetitions", type=int, default=1)
    b.add_argument("--seed", type=int, default=DEFAULT_SEED)
    b.set_defaults(func=cmd_bench)

    t = sub.add_parser("list-tableaux", help="enumerate standard tableaux of a shape")
    t.add_argument("--shape", required=True)
    t.set_defaults(func=cmd_list_tableaux)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PoleError, ZeroDivisionError, ArithmeticError) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
