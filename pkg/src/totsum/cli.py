"""Command-line interface.

Subcommands:

* compute: print one exact value of psi, delta, or upsilon.
* verify:  sweep one identity suite (or all of them) and report.
* scan:    profile a quantity against its main term over a grid,
           emitting CSV, JSON lines, or a plain table.
* bench:   time the table-summation and recursive summatory routes
           against each other, cross-checking their values.

Exit codes: 0 success, 1 runtime or correctness failure (including a
bench value disagreement), 2 usage error (bad flags, composite p,
malformed grid or config).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Sequence

from .asymptotics import (
    QUANTITIES,
    ErrorRecord,
    average_profile,
    cumulative_profile,
    delta_error_profile,
)
from .config import OUTPUT_FORMATS, Config, apply_overrides, load_config
from .errors import CapacityError
from .identities import _SUITE_DEFAULTS, SUITES, verify_suite
from .restricted import delta_via_psi, upsilon
from .sieve import build_sieve
from .summatory import PsiCache, _ceil_cbrt, psi_fast, psi_naive

CSV_HEADER = "x,p,quantity,exact,main,raw_error,normalized_error"


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles usage errors by exiting
        code = exc.code
        return code if isinstance(code, int) else (0 if code is None else 2)
    try:
        cfg = load_config(args.config)
        cfg = apply_overrides(
            cfg,
            sieve_limit=args.sieve_limit,
            memory_ceiling=args.memory_ceiling,
            output_format=args.output_format,
            precision_digits=args.precision_digits,
        )
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.func(args, cfg)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="totsum",
        description="Exact summatory totient sums, prime-restricted splits, "
        "identity verification, and main-term error profiles.",
    )
    parser.add_argument("--config", metavar="PATH", help="JSON config file")
    parser.add_argument("--sieve-limit", type=int, help="table length for sieved routes")
    parser.add_argument("--memory-ceiling", type=int, help="hard cap on table length")
    parser.add_argument(
        "--format", dest="output_format", choices=OUTPUT_FORMATS, help="scan output format"
    )
    parser.add_argument(
        "--precision",
        dest="precision_digits",
        type=int,
        help="significant digits for real-valued columns (6..30)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="print one exact value")
    c.add_argument("quantity", choices=("psi", "delta", "upsilon"))
    c.add_argument("--x", type=int, required=True, help="evaluation point, x >= 1")
    c.add_argument("--p", type=int, help="prime restriction (delta/upsilon)")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="sweep identity suites, report pass/fail")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--n-max", dest="n_max", type=int, help="override range upper bound")
    v.add_argument("--p-max", dest="p_max", type=int, help="override largest prime")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", help="error profile over a grid, CSV/JSON/plain")
    s.add_argument("quantity", choices=QUANTITIES)
    s.add_argument("--p", type=int, required=True, help="prime restriction")
    s.add_argument(
        "--grid",
        help="start:stop:xF geometric or start:stop:+S arithmetic, stop inclusive "
        "(default 1000:<sieve limit>:x2)",
    )
    s.add_argument("--out", metavar="PATH", help="write to file instead of stdout")
    s.set_defaults(func=cmd_scan)

    b = sub.add_parser("bench", help="time both summatory routes, cross-check values")
    b.add_argument("--x", type=int, nargs="+", required=True)
    b.set_defaults(func=cmd_bench)
    return parser


def parse_grid(expr: str) -> list[int]:
    """Expand start:stop:xF (geometric) or start:stop:+S (arithmetic).

    Stop is inclusive; points are the values start, start*F, ... or
    start, start+S, ... that do not exceed it.
    """
    parts = expr.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid {expr!r} must have the form start:stop:xF or start:stop:+S")
    try:
        start, stop = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"grid {expr!r} has non-integer bounds") from None
    if start < 1 or stop < start:
        raise ValueError(f"grid {expr!r} needs 1 <= start <= stop")
    step = parts[2]
    points: list[int] = []
    if step.startswith("x"):
        factor = _grid_int(step[1:], expr)
        if factor < 2:
            raise ValueError(f"grid {expr!r}: geometric factor must be >= 2")
        v = start
        while v <= stop:
            points.append(v)
            v *= factor
    elif step.startswith("+"):
        inc = _grid_int(step[1:], expr)
        if inc < 1:
            raise ValueError(f"grid {expr!r}: arithmetic step must be >= 1")
        points = list(range(start, stop + 1, inc))
    else:
        raise ValueError(f"grid {expr!r}: step must start with 'x' or '+'")
    return points


def _grid_int(text: str, expr: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"grid {expr!r} has a non-integer step") from None


def _cache_for(x: int, cfg: Config) -> PsiCache:
    """Cache sized ~x^(2/3), capped by the configured table limit."""
    auto = max(_ceil_cbrt(x * x), 32)
    return PsiCache.for_target(
        x, sieve_limit=min(auto, cfg.sieve_limit), memory_ceiling=cfg.memory_ceiling
    )


def cmd_compute(args: argparse.Namespace, cfg: Config) -> int:
    if args.x < 1:
        raise ValueError(f"x={args.x} must be >= 1")
    if args.quantity in ("delta", "upsilon") and args.p is None:
        raise ValueError(f"{args.quantity} requires --p, a prime")
    cache = _cache_for(args.x, cfg)
    if args.quantity == "psi":
        value = cache.psi(args.x)
    elif args.quantity == "delta":
        value = delta_via_psi(args.x, args.p, cache)
    else:
        value = upsilon(args.x, args.p, cache)
    print(value)
    return 0


def cmd_verify(args: argparse.Namespace, cfg: Config) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    limit = _verify_limit(names, args.n_max, args.p_max)
    sieve = build_sieve(limit, cfg.memory_ceiling)
    cache = PsiCache(sieve)
    failed = 0
    for name in names:
        params = {"n_max": args.n_max, "p_max": args.p_max}
        if name == "omega":
            params.pop("p_max")
        report = verify_suite(name, sieve, params, cache)
        print(f"{name}: checked={report.checked} failures={report.failures}")
        if report.failures:
            failed += 1
            point, lhs, rhs = report.first_counterexample
            print(f"  first counterexample at {point}: lhs={lhs} rhs={rhs}")
    return 0 if failed == 0 else 1


def _verify_limit(names: Sequence[str], n_max: int | None, p_max: int | None) -> int:
    """Smallest sieve covering every requested suite's n and p range."""
    need = 32
    for name in names:
        defaults = _SUITE_DEFAULTS[name]
        need = max(need, n_max if n_max is not None else defaults["n_max"])
        if name == "omega":
            continue
        if p_max is not None:
            need = max(need, p_max)
        elif "primes" in defaults:
            need = max(need, max(defaults["primes"]))
        else:
            need = max(need, defaults["p_max"])
    return need


def cmd_scan(args: argparse.Namespace, cfg: Config) -> int:
    grid = parse_grid(args.grid if args.grid else f"1000:{cfg.sieve_limit}:x2")
    top = grid[-1]
    if args.quantity == "delta":
        records = delta_error_profile(args.p, grid, _cache_for(top, cfg))
    else:
        sieve = build_sieve(max(top, 32), cfg.memory_ceiling)
        profile = cumulative_profile if args.quantity == "cumulative" else average_profile
        records = profile(args.p, grid, sieve)
    text = render_records(records, cfg)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _format_exact(value: int | Fraction) -> str:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)  # full decimal, never scientific notation


def _format_real(value: float, digits: int) -> str:
    return f"{value:.{digits}g}"


def render_records(records: Sequence[ErrorRecord], cfg: Config) -> str:
    """Render profile records per the configured format, deterministically.

    CSV has the fixed header line; JSON mode emits one object per line
    with the same keys; plain mode is a whitespace-aligned table.
    """
    digits = cfg.precision_digits
    rows = [
        (
            str(r.x),
            str(r.p),
            r.quantity,
            _format_exact(r.exact),
            _format_real(r.main, digits),
            _format_real(r.raw_error, digits),
            _format_real(r.normalized_error, digits),
        )
        for r in records
    ]
    if cfg.output_format == "csv":
        lines = [CSV_HEADER] + [",".join(row) for row in rows]
        return "\n".join(lines) + "\n"
    if cfg.output_format == "json":
        lines = []
        for r, row in zip(records, rows):
            obj = {
                "x": r.x,
                "p": r.p,
                "quantity": r.quantity,
                "exact": r.exact if isinstance(r.exact, int) else row[3],
                "main": float(row[4]),
                "raw_error": float(row[5]),
                "normalized_error": float(row[6]),
            }
            lines.append(json.dumps(obj, separators=(", ", ": ")))
        return "\n".join(lines) + "\n"
    header = CSV_HEADER.split(",")
    widths = [max(len(h), *(len(row[i]) for row in rows)) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def cmd_bench(args: argparse.Namespace, cfg: Config) -> int:
    print(f"{'x':>14}  {'naive_s':>9}  {'fast_s':>9}  agree  value")
    alarm = False
    for x in args.x:
        if x < 1:
            raise ValueError(f"x={x} must be >= 1")
        t0 = time.perf_counter()
        cache = _cache_for(x, cfg)
        fast_value = cache.psi(x)
        fast_s = time.perf_counter() - t0
        if x <= min(cfg.sieve_limit, cfg.memory_ceiling):
            t0 = time.perf_counter()
            naive_value = psi_naive(x, build_sieve(x, cfg.memory_ceiling))
            naive_s = time.perf_counter() - t0
            agree = naive_value == fast_value
            naive_text = f"{naive_s:9.3f}"
        else:
            # table route skipped; recompute at a different table length
            # so the recursion is still checked against itself
            alt = cache.sieve.limit // 8 if cache.sieve.limit >= 256 else cache.sieve.limit * 8
            alt = max(32, min(alt, cfg.memory_ceiling))
            check = psi_fast(x, sieve_limit=alt)
            agree = check == fast_value
            naive_text = "  skipped"
        if not agree:
            alarm = True
        print(f"{x:>14}  {naive_text}  {fast_s:9.3f}  {str(agree).lower():>5}  {fast_value}")
    if alarm:
        print("correctness alarm: summatory routes disagree", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
