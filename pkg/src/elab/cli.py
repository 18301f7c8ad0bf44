"""Command-line entry point: estimates, tables, figure data, verify, serve.

All numeric output is serialized at 17 significant digits (binary64
round-trip exact); identical invocations with identical seeds produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import io
import sys
from contextlib import redirect_stdout
from dataclasses import dataclass
from typing import Optional

from . import figures, limits, loginv, odesolve, series, slopes, verify
from .config import CONFIG
from .records import ConvergenceRecord
from .serialize import fmt_float, records_to_csv, records_to_json, to_json

TABLE_KINDS = ("compound", "compound-x", "series", "euler", "pitfall", "sinc")
ESTIMATE_METHODS = ("stretch", "compound", "series", "euler", "log-inverse")


@dataclass(frozen=True)
class EstimateReport:
    method: str
    parameters: dict
    estimate: float
    error_vs_reference: float
    certificate: Optional[float] = None


def parse_grid(spec: str) -> list[int]:
    """Grid mini-language: ``pow10:a..b``, ``dyadic:a..b``, or ``list:1,2,3``.

    pow10 yields 10**a .. 10**b; dyadic yields the exponents a..b themselves
    (table kinds interpret them: n = 2**k for n-grids, h = 2**-k for sinc).
    """
    try:
        scheme, _, rest = spec.partition(":")
        if scheme == "list":
            vals = [int(s) for s in rest.split(",") if s != ""]
            if not vals:
                raise ValueError
            return vals
        a_s, _, b_s = rest.partition("..")
        a, b = int(a_s), int(b_s)
        if b < a:
            raise ValueError
        if scheme == "pow10":
            return [10 ** k for k in range(a, b + 1)]
        if scheme == "dyadic":
            return [k for k in range(a, b + 1)]
        raise ValueError
    except ValueError:
        raise SystemExit(2) from None


def _compound_bound(n: int) -> Optional[float]:
    if n > 10 ** 4:
        return None
    m = min(n, 25)
    # certificate bounds the distance to the true limit; the extra 1e-15
    # absorbs the binary64 evaluation and the 16-digit reference offset.
    return series.series_error_certificate(n, m) + 1e-15


def build_table(kind: str, grid: list[int], x: float, c_values: list[float],
                refined: bool, parallel: bool) -> list[ConvergenceRecord]:
    e_ref = CONFIG.e_reference

    def compound_row(n: int) -> ConvergenceRecord:
        v = limits.compound(n)
        return ConvergenceRecord(n, v, v - e_ref, _compound_bound(n))

    if kind == "compound":
        rows = _map_rows(compound_row, grid, parallel)
    elif kind == "compound-x":
        ref = series.taylor_exp(x, 1e-15).partial_sum
        rows = [ConvergenceRecord(n, limits.compound_x(x, n), limits.compound_x(x, n) - ref)
                for n in grid]
    elif kind == "series":
        rows = []
        for m in grid:
            v = series.factorial_partial_sum(m)
            rows.append(ConvergenceRecord(m, v, v - e_ref, series.tail_bound(m) + 1e-15))
    elif kind == "euler":
        ref = series.taylor_exp(x, 1e-15).partial_sum
        rows = [ConvergenceRecord(n, odesolve.euler_final(x, n),
                                  odesolve.euler_final(x, n) - ref) for n in grid]
    elif kind == "pitfall":
        rows = []
        for c in c_values:
            ref = series.taylor_exp(c, 1e-15).partial_sum
            for n in grid:
                v = limits.compound_x(c, n)
                rows.append(ConvergenceRecord(n, v, v - ref))
        if refined:
            for n in grid:
                v = limits.refined_compound(n)
                rows.append(ConvergenceRecord(n, v, v - e_ref))
    elif kind == "sinc":
        rows = series.sinc_limit_table(grid)
    else:
        raise SystemExit(2)
    return rows


def _map_rows(fn, grid, parallel):
    if not parallel:
        return [fn(n) for n in grid]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=4) as pool:
        return list(pool.map(fn, grid))  # map preserves order: deterministic


def cmd_estimate(args) -> int:
    e_ref = CONFIG.e_reference
    method = args.method
    if method == "stretch":
        est = slopes.estimate_e_by_stretch(args.base, args.h)
        report = EstimateReport(method, {"base": args.base, "h": args.h}, est, est - e_ref)
    elif method == "compound":
        est = limits.compound(args.n)
        report = EstimateReport(method, {"n": args.n}, est, est - e_ref,
                                _compound_bound(args.n))
    elif method == "series":
        est = series.factorial_partial_sum(args.terms)
        report = EstimateReport(method, {"terms": args.terms}, est, est - e_ref,
                                series.tail_bound(args.terms) + 1e-15)
    elif method == "euler":
        est = odesolve.euler_final(1.0, args.n)
        report = EstimateReport(method, {"n": args.n, "x": 1.0}, est, est - e_ref)
    elif method == "log-inverse":
        est = _solve_log_equals_one()
        report = EstimateReport(method, {}, est, est - e_ref)
    else:
        raise SystemExit(2)
    _emit(args, to_json(report) + "\n")
    return 0


def _solve_log_equals_one() -> float:
    """The number whose natural log is 1, found by bisecting nat_log itself."""
    lo, hi = 2.0, 4.0
    while True:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            return mid
        if loginv.nat_log(mid).value < 1.0:
            lo = mid
        else:
            hi = mid


def cmd_table(args) -> int:
    grid = parse_grid(args.grid)
    c_values = [float(s) for s in args.c.split(",")] if args.c else [1.0]
    rows = build_table(args.kind, grid, args.x, c_values, args.refined, args.parallel)
    fmt = args.format or "csv"
    _emit(args, records_to_csv(rows) if fmt == "csv" else records_to_json(rows) + "\n")
    return 0


def cmd_figures(args) -> int:
    fig = figures.build_figure(args.figure, args.samples)
    payload = {
        "figure_id": fig.figure_id,
        "curves": [{"label": c.label, "points": [[x, y] for x, y in c.points]} for c in fig.curves],
    }
    _emit(args, to_json(payload) + "\n")
    return 0


def cmd_verify(args) -> int:
    suites = [args.suite] if args.suite else None
    results = verify.run(suites, seed=args.seed)
    failures = [r for r in results if not r.ok]
    lines = []
    for r in results:
        status = "ok  " if r.ok else "FAIL"
        detail = f"  ({r.detail})" if r.detail else ""
        lines.append(f"{status} {r.suite}.{r.check}{detail}")
    n_suites = len({r.suite for r in results})
    lines.append(
        f"{n_suites} suite(s), {len(results)} checks, "
        f"{len(results) - len(failures)} passed, {len(failures)} failed"
    )
    _emit(args, "\n".join(lines) + "\n")
    return 1 if failures else 0


def cmd_serve(args) -> int:
    from .serve import run_server

    return run_server(args.port, static_dir=args.static)


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_global_flags(p: argparse.ArgumentParser, top_level: bool) -> None:
    """Install the shared flags on the top parser and on every subparser.

    Subparser copies default to SUPPRESS so a flag given before the
    subcommand is not clobbered by a trailing default.
    """
    d = dict(default=argparse.SUPPRESS) if not top_level else {}
    p.add_argument("--format", choices=("csv", "json"),
                   help="output format where applicable (tables default to csv)", **d)
    p.add_argument("--seed", type=int, help="seed for sampled checks", **d)
    p.add_argument("--out", help="write output to this path instead of stdout", **d)
    if top_level:
        p.set_defaults(format=None, seed=0, out=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="elab",
        description="Constructions of the natural exponential base, cross-verified.",
    )
    _add_global_flags(parser, top_level=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("estimate", help="single estimate via one construction")
    _add_global_flags(p, top_level=False)
    p.add_argument("--method", choices=ESTIMATE_METHODS, required=True)
    p.add_argument("--base", type=float, default=3.0)
    p.add_argument("--h", type=float, default=1e-4)
    p.add_argument("--n", type=int, default=10 ** 6)
    p.add_argument("--terms", type=int, default=17)
    p.set_defaults(fn=cmd_estimate)

    p = sub.add_parser("table", help="convergence table rows")
    _add_global_flags(p, top_level=False)
    p.add_argument("--kind", choices=TABLE_KINDS, required=True)
    p.add_argument("--grid", required=True, help="pow10:a..b | dyadic:a..b | list:v1,v2,...")
    p.add_argument("--x", type=float, default=1.0, help="exponent for compound-x / euler")
    p.add_argument("--c", default=None, help="comma-separated c values for pitfall")
    p.add_argument("--refined", action="store_true",
                   help="append the o(1/n)-corrected pitfall block")
    p.add_argument("--parallel", action="store_true", help="parallelize rows (same output)")
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("figures", help="figure data as labeled point sequences")
    _add_global_flags(p, top_level=False)
    p.add_argument("--figure", choices=figures.FIGURE_IDS, required=True)
    p.add_argument("--samples", type=int, default=129)
    p.set_defaults(fn=cmd_figures)

    p = sub.add_parser("verify", help="run invariant suites")
    _add_global_flags(p, top_level=False)
    p.add_argument("--suite", choices=tuple(verify.SUITES), default=None)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("serve", help="local JSON service for the explorer")
    _add_global_flags(p, top_level=False)
    p.add_argument("--port", type=int, default=8642)
    p.add_argument("--static", default=None, help="also serve this directory at /")
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def capture_command(argv: list[str]) -> tuple[str, int]:
    """Run a CLI invocation in-process, capturing stdout (test/parity hook)."""
    buf = io.StringIO()
    try:
        with redirect_stdout(buf):
            code = main(argv)
    except SystemExit as exc:  # argparse errors
        code = exc.code if isinstance(exc.code, int) else 2
    return buf.getvalue(), code


if __name__ == "__main__":
    sys.exit(main())
