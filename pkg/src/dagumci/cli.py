"""Command-line interface: ``dagumci {ci,estimate,table,simulate,fit,sample}``.

Exit codes: 0 success, 2 invalid input, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import re
import secrets
import sys

from . import ci
from .dagum import DagumParams, RatioSpec, sample
from .errors import ConvergenceError, DomainError
from .estimator import (
    RatioEstimate,
    fit_dagum_mle,
    fit_dagum_quantiles,
    sample_quantile_ratio,
)
from .mc import SimulationConfig, reproduce_tables, run_coverage

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NUMERICAL = 3

TABLE_SPECS = {"t1": (0.2, 0.8), "t2": (0.1, 0.9)}


class UsageError(Exception):
    """Bad command-line input; reported with exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- data ingestion -----------------------------------------------------------

_SPLIT = re.compile(r"[,\s]+")


def read_incomes(path: str, skip_header: bool = False, column: int | None = None) -> list[float]:
    """Incomes from a text file, one record per line.

    Fields may be separated by commas or whitespace; files with more than one
    field per line need ``column`` (1-based). Blank lines are ignored.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    values = []
    for lineno, line in enumerate(lines, start=1):
        if skip_header and lineno == 1:
            continue
        text = line.strip()
        if not text:
            continue
        fields = [f for f in _SPLIT.split(text) if f]
        if column is None:
            if len(fields) != 1:
                raise UsageError(f"{path}:{lineno}: {len(fields)} fields found; select one with --column")
            field = fields[0]
        else:
            if column > len(fields):
                raise UsageError(f"{path}:{lineno}: no column {column}")
            field = fields[column - 1]
        try:
            x = float(field)
        except ValueError:
            raise UsageError(f"{path}:{lineno}: not a number: {field!r}") from None
        if not (math.isfinite(x) and x > 0):
            raise UsageError(f"{path}:{lineno}: income must be finite and positive, got {field!r}")
        values.append(x)
    if not values:
        raise UsageError(f"{path}: no income values found")
    return values


# -- formatting ---------------------------------------------------------------

def _interval_payload(iv: ci.ConfidenceInterval) -> dict:
    return {
        "lower": iv.lower,
        "upper": iv.upper,
        "level": iv.level,
        "under_risk": iv.under_risk,
        "over_risk": iv.over_risk,
        "length": iv.length,
    }


def emit_json(kind: str, payload: dict, out=None) -> None:
    out = out or sys.stdout
    out.write(json.dumps({"kind": kind, **payload}, indent=2) + "\n")


def _interval_lines(payload: dict) -> list[str]:
    lines = []
    short = payload.get("shortest")
    standard = payload.get("standard")
    if short is not None:
        lines.append(f"risk of overestimation: {short['over_risk']:.5f}")
        lines.append(f"risk of underestimation: {short['under_risk']:.5f}")
        lines.append(f"length of the shortest confidence interval: {short['length']:.6f}")
    if standard is not None:
        lines.append(f"length of the standard confidence interval: {standard['length']:.6f}")
    if "reduction_pct" in payload:
        lines.append(f"length reduction: {payload['reduction_pct']:.3f} %")
    if standard is not None:
        lines.append(f"standard c.i.: {standard['lower']:.6f} {standard['upper']:.6f}")
    if short is not None:
        lines.append(f"shortest c.i.: {short['lower']:.6f} {short['upper']:.6f}")
    return lines


def _table_lines(payload: dict) -> list[str]:
    lines = [
        f"alpha={payload['alpha']} beta={payload['beta']} n={payload['n']} level={payload['level']}",
        f"{'a':>5} {'r':>5} {'d1-d':>8} {'1-d1':>8} {'short':>10} {'standard':>10} {'reduction':>10}",
    ]
    for row in payload["rows"]:
        lines.append(
            f"{row['a']:>5.1f} {row['r_star']:>5.1f} {row['over_risk']:>8.5f} {row['under_risk']:>8.5f} "
            f"{row['short_length']:>10.6f} {row['standard_length']:>10.6f} {row['reduction_pct']:>9.3f}%"
        )
    return lines


def emit_table(kind: str, payload: dict, out=None) -> None:
    out = out or sys.stdout
    if kind == "interval":
        head = [f"r* = {payload['r_star']:.6f}  a = {payload['a']:.6f}  n = {payload['n']}"]
        lines = head + _interval_lines(payload)
    elif kind == "table":
        lines = _table_lines(payload)
    elif kind == "coverage":
        lines = [
            f"seed: {payload['seed']}",
            f"method: {payload['method']}  a: {payload['a_mode']}",
            f"true ratio: {payload['true_ratio']:.6f}",
            f"coverage: {payload['coverage']:.5f}",
            f"mean length: {payload['mean_length']:.6f}",
            f"mean risk of overestimation: {payload['mean_over_risk']:.5f}",
            f"true ratio above upper end: {payload['over_frequency']:.5f}",
            f"true ratio below lower end: {payload['under_frequency']:.5f}",
            f"replicates: {payload['replicates']}  failures: {payload['failures']}"
            + ("" if payload["valid"] else "  (INVALID: too many failures)"),
        ]
    elif kind == "fit":
        lines = [f"{k}: {payload[k]:.6f}" for k in ("a", "v", "lam")] + [f"n: {payload['n']}"]
    else:
        lines = [f"{x:.12g}" for x in payload["values"]]
    out.write("\n".join(lines) + "\n")


def _emit(args, kind: str, payload: dict) -> None:
    if args.format == "json":
        emit_json(kind, payload)
    else:
        emit_table(kind, payload)


# -- commands -----------------------------------------------------------------

def _interval_record(est: RatioEstimate, level: float, mode: str) -> dict:
    payload = {
        "alpha": est.spec.alpha,
        "beta": est.spec.beta,
        "n": est.n,
        "r_star": est.r_star,
        "a": est.a_hat,
        "level": level,
    }
    if mode in ("standard", "both"):
        payload["standard"] = _interval_payload(ci.standard_interval(est, level))
    if mode in ("shortest", "both"):
        payload["shortest"] = _interval_payload(ci.shortest_interval(est, level))
    if mode == "both":
        payload["reduction_pct"] = 100.0 * (
            1.0 - payload["shortest"]["length"] / payload["standard"]["length"]
        )
    return payload


def cmd_ci(args) -> int:
    if not args.r > 1:
        raise UsageError(f"--r must satisfy r* > 1, got {args.r}")
    est = RatioEstimate(
        r_star=args.r, n=args.n, spec=RatioSpec(args.alpha, args.beta), a_hat=args.a
    )
    _emit(args, "interval", _interval_record(est, args.level, args.mode))
    return EXIT_OK


def _fit(values, how: str) -> DagumParams:
    return fit_dagum_mle(values) if how == "mle" else fit_dagum_quantiles(values)


def cmd_estimate(args) -> int:
    values = read_incomes(args.file, args.skip_header, args.column)
    spec = RatioSpec(args.alpha, args.beta)
    r_star = sample_quantile_ratio(values, spec)
    if not r_star > 1:
        raise UsageError(f"sample quantile ratio r* = {r_star} does not exceed 1")
    a = args.a if args.a is not None else _fit(values, args.a_source).a
    est = RatioEstimate(r_star=r_star, n=len(values), spec=spec, a_hat=a)
    payload = _interval_record(est, args.level, "both")
    payload["a_source"] = "given" if args.a is not None else args.a_source
    _emit(args, "interval", payload)
    return EXIT_OK


def cmd_table(args) -> int:
    if args.which == "custom":
        if args.alpha is None or args.beta is None:
            raise UsageError("table custom needs --alpha and --beta")
        alpha, beta = args.alpha, args.beta
    else:
        alpha, beta = TABLE_SPECS[args.which]
    rows = reproduce_tables(RatioSpec(alpha, beta), n=args.n, level=args.level)
    payload = {
        "alpha": alpha,
        "beta": beta,
        "n": args.n,
        "level": args.level,
        "rows": [{**dataclasses.asdict(row), "reduction_pct": row.reduction_pct} for row in rows],
    }
    _emit(args, "table", payload)
    return EXIT_OK


def cmd_simulate(args) -> int:
    if args.seed is None:
        if args.format == "json":
            raise UsageError("--seed is required with --format json")
        args.seed = secrets.randbits(63)
    config = SimulationConfig(
        params=DagumParams(args.a, args.v, args.lam),
        spec=RatioSpec(args.alpha, args.beta),
        n=args.n,
        level=args.level,
        replicates=args.replicates,
        seed=args.seed,
        method=args.method,
        a_mode=args.a_mode,
        a_estimator=args.a_estimator,
    )
    report = run_coverage(config, workers=args.workers)
    payload = dataclasses.asdict(report)
    payload.update(
        over_frequency=report.over_frequency,
        under_frequency=report.under_frequency,
        valid=report.valid,
        params=dataclasses.asdict(config.params),
        alpha=config.spec.alpha,
        beta=config.spec.beta,
        n=config.n,
        level=config.level,
    )
    _emit(args, "coverage", payload)
    return EXIT_OK


def cmd_fit(args) -> int:
    values = read_incomes(args.file, args.skip_header, args.column)
    params = _fit(values, args.method)
    _emit(args, "fit", {**dataclasses.asdict(params), "n": len(values), "method": args.method})
    return EXIT_OK


def cmd_sample(args) -> int:
    values = sample(DagumParams(args.a, args.v, args.lam), args.count, args.seed)
    _emit(args, "sample", {"params": {"a": args.a, "v": args.v, "lam": args.lam},
                           "seed": args.seed, "values": values.tolist()})
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _add_spec(p, alpha=0.2, beta=0.8):
    p.add_argument("--alpha", type=float, default=alpha, help="lower quantile order")
    p.add_argument("--beta", type=float, default=beta, help="upper quantile order")


def _add_format(p):
    p.add_argument("--format", choices=("table", "json"), default="table")


def _add_file(p):
    p.add_argument("file", help="income file, one value per line")
    p.add_argument("--skip-header", action="store_true", help="ignore the first line")
    p.add_argument("--column", type=_positive_int, help="1-based column in multi-column files")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dagumci", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ci", help="intervals from r*, a and n")
    _add_spec(p)
    p.add_argument("--n", type=_positive_int, default=1000)
    p.add_argument("--r", type=float, default=2.5, help="observed quantile ratio r*")
    p.add_argument("--a", type=float, default=0.1, help="shape parameter a")
    p.add_argument("--level", type=float, default=0.95)
    p.add_argument("--mode", choices=("standard", "shortest", "both"), default="both")
    _add_format(p)
    p.set_defaults(func=cmd_ci)

    p = sub.add_parser("estimate", help="r* and intervals from an income file")
    _add_file(p)
    _add_spec(p)
    p.add_argument("--level", type=float, default=0.95)
    p.add_argument("--a", type=float, help="use this shape instead of fitting it")
    p.add_argument("--a-source", choices=("mle", "quantile"), default="mle")
    _add_format(p)
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("table", help="shortest vs. standard lengths over the a x r grid")
    p.add_argument("which", choices=("t1", "t2", "custom"))
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--n", type=_positive_int, default=1000)
    p.add_argument("--level", type=float, default=0.95)
    _add_format(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("simulate", help="Monte Carlo coverage of an interval method")
    p.add_argument("--a", type=float, default=0.5)
    p.add_argument("--v", type=float, default=2.0)
    p.add_argument("--lam", type=float, default=1.0)
    _add_spec(p)
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--level", type=float, default=0.95)
    p.add_argument("--replicates", type=int, default=10_000)
    p.add_argument("--seed", type=int)
    p.add_argument("--method", choices=("standard", "shortest"), default="standard")
    p.add_argument("--a-mode", choices=("known", "estimated"), default="known")
    p.add_argument("--a-estimator", choices=("mle", "quantile"), default="mle")
    p.add_argument("--workers", type=_positive_int, default=1)
    _add_format(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("fit", help="fit Dagum parameters to an income file")
    _add_file(p)
    p.add_argument("--method", choices=("mle", "quantile"), default="mle")
    _add_format(p)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("sample", help="draw Dagum incomes")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--v", type=float, required=True)
    p.add_argument("--lam", type=float, default=1.0)
    p.add_argument("--count", type=_positive_int, required=True)
    p.add_argument("--seed", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_sample)
    return parser


def _fail(code: int, message: str) -> int:
    sys.stderr.write("dagumci: " + " ".join(str(message).split()) + "\n")
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (UsageError, DomainError) as exc:
        return _fail(EXIT_INVALID, exc)
    except ConvergenceError as exc:
        return _fail(EXIT_NUMERICAL, exc)


if __name__ == "__main__":
    sys.exit(main())
