"""Command-line interface.

Every subcommand parses its flags, calls one library function and prints a
table. Exit codes: 0 success, 2 usage or invalid flag, 3 data or domain error.

Examples
--------
::

    tempodisc decide --wealth 1 --early-amount 1 --late-amount 2 --p-late 0.5
    tempodisc curve --q 2 --rho 0.1 --n-max 10
    tempodisc contrast --xm 0.01 0.1 1 --n-max 100 --format json
    tempodisc fit --data observations.csv --compare
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .calibrate import FAMILIES, compare_models, fit
from .choice import ChoiceProblem, decide
from .contrast import contrast_db, distinguishability_horizon
from .discounting import DiscountModel, q_discount_factor
from .errors import DataError, DomainError
from .experiments import (
    ParetoWealth,
    ThalerScenario,
    magnitude_effect,
    population_dispersion,
    prize_rates,
    simulate_discounter,
)
from .reversal import ReversalScenario, crossing_point, reversal_curves
from .tabular import as_rows, format_value, read_json, read_observations, write_table

SEED_ENV = "TEMPODISC_SEED"

THALER_COLUMNS = ["prize", "horizon_label", "n", "amount", "rate"]


def _number(check, message):
    def parse(text):
        try:
            value = float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid number: {text!r}") from None
        if math.isnan(value) or not check(value):
            raise argparse.ArgumentTypeError(f"{message}, got {text}")
        return value

    return parse


positive = _number(lambda v: 0 < v < math.inf, "must be > 0")
non_negative = _number(lambda v: 0 <= v < math.inf, "must be >= 0")
probability = _number(lambda v: 0 <= v <= 1, "must lie in [0, 1]")
open_probability = _number(lambda v: 0 < v <= 1, "must lie in (0, 1]")
q_index = _number(lambda v: 1 <= v < math.inf, "must be >= 1")
pareto_exponent = _number(lambda v: v > 1, "must be > 1")


def _count(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", help="write output to this path instead of stdout")
    common.add_argument(
        "--period-length", default="period",
        help="label of one period, e.g. '1 year'; reported in JSON metadata",
    )

    parser = argparse.ArgumentParser(
        prog="tempodisc", description="Time-average intertemporal choice toolkit."
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", parents=[common], help="choose between early and late payments")
    p.add_argument("--wealth", type=positive, required=True)
    p.add_argument("--early-amount", type=non_negative, required=True)
    p.add_argument("--late-amount", type=non_negative, required=True)
    p.add_argument("--p-early", type=probability, default=1.0)
    p.add_argument("--p-late", type=probability, default=1.0)
    p.add_argument("--threshold-db", type=positive, default=0.65)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("curve", parents=[common], help="q-exponential discount curve")
    p.add_argument("--q", type=q_index, default=2.0)
    p.add_argument("--rho", type=non_negative, default=0.1)
    p.add_argument("--p-m", type=open_probability, default=1.0)
    p.add_argument("--n-max", type=positive, default=10.0)
    p.add_argument("--step", type=positive, default=1.0)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("reversal", parents=[common], help="preference-reversal curves")
    p.add_argument("--rate", type=positive, required=True, help="M / W0")
    p.add_argument("--n-max", type=_count, default=10)
    p.add_argument("--multiple", type=_number(lambda v: v > 1, "must be > 1"), default=2.0)
    p.add_argument("--lag", type=positive, default=1.0)
    p.set_defaults(func=cmd_reversal)

    p = sub.add_parser("contrast", parents=[common], help="contrast between time averages")
    p.add_argument("--xm", type=non_negative, nargs="+", required=True)
    p.add_argument("--q", type=q_index, default=2.0)
    p.add_argument("--p-m", type=probability, default=1.0)
    p.add_argument("--n-max", type=_count, default=100)
    p.add_argument("--threshold-db", type=positive, default=0.65)
    p.set_defaults(func=cmd_contrast)

    p = sub.add_parser("thaler", parents=[common], help="simulated prize-waiting experiment")
    p.add_argument("--config", required=True, help="JSON scenario file")
    p.set_defaults(func=cmd_thaler)

    p = sub.add_parser("fit", parents=[common], help="calibrate a discount model")
    p.add_argument("--data", required=True, help="CSV with columns n,value[,kind]")
    p.add_argument("--pin-q", type=q_index)
    p.add_argument("--fit-pm", action="store_true")
    p.add_argument("--wealth", type=positive)
    p.add_argument("--m0", type=non_negative, default=0.0)
    p.add_argument("--loss", choices=("squared", "log"), default="squared")
    p.add_argument("--compare", action="store_true", help="rank exponential, hyperbolic and free q")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("population", parents=[common], help="discount-rate dispersion under Pareto wealth")
    p.add_argument("--exponent", type=pareto_exponent, default=1.5)
    p.add_argument("--wmin", type=positive, default=1e4)
    p.add_argument("--size", type=_count, default=10**5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--m0", type=non_negative, default=0.0)
    p.add_argument("--m", type=non_negative, required=True)
    p.set_defaults(func=cmd_population)
    return parser


def _emit(args, rows, meta=None, columns=None):
    meta = {"command": args.command, "period_length": args.period_length, **(meta or {})}
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_table(rows, args.format, meta, fh, columns)
    else:
        write_table(rows, args.format, meta, sys.stdout, columns)


def _note(args, text):
    # CSV output stays a pure table; summaries go to stderr
    if args.format == "csv":
        print(text, file=sys.stderr)


def cmd_decide(args, parser):
    if args.late_amount < args.early_amount:
        parser.error("argument --late-amount: must be >= --early-amount")
    problem = ChoiceProblem(
        args.wealth, args.early_amount, args.late_amount, args.p_early, args.p_late
    )
    pref = decide(problem, args.threshold_db)
    row = {
        "side": str(pref.side),
        "d_c": pref.d_c,
        "g_early": pref.g_early,
        "g_late": pref.g_late,
        "contrast_db": pref.contrast_db,
    }
    _emit(args, [row], {"threshold_db": args.threshold_db})


def cmd_curve(args, parser):
    model = DiscountModel(q=args.q, rho=args.rho, p_m=args.p_m)
    steps = int(math.floor(args.n_max / args.step + 1e-9))
    n = np.arange(steps + 1) * args.step
    if n[-1] < args.n_max:
        n = np.append(n, args.n_max)
    factor = np.atleast_1d(q_discount_factor(model, n))
    rows = [{"n": float(a), "factor": float(b)} for a, b in zip(n, factor)]
    _emit(args, rows, {"q": args.q, "rho": args.rho, "p_m": args.p_m})


def cmd_reversal(args, parser):
    scenario = ReversalScenario(args.rate, max(args.n_max, 2), args.multiple, args.lag)
    early, late = reversal_curves(scenario)
    n_star = crossing_point(args.rate, args.multiple, args.lag)
    rows = []
    for n, a, b in zip(early.n[: args.n_max], early.values, late.values):
        side = "early" if a > b else "late" if b > a else "tie"
        rows.append({"n": float(n), "early": float(a), "late": float(b), "preferred": side})
    _emit(args, rows, {"rate": args.rate, "crossing_point": n_star})
    _note(args, f"crossing point n* = {format_value(n_star)}")


def cmd_contrast(args, parser):
    n = np.arange(1, args.n_max + 1, dtype=float)
    rows, horizons = [], {}
    for x in args.xm:
        values = contrast_db(x, n, args.q, args.p_m)
        rows.extend(
            {"x_m": x, "n": float(k), "contrast_db": float(v)} for k, v in zip(n, values)
        )
        horizons[format_value(x)] = distinguishability_horizon(
            x, args.q, args.p_m, args.threshold_db
        )
    _emit(
        args, rows,
        {"q": args.q, "p_m": args.p_m, "threshold_db": args.threshold_db,
         "horizons": horizons},
    )
    for x, h in horizons.items():
        _note(args, f"x_m={x}: contrast within {args.threshold_db:g} dB up to n = {format_value(h)}")


def load_thaler_config(path):
    """Build a scenario and first-period amounts from a JSON file.

    Each prize gives ``m0`` and exactly one of ``rate``, ``increment`` or
    ``first_period_amount``; ``responses`` optionally lists observed answers
    as ``{"prize", "horizon", "amount"}`` objects.
    """
    try:
        cfg = read_json(path)
        horizons = [(str(h["label"]), float(h["n"])) for h in cfg["horizons"]]
        prizes, amounts = [], []
        w0 = float(cfg["w0"])
        for item in cfg["prizes"]:
            m0 = float(item["m0"])
            keys = [k for k in ("rate", "increment", "first_period_amount") if k in item]
            if len(keys) != 1:
                raise DataError(f"prize {m0:g}: give exactly one of rate, increment, first_period_amount")
            if keys[0] == "rate":
                m = m0 + float(item["rate"]) * (w0 + m0)
            elif keys[0] == "increment":
                m = m0 + float(item["increment"])
            else:
                m = float(item["first_period_amount"])
            prizes.append(m0)
            amounts.append(m)
        responses = {
            (float(r["prize"]), str(r["horizon"])): float(r["amount"])
            for r in cfg.get("responses", [])
        }
        scenario = ThalerScenario(
            w0=w0, prizes=prizes, horizons=horizons,
            q=float(cfg.get("q", 2.0)), p_m=float(cfg.get("p_m", 1.0)),
            responses=responses or None,
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, (DataError, DomainError)):
            raise
        raise DataError(f"invalid scenario file {path}: {exc!r}") from None
    return scenario, amounts


def cmd_thaler(args, parser):
    try:
        scenario, amounts = load_thaler_config(args.config)
    except OSError as exc:
        raise DataError(str(exc)) from None
    table = simulate_discounter(scenario, amounts)
    columns = list(THALER_COLUMNS)
    if scenario.responses:
        columns += ["observed", "observed_rate"]
    meta = {"w0": scenario.w0, "q": scenario.q, "p_m": scenario.p_m}
    if len(scenario.prizes) >= 2:
        report = magnitude_effect(prize_rates(table))
        meta["magnitude_effect"] = report.ordering
        _note(args, f"magnitude effect: {report.ordering}")
    _emit(args, as_rows(table), meta, columns)


def cmd_fit(args, parser):
    try:
        data = read_observations(args.data, args.wealth, args.m0)
    except OSError as exc:
        raise DataError(str(exc)) from None
    columns = ["family", "q", "rho", "p_m", "sse", "converged"]
    if args.compare:
        ranking = compare_models(data, args.fit_pm, loss=args.loss)
        rows = [
            {"rank": r.rank, "family": r.family, "q": r.fit.q, "rho": r.fit.rho,
             "p_m": r.fit.p_m, "sse": r.sse, "converged": r.fit.converged}
            for r in ranking
        ]
        columns = ["rank"] + columns
    else:
        result = fit(data, args.fit_pm, pin_q=args.pin_q, loss=args.loss)
        family = next(
            (k for k, v in FAMILIES.items() if v is not None and v == args.pin_q),
            "q-exponential",
        )
        rows = [{"family": family, "q": result.q, "rho": result.rho, "p_m": result.p_m,
                 "sse": result.sse, "converged": result.converged}]
    _emit(args, rows, {"rows_in": len(data), "loss": args.loss}, columns)


def cmd_population(args, parser):
    seed = args.seed
    env = os.environ.get(SEED_ENV)
    if env is not None:
        try:
            seed = int(env)
        except ValueError:
            parser.error(f"environment variable {SEED_ENV}: invalid integer {env!r}")
    if args.m < args.m0:
        parser.error("argument --m: must be >= --m0")
    wealth = ParetoWealth(args.exponent, args.wmin, args.size, seed)
    s = population_dispersion(wealth, args.m0, args.m)
    row = {"mean": s.mean, "median": s.median}
    row.update({f"q{int(round(100 * k)):02d}": v for k, v in s.quantiles.items()})
    row.update({"iqr": s.iqr, "std": s.std, "mean_wealth_rate": s.mean_wealth_rate})
    _emit(args, [row], {"exponent": args.exponent, "w_min": args.wmin,
                        "size": args.size, "seed": seed, "m0": args.m0, "m": args.m})


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (DataError, DomainError) as exc:
        print(f"tempodisc {args.command}: error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
