"""Command-line interface.

Subcommands::

    flavorlg eval    --m1 3 --m2 20 --theta pi/3 --t 1 --k-tilde 1
    flavorlg sweep   --m1 3 --m2 20 --theta pi/3 --min 0.05 --max 10 --steps 2001 --log --out fig.csv
    flavorlg maxima  --m1 3 --m2 20 --theta pi/3 --min 0.05 --max 10 --log --quantity w_qft
    flavorlg figure  fig1 --out figures/
    flavorlg verify  --samples 10000 --seed 0

Exit status: 0 success, 1 runtime or I/O failure (including a failed
verification), 2 usage error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from pathlib import Path

import numpy as np

from .presets import DEFAULT_GRID, FIGURES
from .sweep import (
    AXES,
    EVAL_COLUMNS,
    QUANTITIES,
    SweepSpec,
    SweepSpecError,
    evaluate_point,
    find_maximum,
    sweep_array,
)
from .validation import check_mixing_params
from .verify import run_verify

EXIT_OK, EXIT_RUNTIME, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def format_number(x: float) -> str:
    """Shortest decimal string that parses back to the same double."""
    x = float(x)
    if x == 0.0:
        return "0"
    text = repr(x)
    return text[:-2] if text.endswith(".0") else text


def write_csv(table: np.ndarray, stream) -> None:
    stream.write(",".join(EVAL_COLUMNS) + "\n")
    for row in table:
        stream.write(",".join(format_number(v) for v in row) + "\n")


def _nonneg_float(text):
    value = float(text)
    if not (math.isfinite(value) and value >= 0):
        raise argparse.ArgumentTypeError(f"expected a finite nonnegative number, got {text!r}")
    return value


def _params(args):
    try:
        return check_mixing_params(args.m1, args.m2, args.theta)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _add_params(parser, required=True):
    parser.add_argument("--m1", type=float, required=required, help="lighter mass eigenvalue")
    parser.add_argument("--m2", type=float, required=required, help="heavier mass eigenvalue")
    parser.add_argument("--theta", type=str, required=required,
                        help="mixing angle in radians, or the literal pi/3 or pi/4")


def _add_sweep_flags(parser):
    _add_params(parser)
    parser.add_argument("--axis", choices=AXES, default="k_tilde")
    parser.add_argument("--min", type=float, default=DEFAULT_GRID["min"])
    parser.add_argument("--max", type=float, default=DEFAULT_GRID["max"])
    parser.add_argument("--steps", type=int, default=DEFAULT_GRID["steps"])
    parser.add_argument("--log", action="store_true", help="logarithmic grid spacing")
    parser.add_argument("--t", type=_nonneg_float, default=1.0, help="time when not swept")
    parser.add_argument("--k-tilde", type=_nonneg_float, default=1.0, help="k/sqrt(m1 m2) when not swept")
    parser.add_argument("--workers", type=int, default=1)


def _sweep_spec(args) -> SweepSpec:
    try:
        return SweepSpec(
            axis=args.axis,
            min=args.min,
            max=args.max,
            steps=args.steps,
            spacing="logarithmic" if args.log else "linear",
            params=_params(args),
            t=args.t,
            k_tilde=args.k_tilde,
        )
    except SweepSpecError as exc:
        raise UsageError(f"invalid sweep: {exc}") from None


def cmd_eval(args, out) -> int:
    record = evaluate_point(_params(args), args.t, k_tilde=args.k_tilde, k=args.k)
    out.write(json.dumps(dataclasses.asdict(record)) + "\n")
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    spec = _sweep_spec(args)
    table = sweep_array(spec, n_workers=args.workers)
    if args.out in (None, "-"):
        write_csv(table, out)
        return EXIT_OK
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        write_csv(table, fh)
    return EXIT_OK


def cmd_maxima(args, out) -> int:
    spec = _sweep_spec(args)
    if not args.refine_tol > 0:
        raise UsageError("--refine-tol must be positive")
    for quantity in args.quantity or QUANTITIES:
        report = find_maximum(spec, quantity, refine_tol=args.refine_tol, n_workers=args.workers)
        out.write(json.dumps(dataclasses.asdict(report)) + "\n")
    return EXIT_OK


def cmd_figure(args, out) -> int:
    preset = FIGURES[args.id]
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    path = outdir / f"{preset.id}.csv"
    table = sweep_array(preset.sweep_spec(), n_workers=args.workers)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        write_csv(table, fh)
    out.write(f"wrote {path}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    outcome = run_verify(samples=args.samples, seed=args.seed)
    out.write(outcome.report() + "\n")
    return EXIT_OK if outcome.passed else EXIT_RUNTIME


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flavorlg",
        description="Two-flavor neutrino oscillations: uncertainty and Leggett-Garg functionals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate every quantity at one point (JSON object)")
    _add_params(p)
    p.add_argument("--t", type=_nonneg_float, required=True)
    momentum = p.add_mutually_exclusive_group(required=True)
    momentum.add_argument("--k", type=_nonneg_float)
    momentum.add_argument("--k-tilde", type=_nonneg_float)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sweep", help="grid sweep written as CSV")
    _add_sweep_flags(p)
    p.add_argument("--out", default="-", help="output CSV path, '-' for stdout")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("maxima", help="refined maxima along a sweep (JSON lines)")
    _add_sweep_flags(p)
    p.add_argument("--quantity", action="append", choices=QUANTITIES)
    p.add_argument("--refine-tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_maxima)

    p = sub.add_parser("figure", help="write the dataset of one figure preset")
    p.add_argument("id", choices=sorted(FIGURES))
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("verify", help="randomized identity and bound checks")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"flavorlg {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"flavorlg {args.command}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
