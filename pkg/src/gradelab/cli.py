"""Command-line interface.

Subcommands: ``perf`` (single performance estimate), ``check`` (theorem
audit as JSON), ``sweep`` (config file -> CSV), ``reproduce`` (canonical
figure CSVs).  Exit codes: 0 success, 1 validation error, 2 quadrature
convergence failure.

Prior and model specs on the command line use the canonical [0, 1] scale:
``uniform`` / ``tnorm:MU:SIGMA`` for priors; ``tnorm:GAMMA``, ``tri:W``,
``rect:W`` (append ``:raw`` to skip kernel renormalization) and ``zero``
for score models.
"""

from __future__ import annotations

import argparse
import json
import sys

from gradelab import analysis, harness
from gradelab.dist import (
    QualityPrior,
    ScoreModel,
    rectangular_kernel,
    triangular_kernel,
    truncated_normal_noise,
    zero_noise,
)
from gradelab.dynamics import MotivationParams
from gradelab.grading import parse_scheme
from gradelab.quadrature import ConvergenceError


def parse_prior(text: str) -> QualityPrior:
    if text == "uniform":
        return QualityPrior(kind="uniform")
    if text.startswith("tnorm:"):
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"prior spec {text!r} must be tnorm:MU:SIGMA")
        return QualityPrior(kind="truncated_normal", mu=float(parts[1]), sigma=float(parts[2]))
    raise ValueError(f"unrecognized prior spec {text!r}")


def parse_model(text: str) -> ScoreModel:
    if text == "zero":
        return zero_noise()
    parts = text.split(":")
    raw = parts[-1] == "raw"
    if raw:
        parts = parts[:-1]
    if len(parts) == 2:
        kind, value = parts[0], float(parts[1])
        if kind == "tnorm" and not raw:
            return truncated_normal_noise(value)
        if kind == "tri":
            return triangular_kernel(value, renormalize=not raw)
        if kind == "rect":
            return rectangular_kernel(value, renormalize=not raw)
    raise ValueError(f"unrecognized score model spec {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gradelab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("perf", help="estimate performance of one grading scheme")
    p.add_argument("--prior", default="uniform")
    p.add_argument("--model", default="tri:0.1")
    p.add_argument("--scheme", default="ns")
    p.add_argument("--alpha-m", type=float, default=0.5)
    p.add_argument("--alpha-d", type=float, default=0.5)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--n", type=int, default=5000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--method", choices=["mc", "quad"], default="mc")
    p.add_argument("--tol", type=float, default=analysis.DEFAULT_QUAD_TOL)

    c = sub.add_parser("check", help="audit a theorem's hypotheses and conclusion")
    c.add_argument("--theorem", choices=["t1", "c1", "t2", "t3", "t4"], required=True)
    c.add_argument("--prior", default="uniform")
    c.add_argument("--model", default="tri:0.1")
    c.add_argument("--T", type=int, default=8)
    c.add_argument("--alpha-m", type=float, default=0.7)
    c.add_argument("--alpha-d", type=float, default=0.2)
    c.add_argument("--grid", type=int, default=analysis.DEFAULT_GRID)
    c.add_argument("--tol", type=float, default=analysis.DEFAULT_CHECK_TOL)
    c.add_argument("--out", default=None, help="write the JSON report here instead of stdout")

    s = sub.add_parser("sweep", help="run a sweep config and emit CSV")
    s.add_argument("--config", required=True)
    s.add_argument("--out", required=True)

    r = sub.add_parser("reproduce", help="emit canonical figure CSVs")
    r.add_argument(
        "--figure",
        required=True,
        choices=["fig1a", "fig1b", "fig1c", "fig1d", "fig2", "fig3", "fig4"],
    )
    r.add_argument("--out-dir", required=True)
    r.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "perf":
            prior = parse_prior(args.prior)
            model = parse_model(args.model)
            scheme = parse_scheme(args.scheme)
            params = MotivationParams(args.alpha_m, args.alpha_d)
            if args.method == "mc":
                est = analysis.perf_mc(prior, model, scheme, params, args.n, args.r, args.seed)
            else:
                if args.r != 2:
                    raise ValueError("quadrature evaluates the two-evaluation case (r=2)")
                est = analysis.perf_quad(prior, model, scheme, params, args.tol)
            print(json.dumps(est.to_dict(), indent=2))
        elif args.command == "check":
            verdict = analysis.theorem_verdict(
                args.theorem,
                parse_prior(args.prior),
                parse_model(args.model),
                args.T,
                MotivationParams(args.alpha_m, args.alpha_d),
                grid_size=args.grid,
                check_tol=args.tol,
            )
            text = verdict.to_json()
            if args.out:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(text + "\n")
            else:
                print(text)
        elif args.command == "sweep":
            config = harness.load_config(args.config)
            harness.emit_csv(harness.run_sweep(config), args.out)
            print(args.out)
        elif args.command == "reproduce":
            for path in harness.reproduce(args.figure, args.out_dir, args.seed):
                print(path)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
