"""Command-line front end for sweeps and restricted-isometry diagnostics.

Subcommands: ``sweep-m``, ``sweep-tau``, ``rip-estimate``, ``rip-bound``,
``fit-rate``. Results go to ``--out`` (or stdout when omitted or ``-``) as
CSV or JSON. Exit codes: 0 success, 2 configuration error, 3 I/O error,
4 internal numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import experiments, rip
from .experiments import ConfigError, SweepConfig


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--trials", type=int, default=10_000, help="trials per cell")
    p.add_argument("--seed", type=int, default=0, help="master seed")
    p.add_argument("--out", default=None, metavar="PATH", help="output file ('-' = stdout)")
    p.add_argument("--workers", type=int, default=1, metavar="N", help="parallel workers")
    p.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pocs",
        description="Phase-only compressive sensing sweeps and diagnostics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sm = sub.add_parser("sweep-m", help="direction error vs measurement count")
    sm.add_argument("--n", type=int, default=256, help="signal dimension")
    sm.add_argument("--s", type=int, action="append", required=True,
                    help="sparsity level (repeatable)")
    sm.add_argument("--log2-ratio", dest="log2_ratio", type=float, action="append",
                    required=True, help="log2(m/n) grid point (repeatable)")
    sm.add_argument("--scheme", choices=("po", "cs"), action="append",
                    help="measurement scheme (repeatable; default both)")
    _add_common(sm)

    st = sub.add_parser("sweep-tau", help="direction error vs phase-noise amplitude")
    st.add_argument("--n", type=int, default=256, help="signal dimension")
    st.add_argument("--s", type=int, required=True, help="sparsity level")
    st.add_argument("--m", type=int, required=True, help="measurement count")
    st.add_argument("--tau", type=float, action="append", required=True,
                    help="phase-noise bound in radians (repeatable)")
    _add_common(st)

    re_ = sub.add_parser("rip-estimate", help="empirical distortion lower bound")
    re_.add_argument("--m", type=int, required=True)
    re_.add_argument("--n", type=int, required=True)
    re_.add_argument("--s", type=int, required=True)
    re_.add_argument("--probes", type=int, default=1000, help="random probe count")
    re_.add_argument("--seed", type=int, default=0)
    re_.add_argument("--out", default=None, metavar="PATH")
    re_.add_argument("--format", choices=("csv", "json"), default="json")

    rb = sub.add_parser("rip-bound", help="closed-form minimum measurement count")
    rb.add_argument("--delta", type=float, required=True, help="target distortion")
    rb.add_argument("--s", type=int, required=True)
    rb.add_argument("--n", type=int, required=True)
    rb.add_argument("--eta", type=float, default=0.01, help="failure probability")

    fr = sub.add_parser("fit-rate", help="decay exponent of error vs m")
    fr.add_argument("--in", dest="input_path", required=True, metavar="PATH",
                    help="sweep result (csv or json)")
    fr.add_argument("--scheme", choices=("po", "cs"), required=True)
    fr.add_argument("--s", type=int, required=True)
    fr.add_argument("--min-log2-ratio", dest="min_log2_ratio", type=float,
                    default=float("-inf"), help="use grid points at or above this ratio")
    fr.add_argument("--n", type=int, default=None,
                    help="signal dimension (needed with csv input)")

    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path in (None, "-"):
        sys.stdout.write(text)
        return
    with open(out_path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _report_text(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    keys = list(report)
    return ",".join(keys) + "\n" + ",".join(_cell_str(report[k]) for k in keys) + "\n"


def _cell_str(v) -> str:
    return f"{v:.10g}" if isinstance(v, float) else str(v)


def _dispatch(args: argparse.Namespace) -> None:
    if args.command == "sweep-m":
        config = SweepConfig(
            n=args.n,
            sparsity_levels=tuple(args.s),
            log2_m_over_n=tuple(args.log2_ratio),
            tau_grid=(0.0,),
            schemes=tuple(args.scheme) if args.scheme else experiments.SCHEMES,
            trials=args.trials,
            master_seed=args.seed,
            output_path=None if args.out in (None, "-") else args.out,
            aggregate="mean_error_db",
        )
        result = experiments.run_m_sweep(config, workers=args.workers)
        text = (
            experiments.render_json(result)
            if args.format == "json"
            else experiments.render_csv(result)
        )
        _emit(text, args.out)
    elif args.command == "sweep-tau":
        config = SweepConfig(
            n=args.n,
            sparsity_levels=(args.s,),
            m=args.m,
            tau_grid=tuple(args.tau),
            schemes=("po",),
            trials=args.trials,
            master_seed=args.seed,
            output_path=None if args.out in (None, "-") else args.out,
            aggregate="mean_error",
        )
        result = experiments.run_tau_sweep(config, workers=args.workers)
        text = (
            experiments.render_json(result)
            if args.format == "json"
            else experiments.render_csv(result)
        )
        _emit(text, args.out)
    elif args.command == "rip-estimate":
        report = experiments.rip_estimate_report(
            args.m, args.n, args.s, args.probes, args.seed
        )
        _emit(_report_text(report, args.format), args.out)
    elif args.command == "rip-bound":
        print(rip.sample_complexity_bound(args.delta, args.s, args.n, args.eta))
    elif args.command == "fit-rate":
        result = experiments.load_sweep_result(args.input_path, n=args.n)
        slope = experiments.fit_rate(
            result, args.scheme, args.s, args.min_log2_ratio, n=args.n
        )
        print(f"{slope:.10g}")
    else:  # pragma: no cover - argparse enforces the choices
        raise ConfigError(f"command: unknown subcommand {args.command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _dispatch(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    except ArithmeticError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
