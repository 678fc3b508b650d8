"""Seeded Monte Carlo sweeps over the sensing-and-reconstruction pipeline.

A sweep cell is one (scheme, s, m, tau) combination. Every trial draws a
fresh sensing matrix and sparse signal, measures (phase-only with bounded
phase noise, or unaltered linear), reconstructs with PBP and records the
direction error. Trial t of a cell runs on the stream id

    fnv1a64(b"<scheme>|s=<s>|m=<m>|tau=<tau:.17g>|trial=<t>")

under the configured master seed, so any single trial is replayable in
isolation and results are independent of worker count and scheduling.
Aggregation folds trials in index order, which makes repeated runs
byte-identical.

CSV schema (fixed column order, UTF-8, LF line endings, floats at 10
significant digits):

    scheme,s,m,tau,trials,failures,mean_error,mean_error_db,stderr_error

``mean_error_db`` is 10 log10 of the mean linear error.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .recon import DegenerateEstimateError, direction_error, pbp
from .rip import oracle_support_error_bound, pbp_error_bound, rip_distortion_probe
from .rng import RngStream, fnv1a64
from .sensing import (
    VarianceConvention,
    measure_linear,
    measure_phase_only,
    sample_sensing_matrix,
    sample_sparse_signal,
)

SCHEMES = ("po", "cs")
CSV_HEADER = "scheme,s,m,tau,trials,failures,mean_error,mean_error_db,stderr_error"

_TRIAL_CHUNK = 256


class ConfigError(ValueError):
    """Invalid sweep configuration; the message names the offending field."""


class NumericalFailureError(ArithmeticError):
    """A sweep cell produced no usable trials."""


@dataclass(frozen=True)
class SweepConfig:
    """Declarative description of one sweep.

    ``log2_m_over_n`` drives a measurement-count sweep (tau fixed at 0);
    ``m`` plus ``tau_grid`` drives a phase-noise sweep. ``aggregate`` names
    the headline scale ("mean_error_db" or "mean_error"); both columns are
    always emitted.
    """

    n: int
    sparsity_levels: Sequence[int]
    trials: int
    master_seed: int
    log2_m_over_n: Sequence[float] | None = None
    m: int | None = None
    tau_grid: Sequence[float] = (0.0,)
    schemes: Sequence[str] = SCHEMES
    output_path: str | None = None
    aggregate: str = "mean_error_db"


@dataclass(frozen=True)
class TrialRecord:
    scheme: str
    s: int
    m: int
    tau: float
    trial_index: int
    seed_used: int  # stream id; replay with RngStream(master_seed, seed_used)
    error: float
    failed: bool


@dataclass(frozen=True)
class CellAggregate:
    scheme: str
    s: int
    m: int
    tau: float
    trials: int
    failures: int
    mean_error: float
    mean_error_db: float
    stderr_error: float


@dataclass(frozen=True)
class SweepResult:
    config: SweepConfig
    cells: tuple[CellAggregate, ...]


def trial_stream_id(scheme: str, s: int, m: int, tau: float, trial_index: int) -> int:
    """Documented stream-id derivation; identical across configs and runs."""
    key = f"{scheme}|s={s}|m={m}|tau={tau:.17g}|trial={trial_index}"
    return fnv1a64(key.encode("ascii"))


def run_trial(
    scheme: str, n: int, s: int, m: int, tau: float, master_seed: int, trial_index: int
) -> TrialRecord:
    """One independent draw-measure-reconstruct trial."""
    sid = trial_stream_id(scheme, s, m, tau, trial_index)
    gen = RngStream(master_seed, sid).generator()
    Phi = sample_sensing_matrix(gen, m, n, VarianceConvention(scheme))
    x0 = sample_sparse_signal(gen, n, s)
    if scheme == "po":
        z = measure_phase_only(Phi, x0, tau, gen).z
    else:
        z = measure_linear(Phi, x0)
    estimate = pbp(Phi, z, s)
    try:
        error = direction_error(x0, estimate)
        failed = False
    except DegenerateEstimateError:
        error = math.nan
        failed = True
    return TrialRecord(
        scheme=scheme,
        s=s,
        m=m,
        tau=tau,
        trial_index=trial_index,
        seed_used=sid,
        error=error,
        failed=failed,
    )


def _run_chunk(task):
    ci, scheme, n, s, m, tau, master_seed, start, stop = task
    errors = np.empty(stop - start)
    failed = np.zeros(stop - start, dtype=bool)
    for i, t in enumerate(range(start, stop)):
        rec = run_trial(scheme, n, s, m, tau, master_seed, t)
        errors[i] = rec.error
        failed[i] = rec.failed
    return ci, start, errors, failed


def _aggregate_cell(cell, errors: np.ndarray, failed: np.ndarray) -> CellAggregate:
    scheme, s, m, tau = cell
    ok = errors[~failed]
    if ok.size == 0:
        raise NumericalFailureError(
            f"cell scheme={scheme} s={s} m={m} tau={tau:g}: no successful trials"
        )
    mean = float(ok.mean())
    db = float(10.0 * np.log10(mean)) if mean > 0 else float("-inf")
    se = float(ok.std(ddof=1) / math.sqrt(ok.size)) if ok.size > 1 else 0.0
    return CellAggregate(
        scheme=scheme,
        s=int(s),
        m=int(m),
        tau=float(tau),
        trials=int(errors.size),
        failures=int(np.count_nonzero(failed)),
        mean_error=mean,
        mean_error_db=db,
        stderr_error=se,
    )


def _run_cells(cells, n, trials, master_seed, workers):
    errors = [np.empty(trials) for _ in cells]
    failed = [np.zeros(trials, dtype=bool) for _ in cells]
    tasks = []
    for ci, (scheme, s, m, tau) in enumerate(cells):
        for start in range(0, trials, _TRIAL_CHUNK):
            stop = min(start + _TRIAL_CHUNK, trials)
            tasks.append((ci, scheme, n, s, m, tau, master_seed, start, stop))
    if workers <= 1:
        outputs = map(_run_chunk, tasks)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outputs = list(pool.map(_run_chunk, tasks))
    for ci, start, errs, flags in outputs:
        errors[ci][start : start + errs.size] = errs
        failed[ci][start : start + flags.size] = flags
    return tuple(
        _aggregate_cell(cell, errors[ci], failed[ci]) for ci, cell in enumerate(cells)
    )


def _check_common(config: SweepConfig) -> None:
    if config.trials < 1:
        raise ConfigError(f"trials: must be >= 1, got {config.trials}")
    if config.n < 1:
        raise ConfigError(f"n: must be >= 1, got {config.n}")
    if not config.sparsity_levels:
        raise ConfigError("sparsity_levels: at least one sparsity level is required")
    for s in config.sparsity_levels:
        if not 1 <= s <= config.n:
            raise ConfigError(f"sparsity_levels: s={s} outside [1, n={config.n}]")
    if not config.schemes:
        raise ConfigError("schemes: at least one scheme is required")
    for scheme in config.schemes:
        if scheme not in SCHEMES:
            raise ConfigError(f"schemes: unknown scheme {scheme!r}, use 'po' or 'cs'")


def _ratio_to_m(n: int, ratio: float) -> int:
    m = int(round(n * 2.0**ratio))
    if m < 1:
        raise ConfigError(f"log2_m_over_n: ratio {ratio:g} gives m < 1 at n={n}")
    return m


def run_m_sweep(config: SweepConfig, workers: int = 1) -> SweepResult:
    """Error versus measurement count over (scheme, s, log2(m/n)) cells, tau = 0."""
    _check_common(config)
    if not config.log2_m_over_n:
        raise ConfigError("log2_m_over_n: measurement-count sweep needs a ratio grid")
    if any(t != 0.0 for t in config.tau_grid):
        raise ConfigError("tau_grid: measurement-count sweep runs at tau = 0 only")
    cells = [
        (scheme, s, _ratio_to_m(config.n, ratio), 0.0)
        for scheme in config.schemes
        for s in config.sparsity_levels
        for ratio in config.log2_m_over_n
    ]
    aggregates = _run_cells(cells, config.n, config.trials, config.master_seed, workers)
    return SweepResult(config=config, cells=aggregates)


def run_tau_sweep(config: SweepConfig, workers: int = 1) -> SweepResult:
    """Error versus phase-noise amplitude at fixed (s, m), phase-only scheme."""
    _check_common(config)
    if config.m is None or config.m < 1:
        raise ConfigError("m: phase-noise sweep needs a fixed measurement count")
    if len(config.sparsity_levels) != 1:
        raise ConfigError("sparsity_levels: phase-noise sweep takes a single sparsity")
    if tuple(config.schemes) != ("po",):
        raise ConfigError("schemes: phase-noise sweep applies to the 'po' scheme only")
    if not config.tau_grid:
        raise ConfigError("tau_grid: at least one tau is required")
    for tau in config.tau_grid:
        if tau < 0:
            raise ConfigError(f"tau_grid: tau must be nonnegative, got {tau:g}")
    s = config.sparsity_levels[0]
    cells = [("po", s, config.m, float(tau)) for tau in config.tau_grid]
    aggregates = _run_cells(cells, config.n, config.trials, config.master_seed, workers)
    return SweepResult(config=config, cells=aggregates)


def fit_rate(
    result: SweepResult,
    scheme: str,
    s: int,
    min_log2_ratio: float = float("-inf"),
    n: int | None = None,
) -> float:
    """Least-squares slope of log10(mean error) against log10(m).

    Uses the cells of ``result`` matching ``scheme`` and ``s`` whose
    log2(m/n) is at least ``min_log2_ratio``; needs three or more grid
    points. ``n`` falls back to the result's config.
    """
    dim = int(n) if n else result.config.n
    if dim < 1:
        raise ValueError("signal dimension n unknown; pass n explicitly")
    points = sorted(
        (c.m, c.mean_error)
        for c in result.cells
        if c.scheme == scheme
        and c.s == s
        and math.log2(c.m / dim) >= min_log2_ratio - 1e-12
    )
    if len(points) < 3:
        raise ValueError(
            f"fit_rate needs at least 3 grid points, found {len(points)}"
        )
    x = np.log10([p[0] for p in points])
    y = np.log10([p[1] for p in points])
    return float(np.polyfit(x, y, 1)[0])


def _fmt(x: float) -> str:
    return f"{x:.10g}"


def render_csv(result: SweepResult) -> str:
    lines = [CSV_HEADER]
    for c in result.cells:
        lines.append(
            ",".join(
                [
                    c.scheme,
                    str(c.s),
                    str(c.m),
                    _fmt(c.tau),
                    str(c.trials),
                    str(c.failures),
                    _fmt(c.mean_error),
                    _fmt(c.mean_error_db),
                    _fmt(c.stderr_error),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def result_to_dict(result: SweepResult) -> dict:
    cfg = result.config
    return {
        "config": {
            "n": cfg.n,
            "sparsity_levels": list(cfg.sparsity_levels),
            "log2_m_over_n": (
                list(cfg.log2_m_over_n) if cfg.log2_m_over_n is not None else None
            ),
            "m": cfg.m,
            "tau_grid": list(cfg.tau_grid),
            "schemes": list(cfg.schemes),
            "trials": cfg.trials,
            "master_seed": cfg.master_seed,
            "output_path": cfg.output_path,
            "aggregate": cfg.aggregate,
        },
        "cells": [asdict(c) for c in result.cells],
    }


def render_json(result: SweepResult) -> str:
    return json.dumps(result_to_dict(result), indent=2) + "\n"


def write_result(result: SweepResult, path: str, fmt: str = "csv") -> None:
    text = render_json(result) if fmt == "json" else render_csv(result)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _cells_from_rows(rows) -> tuple[CellAggregate, ...]:
    return tuple(
        CellAggregate(
            scheme=r[0],
            s=int(r[1]),
            m=int(r[2]),
            tau=float(r[3]),
            trials=int(r[4]),
            failures=int(r[5]),
            mean_error=float(r[6]),
            mean_error_db=float(r[7]),
            stderr_error=float(r[8]),
        )
        for r in rows
    )


def load_sweep_result(path: str, n: int | None = None) -> SweepResult:
    """Read a sweep written by :func:`write_result` (CSV or JSON).

    CSV files carry no config echo; pass ``n`` when a later step (rate
    fitting, for example) needs the signal dimension.
    """
    text = Path(path).read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        payload = json.loads(text)
        cfg = payload["config"]
        config = SweepConfig(
            n=cfg["n"],
            sparsity_levels=tuple(cfg["sparsity_levels"]),
            trials=cfg["trials"],
            master_seed=cfg["master_seed"],
            log2_m_over_n=(
                tuple(cfg["log2_m_over_n"]) if cfg["log2_m_over_n"] else None
            ),
            m=cfg["m"],
            tau_grid=tuple(cfg["tau_grid"]),
            schemes=tuple(cfg["schemes"]),
            output_path=cfg["output_path"],
            aggregate=cfg["aggregate"],
        )
        cells = tuple(CellAggregate(**c) for c in payload["cells"])
        return SweepResult(config=config, cells=cells)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"{path}: not a sweep CSV (unexpected header)")
    cells = _cells_from_rows(ln.split(",") for ln in lines[1:])
    config = SweepConfig(
        n=int(n) if n else 0,
        sparsity_levels=tuple(sorted({c.s for c in cells})),
        trials=cells[0].trials if cells else 0,
        master_seed=0,
    )
    return SweepResult(config=config, cells=cells)


def rip_estimate_report(
    m: int, n: int, s: int, num_probes: int, master_seed: int
) -> dict:
    """Probe a fresh PHASE_ONLY matrix and report the implied error bounds."""
    gen = RngStream(master_seed).generator()
    Phi = sample_sensing_matrix(gen, m, n, VarianceConvention.PHASE_ONLY)
    estimate = rip_distortion_probe(Phi, s, num_probes, gen)
    return {
        "m": m,
        "n": n,
        "s": s,
        "master_seed": master_seed,
        "requested_probes": num_probes,
        "evaluated_probes": estimate.num_probes,
        "delta_lower": estimate.delta_lower,
        "oracle_support_error_bound": oracle_support_error_bound(estimate.delta_lower),
        "pbp_error_bound_noiseless": pbp_error_bound(estimate.delta_lower, 0.0),
    }
