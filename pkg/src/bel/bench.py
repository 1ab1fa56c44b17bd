"""Replicated simulation benchmarks.

A *cell* is one (design, sample size, dimension) setting.  Each replicate
draws a fresh dataset, runs the shrinkage-posterior fits and the baseline
estimators, thresholds, and scores against the generating truth.  Rows
average the scores over successful replicates; per-method failures are
counted, not hidden.

Replicate seeds derive from (master_seed, replicate, role) so results do
not depend on worker scheduling; ``jobs > 1`` fans replicates out over
processes, ``jobs = 1`` runs them inline.
"""
from __future__ import annotations

import csv
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from .baselines import hard_threshold_mean, ols, soft_threshold_mean
from .dataset import Dataset, center
from .el import ELConfig
from .metrics import BenchRow, f1, mse, support_counts
from .priors import PriorSpec
from .rng import derive_seed
from .samplers import SamplerConfig, run_chain
from .selection import DEFAULT_CUTOFF, cv_cutoff
from .simgen import MeanDesign, RegressionDesign, gen_mean_data, gen_regression_data

__all__ = [
    "CellSpec",
    "MEAN_METHODS",
    "REGRESSION_METHODS",
    "run_cell",
    "write_bench_csv",
    "write_bench_json",
    "format_rows",
]

MEAN_METHODS = ("bel_lasso", "bel_scad", "soft", "hard", "mean")
REGRESSION_METHODS = ("bel_lasso", "bel_scad", "ols")

# Seed roles: data draw, per-prior chain, per-prior cross-validation.
_ROLE_DATA = 0
_ROLE_CHAIN = {"laplace": 1, "scad": 2}
_ROLE_CV = {"laplace": 3, "scad": 4}


@dataclass(frozen=True)
class CellSpec:
    """One benchmark setting and its scoring options.

    cutoff None means pick the multiplier per replicate by cross-validation.
    """

    mode: str
    n: int
    p: int
    rho: float = 0.3
    scenario: str = "A"
    replicates: int = 20
    cutoff: float | None = DEFAULT_CUTOFF
    cv_folds: int = 5
    cv_n_iter: int = 2000
    master_seed: int = 0

    def __post_init__(self) -> None:
        if self.mode not in ("mean", "regression"):
            raise ValueError(f"unknown mode: {self.mode!r}")
        if self.replicates < 1:
            raise ValueError("replicates must be >= 1")


def _default_methods(mode: str) -> tuple[str, ...]:
    return MEAN_METHODS if mode == "mean" else REGRESSION_METHODS


def _gen_data(spec: CellSpec, data_seed: int) -> tuple[Dataset, np.ndarray]:
    if spec.mode == "mean":
        design = MeanDesign(n=spec.n, p=spec.p, rho=spec.rho, seed=data_seed)
        return gen_mean_data(design), design.mean_vector()
    design = RegressionDesign(
        scenario=spec.scenario, n=spec.n, p=spec.p, seed=data_seed
    )
    # Centering X and y leaves beta unchanged but removes the error-mean
    # nuisance (the mixture scenarios are mean-zero only on average).
    return center(gen_regression_data(design)), design.beta0


def _score(estimate: np.ndarray, truth: np.ndarray) -> tuple[float, float, float, float]:
    t_count, f_count = support_counts(estimate != 0.0, truth != 0.0)
    return (
        mse(estimate, truth),
        float(t_count),
        float(f_count),
        f1(t_count, f_count, int(np.sum(truth != 0.0))),
    )


def _fit_bel(
    kind: str,
    spec: CellSpec,
    sampler_cfg: SamplerConfig,
    data: Dataset,
    rep: int,
    el_cfg: ELConfig | None,
) -> np.ndarray:
    """Posterior-mean estimate after thresholding, for one prior kind."""
    prior = PriorSpec(kind=kind)
    cfg = replace(sampler_cfg, seed=derive_seed(spec.master_seed, rep, _ROLE_CHAIN[kind]))
    if spec.cutoff is None:
        cutoff = cv_cutoff(
            data,
            prior,
            sampler_cfg,
            folds=spec.cv_folds,
            cv_n_iter=spec.cv_n_iter,
            seed=derive_seed(spec.master_seed, rep, _ROLE_CV[kind]),
            el_cfg=el_cfg,
        )
    else:
        cutoff = spec.cutoff
    chain = run_chain(data, prior, cfg, mode=spec.mode, el_cfg=el_cfg)
    post_mean = chain.thetas.mean(axis=0)
    return np.where(np.abs(post_mean) > cutoff, post_mean, 0.0)


def _replicate(
    spec: CellSpec,
    sampler_cfg: SamplerConfig,
    rep: int,
    methods: tuple[str, ...],
    el_cfg: ELConfig | None,
) -> dict[str, tuple[float, float, float, float] | None]:
    data, truth = _gen_data(spec, derive_seed(spec.master_seed, rep, _ROLE_DATA))
    baseline_thr = spec.cutoff if spec.cutoff is not None else DEFAULT_CUTOFF
    out: dict[str, tuple[float, float, float, float] | None] = {}
    for method in methods:
        try:
            if method == "bel_lasso":
                est = _fit_bel("laplace", spec, sampler_cfg, data, rep, el_cfg)
            elif method == "bel_scad":
                est = _fit_bel("scad", spec, sampler_cfg, data, rep, el_cfg)
            elif method == "soft":
                est = soft_threshold_mean(data, baseline_thr)
            elif method == "hard":
                est = hard_threshold_mean(data, baseline_thr)
            elif method == "mean":
                est = data.x.mean(axis=0)
            elif method == "ols":
                est = ols(data).beta
            else:
                raise ValueError(f"unknown method: {method!r}")
            out[method] = _score(est, truth)
        except Exception:
            out[method] = None
    return out


def _replicate_star(args) -> dict:
    return _replicate(*args)


def run_cell(
    spec: CellSpec,
    sampler_cfg: SamplerConfig,
    methods: tuple[str, ...] | None = None,
    jobs: int = 1,
    el_cfg: ELConfig | None = None,
) -> list[BenchRow]:
    """Run every replicate of one cell and average the per-method scores."""
    methods = _default_methods(spec.mode) if methods is None else tuple(methods)
    arg_list = [(spec, sampler_cfg, i, methods, el_cfg) for i in range(spec.replicates)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_replicate_star, arg_list))
    else:
        results = [_replicate_star(a) for a in arg_list]
    rows: list[BenchRow] = []
    for method in methods:
        scores = [r[method] for r in results if r[method] is not None]
        failures = sum(1 for r in results if r[method] is None)
        if scores:
            arr = np.asarray(scores)
            rows.append(
                BenchRow(
                    method=method,
                    mse_x1000=1000.0 * float(arr[:, 0].mean()),
                    true_count=float(arr[:, 1].mean()),
                    false_count=float(arr[:, 2].mean()),
                    f1_x100=100.0 * float(arr[:, 3].mean()),
                    failures=failures,
                )
            )
        else:
            rows.append(
                BenchRow(method, math.nan, math.nan, math.nan, math.nan, failures)
            )
    return rows


_HEADER = ("method", "mse_x1000", "true", "false", "f1_x100", "failures")


def format_rows(rows: list[BenchRow]) -> str:
    """Fixed-width table, one decimal place (reporting precision)."""
    widths = [max(len(_HEADER[0]), max((len(r.method) for r in rows), default=0))]
    lines = []
    header = f"{_HEADER[0]:<{widths[0]}}  " + "  ".join(f"{h:>9}" for h in _HEADER[1:])
    lines.append(header)
    for r in rows:
        cells = [
            f"{r.mse_x1000:9.1f}",
            f"{r.true_count:9.1f}",
            f"{r.false_count:9.1f}",
            f"{r.f1_x100:9.1f}",
            f"{r.failures:9d}",
        ]
        lines.append(f"{r.method:<{widths[0]}}  " + "  ".join(cells))
    return "\n".join(lines)


def write_bench_csv(rows: list[BenchRow], path: str | Path) -> None:
    """Reporting-precision CSV (one decimal, as tables are read)."""
    with Path(path).open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(_HEADER)
        for r in rows:
            writer.writerow(
                [
                    r.method,
                    f"{r.mse_x1000:.1f}",
                    f"{r.true_count:.1f}",
                    f"{r.false_count:.1f}",
                    f"{r.f1_x100:.1f}",
                    r.failures,
                ]
            )


def write_bench_json(rows: list[BenchRow], path: str | Path) -> None:
    """Full-precision machine copy of the same rows."""
    payload = [
        {
            "method": r.method,
            "mse_x1000": r.mse_x1000,
            "true_count": r.true_count,
            "false_count": r.false_count,
            "f1_x100": r.f1_x100,
            "failures": r.failures,
        }
        for r in rows
    ]
    with Path(path).open("w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
