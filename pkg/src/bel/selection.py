"""Posterior summaries and hard-threshold variable selection.

A chain is summarized into coordinate-wise posterior means and equal-tailed
95% intervals; selection keeps coordinate j when |posterior mean_j| exceeds
the cutoff (strict).  The cutoff is user-supplied in mean mode (0.2 by
convention) or chosen in regression mode by K-fold cross-validation on
held-out prediction error, ties broken toward the sparser (larger) cutoff.

threshold_scale gives the theoretical rate (p/n)^(1/2 - delta) that a
suitable cutoff should track as n grows; it is a diagnostic, not part of
the selection path.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Mapping

import numpy as np

from .dataset import Dataset
from .el import ELConfig
from .priors import PriorSpec
from .rng import derive_seed
from .samplers import Chain, SamplerConfig, run_chain

__all__ = [
    "DEFAULT_CUTOFF",
    "DEFAULT_CUTOFF_GRID",
    "SelectionReport",
    "threshold_scale",
    "summarize",
    "apply_threshold",
    "cv_cutoff",
    "cv_cutoff_curve",
]

DEFAULT_CUTOFF = 0.2

_CV_FOLD_ROLE = 7  # distinguishes fold-fit seeds from replicate seeds

# Denser below 0.5 where held-out error usually turns.
DEFAULT_CUTOFF_GRID = tuple(
    round(c, 2)
    for c in np.concatenate([np.arange(0.05, 0.5, 0.05), np.arange(0.5, 1.01, 0.1)])
)


@dataclass(frozen=True)
class SelectionReport:
    """Point estimates, 95% intervals, and the thresholded support."""

    posterior_mean: np.ndarray
    ci_lower: np.ndarray
    ci_upper: np.ndarray
    cutoff: float
    support: np.ndarray  # bool, support_j = (|posterior_mean_j| > cutoff)
    thresholded_estimate: np.ndarray

    @property
    def interval_length(self) -> np.ndarray:
        return self.ci_upper - self.ci_lower

    def to_dict(self) -> dict:
        return {
            "posterior_mean": [float(v) for v in self.posterior_mean],
            "ci_lower": [float(v) for v in self.ci_lower],
            "ci_upper": [float(v) for v in self.ci_upper],
            "cutoff": float(self.cutoff),
            "support": [bool(v) for v in self.support],
            "thresholded_estimate": [float(v) for v in self.thresholded_estimate],
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "SelectionReport":
        return cls(
            posterior_mean=np.asarray(d["posterior_mean"], dtype=float),
            ci_lower=np.asarray(d["ci_lower"], dtype=float),
            ci_upper=np.asarray(d["ci_upper"], dtype=float),
            cutoff=float(d["cutoff"]),
            support=np.asarray(d["support"], dtype=bool),
            thresholded_estimate=np.asarray(d["thresholded_estimate"], dtype=float),
        )


def threshold_scale(n: int, p: int, delta: float = 0.05) -> float:
    """Rate factor (p/n)^(1/2 - delta); equals 1 when p = n."""
    if not 0 < delta < 0.5:
        raise ValueError("delta must lie in (0, 1/2)")
    if n < 1 or p < 1:
        raise ValueError("n and p must be positive")
    if p > n:
        raise ValueError("threshold scaling requires p <= n")
    return float((p / n) ** (0.5 - delta))


def summarize(chain: Chain) -> SelectionReport:
    """Posterior means and equal-tailed 95% intervals, no cutoff applied."""
    if chain.m < 1:
        raise ValueError("chain holds no stored samples")
    mean = chain.thetas.mean(axis=0)
    return SelectionReport(
        posterior_mean=mean,
        ci_lower=np.quantile(chain.thetas, 0.025, axis=0),
        ci_upper=np.quantile(chain.thetas, 0.975, axis=0),
        cutoff=0.0,
        support=np.abs(mean) > 0.0,
        thresholded_estimate=mean.copy(),
    )


def _threshold_vector(estimate: np.ndarray, cutoff: float) -> np.ndarray:
    return np.where(np.abs(estimate) > cutoff, estimate, 0.0)


def apply_threshold(report: SelectionReport, cutoff: float) -> SelectionReport:
    """Re-threshold a report: keep coordinate j only when |mean_j| > cutoff."""
    if cutoff <= 0:
        raise ValueError("cutoff must be positive")
    support = np.abs(report.posterior_mean) > cutoff
    return replace(
        report,
        cutoff=float(cutoff),
        support=support,
        thresholded_estimate=np.where(support, report.posterior_mean, 0.0),
    )


def _subset(data: Dataset, idx: np.ndarray) -> Dataset:
    return Dataset(
        x=data.x[idx],
        y=None if data.y is None else data.y[idx],
        centered=data.centered,
        y_centered=data.y_centered,
        standardized=data.standardized,
        columns=data.columns,
    )


def _cv_fold(args) -> np.ndarray:
    """Per-cutoff held-out errors for one fold (top-level: pool-picklable)."""
    train, test, prior, fold_cfg, grid, el_cfg = args
    chain = run_chain(train, prior, fold_cfg, mode="regression", el_cfg=el_cfg)
    post_mean = chain.thetas.mean(axis=0)
    errs = np.zeros(len(grid))
    for c_i, c in enumerate(grid):
        est = _threshold_vector(post_mean, c)
        errs[c_i] = float(np.mean((test.y - test.x @ est) ** 2))
    return errs


def cv_cutoff_curve(
    data: Dataset,
    prior: PriorSpec,
    cfg: SamplerConfig,
    folds: int = 5,
    cutoff_grid: tuple[float, ...] = DEFAULT_CUTOFF_GRID,
    cv_n_iter: int = 2000,
    seed: int = 0,
    el_cfg: ELConfig | None = None,
    jobs: int = 1,
) -> tuple[float, dict[float, float]]:
    """Cross-validated cutoff choice plus the full per-cutoff error curve.

    One chain is fit per training fold (shortened to ``cv_n_iter`` sweeps);
    every candidate cutoff is scored by mean squared prediction error on the
    held-out fold via the thresholded posterior mean.  Near-ties (relative
    1e-9) resolve to the largest cutoff.  Fold seeds are fixed before any
    fan-out, so the result does not depend on ``jobs``.
    """
    if data.y is None:
        raise ValueError("cross-validated cutoffs require regression data")
    if folds < 2:
        raise ValueError("need at least 2 folds")
    if not cutoff_grid:
        raise ValueError("empty cutoff grid")
    n = data.n
    if folds > n:
        raise ValueError("more folds than observations")
    perm = np.random.default_rng(seed).permutation(n)
    parts = np.array_split(perm, folds)
    if min(part.size for part in parts) < 1:
        raise ValueError("degenerate fold split")
    grid = [float(c) for c in cutoff_grid]
    tasks = []
    for k, hold in enumerate(parts):
        train_idx = np.concatenate([f for j, f in enumerate(parts) if j != k])
        fold_cfg = replace(
            cfg, n_iter=cv_n_iter, burn_in=None, seed=derive_seed(seed, k, _CV_FOLD_ROLE)
        )
        tasks.append(
            (_subset(data, train_idx), _subset(data, hold), prior, fold_cfg, grid, el_cfg)
        )
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            errs = np.asarray(list(pool.map(_cv_fold, tasks)))
    else:
        errs = np.asarray([_cv_fold(t) for t in tasks])
    avg = errs.mean(axis=0)
    best = float(avg.min())
    tol = 1e-9 * max(1.0, abs(best))
    chosen = max(c for c, v in zip(grid, avg) if v <= best + tol)
    return chosen, {c: float(v) for c, v in zip(grid, avg)}


def cv_cutoff(
    data: Dataset,
    prior: PriorSpec,
    cfg: SamplerConfig,
    folds: int = 5,
    cutoff_grid: tuple[float, ...] = DEFAULT_CUTOFF_GRID,
    cv_n_iter: int = 2000,
    seed: int = 0,
    el_cfg: ELConfig | None = None,
    jobs: int = 1,
) -> float:
    """The cross-validated cutoff (see cv_cutoff_curve for the full curve)."""
    chosen, _ = cv_cutoff_curve(
        data, prior, cfg, folds, cutoff_grid, cv_n_iter, seed, el_cfg, jobs
    )
    return chosen
