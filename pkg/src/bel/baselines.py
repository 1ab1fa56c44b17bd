"""Comparison estimators: soft/hard-thresholded means and OLS with t intervals."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import stats

from .dataset import Dataset

__all__ = ["OLSFit", "soft_threshold_mean", "hard_threshold_mean", "ols"]


@dataclass(frozen=True)
class OLSFit:
    beta: np.ndarray
    se: np.ndarray
    ci_lower: np.ndarray
    ci_upper: np.ndarray
    sigma_sq: float
    dof: int


def soft_threshold_mean(data: Dataset, s: float) -> np.ndarray:
    """sign(xbar_j) (|xbar_j| - s)_+ coordinate-wise."""
    if s < 0:
        raise ValueError("threshold must be nonnegative")
    xbar = data.x.mean(axis=0)
    return np.sign(xbar) * np.maximum(np.abs(xbar) - s, 0.0)


def hard_threshold_mean(data: Dataset, s: float) -> np.ndarray:
    """xbar_j I(|xbar_j| > s); strict inequality, so equality zeroes out."""
    if s < 0:
        raise ValueError("threshold must be nonnegative")
    xbar = data.x.mean(axis=0)
    return np.where(np.abs(xbar) > s, xbar, 0.0)


def ols(data: Dataset, level: float = 0.95) -> OLSFit:
    """Least squares via QR with classical t-based confidence intervals."""
    if data.y is None:
        raise ValueError("OLS requires a response")
    x, y = data.x, data.y
    n, p = x.shape
    if n <= p:
        raise np.linalg.LinAlgError("need n > p for OLS intervals")
    q, r = np.linalg.qr(x)
    diag_r = np.abs(np.diag(r))
    if diag_r.min() <= 1e-12 * max(diag_r.max(), 1.0):
        raise np.linalg.LinAlgError("design matrix is rank deficient")
    beta = np.linalg.solve(r, q.T @ y)
    resid = y - x @ beta
    dof = n - p
    sigma_sq = float(resid @ resid / dof)
    r_inv = np.linalg.solve(r, np.eye(p))
    xtx_inv_diag = (r_inv * r_inv).sum(axis=1)  # diag of (X'X)^-1 from R^-1 R^-T
    se = np.sqrt(sigma_sq * xtx_inv_diag)
    tcrit = float(stats.t.ppf(0.5 + level / 2.0, dof))
    return OLSFit(
        beta=beta,
        se=se,
        ci_lower=beta - tcrit * se,
        ci_upper=beta + tcrit * se,
        sigma_sq=sigma_sq,
        dof=dof,
    )
