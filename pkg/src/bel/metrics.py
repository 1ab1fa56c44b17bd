"""Scoring and chain diagnostics: MSE, support counts, F1, autocorrelation, ESS."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "BenchRow",
    "mse",
    "support_counts",
    "f1",
    "autocorrelation",
    "ess",
]


@dataclass(frozen=True)
class BenchRow:
    """One benchmark-table row: a method's replicate-averaged scores.

    Counts are reals because they are averages over replicates.
    """

    method: str
    mse_x1000: float
    true_count: float
    false_count: float
    f1_x100: float
    failures: int = 0


def mse(estimate, truth) -> float:
    """Mean squared coordinate error."""
    est = np.asarray(estimate, dtype=float).ravel()
    tru = np.asarray(truth, dtype=float).ravel()
    if est.size != tru.size:
        raise ValueError("estimate and truth must have equal lengths")
    d = est - tru
    return float(d @ d / est.size)


def support_counts(selected, true_support) -> tuple[int, int]:
    """(# truly nonzero selected, # falsely nonzero selected)."""
    sel = np.asarray(selected, dtype=bool).ravel()
    tru = np.asarray(true_support, dtype=bool).ravel()
    if sel.size != tru.size:
        raise ValueError("selected and true_support must have equal lengths")
    true_count = int(np.sum(sel & tru))
    false_count = int(np.sum(sel & ~tru))
    return true_count, false_count


def f1(true_count: float, false_count: float, n_actual_positives: float) -> float:
    """Harmonic mean of precision T/(T+F) and recall T/actual; 0 when T = 0."""
    if true_count < 0 or false_count < 0 or n_actual_positives <= 0:
        raise ValueError("counts must be nonnegative with positive actuals")
    if true_count == 0:
        return 0.0
    precision = true_count / (true_count + false_count)
    recall = true_count / n_actual_positives
    return float(2.0 * precision * recall / (precision + recall))


def _autocovariance(x: np.ndarray) -> np.ndarray:
    """Biased autocovariance sequence via FFT, lags 0..m-1."""
    m = x.size
    nfft = 1
    while nfft < 2 * m:
        nfft <<= 1
    f = np.fft.rfft(x, nfft)
    acov = np.fft.irfft(f * np.conj(f), nfft)[:m]
    return acov / m


def _is_degenerate(x: np.ndarray, acov0: float) -> bool:
    # variance at rounding-noise level relative to the series magnitude
    scale = float(np.mean(x * x))
    return acov0 <= 1e-24 * max(scale, 1.0) or not np.isfinite(acov0)


def autocorrelation(series, max_lag: int | None = None) -> np.ndarray:
    """Sample autocorrelation for lags 0..max_lag (1 at lag 0).

    A constant series returns (1, 0, 0, ...).
    """
    x = np.asarray(series, dtype=float).ravel()
    m = x.size
    if m < 2:
        raise ValueError("series too short for autocorrelation")
    if max_lag is None:
        max_lag = m - 1
    max_lag = min(max_lag, m - 1)
    xc = x - x.mean()
    acov = _autocovariance(xc)
    out = np.zeros(max_lag + 1)
    out[0] = 1.0
    if not _is_degenerate(x, float(acov[0])):
        out[1:] = acov[1 : max_lag + 1] / acov[0]
    return out


def ess(series) -> float:
    """Effective sample size by the initial-positive-sequence estimator.

    Sums consecutive autocorrelation pairs while they stay positive, clips
    the result at the series length, and defines a constant series as 0.
    """
    x = np.asarray(series, dtype=float).ravel()
    m = x.size
    if m < 10:
        raise ValueError("series too short for ESS (need at least 10)")
    xc = x - x.mean()
    acov = _autocovariance(xc)
    if _is_degenerate(x, float(acov[0])):
        return 0.0  # degenerate (constant) series
    rho = acov / acov[0]
    half = m // 2
    pair = rho[0 : 2 * half : 2] + rho[1 : 2 * half : 2]
    tau = -1.0
    for g in pair:
        if g <= 0:
            break
        tau += 2.0 * g
    if tau <= 0:
        return float(m)
    return float(min(m, m / tau))
