"""Simulation designs: sparse-mean data with equicorrelated chi-square noise
and sparse linear regression under three error scenarios."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dataset import Dataset

__all__ = [
    "MeanDesign",
    "RegressionDesign",
    "MU0_HEAD",
    "equicorrelation_sqrt",
    "gen_mean_data",
    "gen_regression_data",
]

MU0_HEAD = (3.0, 2.0, 1.0, 0.6, 0.3)
_BETA_HEAD_AB = (1.0, 2.0, 3.0, 4.0, 5.0)
_BETA_HEAD_C = (0.3, 0.6, 3.0, 4.0, 5.0)


def _padded(head: tuple[float, ...], p: int) -> np.ndarray:
    out = np.zeros(p)
    out[: len(head)] = head
    return out


@dataclass(frozen=True)
class MeanDesign:
    """Sparse mean vector (3, 2, 1, 0.6, 0.3, 0, ..., 0) with equicorrelation rho."""

    n: int
    p: int
    rho: float = 0.3
    seed: int = 0
    mu0: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        if self.p < 5:
            raise ValueError("mean design requires p >= 5")
        if self.n < 2:
            raise ValueError("mean design requires n >= 2")
        if not (0.0 <= self.rho < 1.0):
            raise ValueError("rho must lie in [0, 1)")
        if self.mu0 is not None and len(self.mu0) != self.p:
            raise ValueError("mu0 must have length p")

    def mean_vector(self) -> np.ndarray:
        if self.mu0 is not None:
            return np.asarray(self.mu0, dtype=float)
        return _padded(MU0_HEAD, self.p)


@dataclass(frozen=True)
class RegressionDesign:
    """Sparse linear model with standard-normal X and scenario-specific errors.

    Scenario A: eps ~ N(0, 9); B: eps ~ 0.5 N(3,1) + 0.5 N(-3,1); C: same
    mixture errors as B but with the weak-signal coefficient head.
    """

    scenario: str
    n: int
    p: int
    seed: int = 0

    def __post_init__(self) -> None:
        if self.scenario not in ("A", "B", "C"):
            raise ValueError("scenario must be A, B, or C")
        if self.p < 5:
            raise ValueError("regression design requires p >= 5")
        if self.n < 2:
            raise ValueError("regression design requires n >= 2")

    @property
    def beta0(self) -> np.ndarray:
        head = _BETA_HEAD_C if self.scenario == "C" else _BETA_HEAD_AB
        return _padded(head, self.p)


def equicorrelation_sqrt(p: int, rho: float) -> np.ndarray:
    """Symmetric square root of the equicorrelation matrix (1-rho)I + rho J.

    Closed form a*I + b*J from the two eigenvalues 1 + (p-1)rho (ones
    direction) and 1 - rho (its complement).
    """
    if p < 1:
        raise ValueError("p must be positive")
    lam_ones = 1.0 + (p - 1) * rho
    lam_rest = 1.0 - rho
    if lam_ones <= 0 or lam_rest <= 0:
        raise ValueError(f"equicorrelation with rho = {rho} is not positive definite")
    a = np.sqrt(lam_rest)
    b = (np.sqrt(lam_ones) - np.sqrt(lam_rest)) / p
    return a * np.eye(p) + b * np.ones((p, p))


def gen_mean_data(design: MeanDesign) -> Dataset:
    """x_i = mu0 + S (z_i - 1) with z elementwise iid chi-square(1), S = Gamma^(1/2).

    Rows have mean mu0; the covariance is 2*Gamma because var(chi^2_1) = 2.
    """
    rng = np.random.default_rng(design.seed)
    s = equicorrelation_sqrt(design.p, design.rho)
    z = rng.chisquare(1.0, size=(design.n, design.p))
    x = design.mean_vector() + (z - 1.0) @ s  # S symmetric, so right-multiply
    return Dataset(x=x)


def gen_regression_data(design: RegressionDesign) -> Dataset:
    """X entries iid N(0,1); y = X beta0 + eps per the design's scenario."""
    rng = np.random.default_rng(design.seed)
    x = rng.standard_normal((design.n, design.p))
    if design.scenario == "A":
        eps = rng.normal(0.0, 3.0, size=design.n)
    else:
        sign = np.where(rng.uniform(size=design.n) < 0.5, 3.0, -3.0)
        eps = sign + rng.standard_normal(design.n)
    y = x @ design.beta0 + eps
    return Dataset(x=x, y=y)
