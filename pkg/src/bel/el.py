"""Empirical likelihood core.

Builds estimating functions and evaluates the log empirical-likelihood
ratio at a candidate parameter by solving the inner Lagrange-multiplier
problem.  The multiplier equation

    sum_i U_i / (1 + lambda' U_i) = 0

is the stationarity condition of the concave dual

    f(lambda) = sum_i log*(1 + lambda' U_i),

which we maximize with a damped Newton method.  log* is the log-star
extension: logarithm above a small threshold, matched quadratic below it,
so the objective stays globally defined while proposals wander outside
the feasible region.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve

from .dataset import Dataset

__all__ = [
    "ELConfig",
    "LagrangeSolution",
    "NotInConvexHull",
    "MaxIterExceeded",
    "estimating_functions_mean",
    "estimating_functions_regression",
    "estimating_functions",
    "solve_lambda",
    "log_el",
    "check_dimension",
]


class NotInConvexHull(ValueError):
    """Zero lies outside the convex hull of the estimating functions.

    The empirical likelihood at this parameter value is exactly zero.
    """


class MaxIterExceeded(RuntimeError):
    """The Newton solver ran out of iterations without meeting tolerance."""


@dataclass(frozen=True)
class ELConfig:
    """Solver controls.

    newton_tol  : stopping tolerance on ||sum_i w_i U_i||
    max_iter    : Newton iteration cap
    logstar_eps : log-star switchover point; default 1/n chosen at solve time
    """

    newton_tol: float = 1e-10
    max_iter: int = 100
    logstar_eps: float | None = None

    def __post_init__(self) -> None:
        if self.newton_tol <= 0:
            raise ValueError("newton_tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        if self.logstar_eps is not None and self.logstar_eps <= 0:
            raise ValueError("logstar_eps must be positive")


@dataclass(frozen=True)
class LagrangeSolution:
    """Converged inner solution at one candidate parameter.

    weights are the maximizing observation probabilities,
    w_i = 1 / (n (1 + lambda' U_i)), and
    log_el_ratio = -sum_i log(1 + lambda' U_i) <= 0.
    """

    lam: np.ndarray
    weights: np.ndarray
    log_el_ratio: float
    converged: bool
    residual_norm: float
    iterations: int


def check_dimension(n: int, p: int) -> None:
    """Reject dimensions where the EL posterior is unreliable (p >= n/2)."""
    if p >= n / 2:
        raise ValueError(
            f"p = {p} with n = {n}: empirical likelihood needs p to grow "
            "slower than n; require p < n/2"
        )


def estimating_functions_mean(data: Dataset, mu: np.ndarray) -> np.ndarray:
    """Row i is x_i - mu (moment condition for a multivariate mean)."""
    mu = np.asarray(mu, dtype=float).ravel()
    if mu.size != data.p:
        raise ValueError(f"mu has length {mu.size}, expected {data.p}")
    return data.x - mu


def estimating_functions_regression(data: Dataset, beta: np.ndarray) -> np.ndarray:
    """Row i is x_i * (y_i - x_i' beta) (least-squares score contribution)."""
    if data.y is None:
        raise ValueError("regression estimating functions require a response")
    beta = np.asarray(beta, dtype=float).ravel()
    if beta.size != data.p:
        raise ValueError(f"beta has length {beta.size}, expected {data.p}")
    resid = data.y - data.x @ beta
    return data.x * resid[:, None]


def estimating_functions(data: Dataset, theta: np.ndarray, mode: str) -> np.ndarray:
    if mode == "mean":
        return estimating_functions_mean(data, theta)
    if mode == "regression":
        return estimating_functions_regression(data, theta)
    raise ValueError(f"unknown mode: {mode!r}")


def _logstar_value(z: np.ndarray, eps: float) -> np.ndarray:
    if z.min() >= eps:
        return np.log(z)
    small = z < eps
    safe = np.where(small, eps, z)
    quad = np.log(eps) - 1.5 + 2.0 * z / eps - z * z / (2.0 * eps * eps)
    return np.where(small, quad, np.log(safe))


def _logstar_d12(z: np.ndarray, eps: float) -> tuple[np.ndarray, np.ndarray]:
    if z.min() >= eps:
        return 1.0 / z, -1.0 / (z * z)
    small = z < eps
    safe = np.where(small, eps, z)
    d1 = np.where(small, 2.0 / eps - z / (eps * eps), 1.0 / safe)
    d2 = np.where(small, -1.0 / (eps * eps), -1.0 / (safe * safe))
    return d1, d2


def solve_lambda(u: np.ndarray, cfg: ELConfig | None = None) -> LagrangeSolution:
    """Maximize the log-star dual; return multiplier, weights, and log-EL ratio.

    Raises NotInConvexHull when zero is separated from the hull of the rows
    of ``u`` (detected by an axis certificate, by residual stagnation with
    nonpositive weights, or at the iteration cap), and MaxIterExceeded when
    the cap is hit while still feasible.
    """
    if cfg is None:
        cfg = ELConfig()
    u = np.ascontiguousarray(u, dtype=float)
    if u.ndim != 2:
        raise ValueError("U must be an n-by-p matrix")
    if not np.all(np.isfinite(u)):
        raise ValueError("U contains non-finite entries")
    n, p = u.shape
    eps = cfg.logstar_eps if cfg.logstar_eps is not None else 1.0 / n

    # Cheap separating-axis certificate: a coordinate of U with all entries
    # strictly one sign puts zero outside the hull.
    if bool((u.min(axis=0) > 0.0).any()) or bool((u.max(axis=0) < 0.0).any()):
        raise NotInConvexHull("zero outside the convex hull (axis certificate)")

    lam = np.zeros(p)
    z = np.ones(n)
    fval = 0.0
    best_res = np.inf
    stall = 0
    eye = np.eye(p)
    zmin = 1.0
    iterations = 0

    for iterations in range(cfg.max_iter):
        zmin = z.min()
        if zmin > 0.0:
            residual = float(np.linalg.norm(u.T @ (1.0 / z))) / n
        else:
            residual = np.inf
        if residual <= cfg.newton_tol:
            weights = 1.0 / (n * z)
            return LagrangeSolution(
                lam=lam,
                weights=weights,
                log_el_ratio=float(-np.log(z).sum()),
                converged=True,
                residual_norm=residual,
                iterations=iterations,
            )
        # Hull-infeasibility heuristic: no residual progress over 10 damped
        # steps while some weight is still nonpositive.
        if residual >= best_res:
            stall += 1
        else:
            stall = 0
            best_res = residual
        if stall >= 10 and zmin <= 0.0:
            raise NotInConvexHull("residual stalled with nonpositive weights")

        d1, d2 = _logstar_d12(z, eps)
        grad = u.T @ d1
        neg_h = (u * (-d2)[:, None]).T @ u  # positive definite curvature
        damp = 0.0
        scale = max(float(np.trace(neg_h)) / p, 1e-30)
        while True:
            try:
                factor = cho_factor(neg_h + damp * scale * eye, lower=True)
                break
            except LinAlgError:
                damp = 1e-8 if damp == 0.0 else damp * 10.0
                if damp > 1e8:
                    raise MaxIterExceeded("dual curvature cannot be factored")
        step = cho_solve(factor, grad)
        w = u @ step
        slope = float(grad @ step)  # >= 0 for an ascent direction
        t = 1.0
        improved = False
        for _ in range(60):
            z_new = z + t * w
            f_new = float(_logstar_value(z_new, eps).sum())
            if f_new >= fval + 1e-4 * t * slope:
                improved = True
                break
            t *= 0.5
        if not improved:
            break  # cannot make progress; classify below
        lam = lam + t * step
        z = z_new
        fval = f_new

    if z.min() <= 0.0:
        raise NotInConvexHull("no feasible weights at iteration cap")
    raise MaxIterExceeded(f"no convergence in {cfg.max_iter} iterations")


def log_el(
    data: Dataset,
    theta: np.ndarray,
    mode: str = "mean",
    cfg: ELConfig | None = None,
) -> float:
    """Log empirical-likelihood ratio at theta; -inf outside the convex hull."""
    u = estimating_functions(data, theta, mode)
    try:
        sol = solve_lambda(u, cfg)
    except (NotInConvexHull, MaxIterExceeded):
        return float("-inf")
    return sol.log_el_ratio
