"""MCMC samplers for the empirical-likelihood shrinkage posterior.

Two theta-update kernels share one sweep structure (gamma update, then the
mixture scales tau^2, then a Metropolis-Hastings theta move):

* "rw"     - symmetric random-walk moves: a full-vector step along a uniform
             unit direction with probability 0.4, otherwise one or two random
             coordinates perturbed (0.3 / 0.3).
* "approx" - an independence proposal N(mu_tilde, Sigma_tilde) combining a
             data-based Gaussian approximation of the EL with the current
             conditional prior: Sigma_tilde = (V^-1 + D_tau^-1)^-1 and
             mu_tilde = Sigma_tilde V^-1 theta_hat, where V is the
             curvature-matched covariance of theta_hat (mean mode: Sigma_n/n;
             regression: the OLS sandwich).

The global rate gamma is adapted by Monte-Carlo EM (closed-form update from
the running mean of tau^2 draws), drawn from its Gamma hyperprior posterior,
or held fixed.
"""
from __future__ import annotations

import csv
import json
import math
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve, solve_triangular

from .dataset import Dataset
from .el import ELConfig, check_dimension, estimating_functions, log_el
from .metrics import autocorrelation, ess
from .priors import FLAT_TAU_SQ, PriorSpec, local_linear_weights, log_conditional_prior

__all__ = [
    "ChainState",
    "SamplerConfig",
    "Chain",
    "initialize",
    "update_gamma_em",
    "update_gamma_conjugate",
    "sample_inverse_gaussian",
    "update_tau",
    "propose_rw",
    "propose_normal_approx",
    "approx_proposal_params",
    "mh_step",
    "run_chain",
    "save_chain",
    "load_chain",
]

_GAMMA_MIN, _GAMMA_MAX = 1e-6, 1e6
_THETA_CLAMP = 1e-8  # lower clamp on |theta_j| inside mu' = gamma / |theta_j|
_LOG_2PI = math.log(2.0 * math.pi)


@dataclass
class ChainState:
    """One sampler state: theta, mixture scales, rate, and cached posterior."""

    theta: np.ndarray
    tau_sq: np.ndarray
    gamma: float
    log_post: float = math.nan
    iteration: int = 1
    log_el_val: float = math.nan  # likelihood part of log_post, cached separately


@dataclass(frozen=True)
class SamplerConfig:
    """Chain controls.

    step_size None means pilot adaptation during burn-in (random-walk only),
    targeting 20-40% acceptance, frozen afterward.  burn_in None means
    n_iter // 2.
    """

    algorithm: str = "approx"
    n_iter: int = 10000
    burn_in: int | None = None
    thin: int = 1
    step_size: float | None = None
    move_probs: tuple[float, float, float] = (0.4, 0.3, 0.3)
    seed: int = 0

    def __post_init__(self) -> None:
        if self.algorithm not in ("rw", "approx"):
            raise ValueError(f"unknown algorithm: {self.algorithm!r}")
        if self.n_iter < 1:
            raise ValueError("n_iter must be >= 1")
        if self.thin < 1:
            raise ValueError("thin must be >= 1")
        if self.burn_in is not None and not 0 <= self.burn_in < self.n_iter:
            raise ValueError("burn_in must satisfy 0 <= burn_in < n_iter")
        if self.step_size is not None and self.step_size < 0:
            raise ValueError("step_size must be nonnegative")
        if abs(sum(self.move_probs) - 1.0) > 1e-12 or any(
            q < 0 for q in self.move_probs
        ):
            raise ValueError("move_probs must be nonnegative and sum to 1")

    @property
    def resolved_burn_in(self) -> int:
        return self.n_iter // 2 if self.burn_in is None else self.burn_in


@dataclass
class Chain:
    """Stored post-burn-in, thinned trajectory with diagnostics."""

    thetas: np.ndarray  # (m, p)
    tau_sqs: np.ndarray  # (m, p)
    gammas: np.ndarray  # (m,)
    iterations: np.ndarray  # (m,)
    acceptance_rate: float
    ess: np.ndarray  # per coordinate
    lag1_autocorr: np.ndarray  # per coordinate
    mode: str
    config: SamplerConfig
    log_posts: np.ndarray | None = None  # not persisted; in-memory re-verification

    @property
    def m(self) -> int:
        return self.thetas.shape[0]

    @property
    def p(self) -> int:
        return self.thetas.shape[1]


def initialize(data: Dataset, mode: str = "mean") -> ChainState:
    """Starting state: theta from the data, scales and rate from the
    per-coordinate estimating-function magnitudes.

    tau_j^2 = n / sum_i U_ij^2 and gamma = sqrt(2 sum_ij U_ij^2 / n), with the
    estimating functions evaluated at the initial theta (mean mode: column
    means, so U_ij = X_ij - Xbar_j; regression mode: OLS).  Clamps keep both
    finite on degenerate (zero-residual) data.
    """
    x = data.x
    n, p = x.shape
    if mode == "mean":
        theta = x.mean(axis=0)
    elif mode == "regression":
        if data.y is None:
            raise ValueError("regression mode requires a response")
        beta, _, rank, _ = np.linalg.lstsq(x, data.y, rcond=None)
        if rank < p:
            raise np.linalg.LinAlgError("singular design: X is rank deficient")
        theta = beta
    else:
        raise ValueError(f"unknown mode: {mode!r}")
    u = estimating_functions(data, theta, mode)
    col_ss = np.einsum("ij,ij->j", u, u)  # sum_i U_ij^2
    tau_sq = np.minimum(n / np.maximum(col_ss, 1e-300), FLAT_TAU_SQ)
    gamma = float(np.clip(np.sqrt(2.0 * col_ss.sum() / n), _GAMMA_MIN, _GAMMA_MAX))
    return ChainState(theta=theta, tau_sq=tau_sq, gamma=gamma)


def update_gamma_em(tau_history: np.ndarray, p: int) -> float:
    """Closed-form EM update gamma = sqrt(2p / sum_j mean(tau_j^2 history)).

    ``tau_history`` is the per-coordinate running mean of all tau^2 draws up
    to the previous iteration.  Result clamped to [1e-6, 1e6].
    """
    h = np.asarray(tau_history, dtype=float)
    if h.size == 0:
        raise ValueError("empty tau-squared history")
    total = float(h.sum())
    if total <= 0 or not np.isfinite(total):
        return _GAMMA_MAX
    return float(np.clip(np.sqrt(2.0 * p / total), _GAMMA_MIN, _GAMMA_MAX))


def update_gamma_conjugate(
    tau_sq: np.ndarray, r: float, delta_prime: float, rng: np.random.Generator
) -> float:
    """Draw gamma^2 from Gamma(shape p + r, rate sum(tau^2)/2 + delta'); return its root."""
    tau_sq = np.asarray(tau_sq, dtype=float)
    if r <= 0 or delta_prime <= 0:
        raise ValueError("r and delta_prime must be positive")
    shape = tau_sq.size + r
    rate = 0.5 * float(tau_sq.sum()) + delta_prime
    gamma_sq = rng.gamma(shape, 1.0 / rate)
    return float(np.clip(np.sqrt(gamma_sq), _GAMMA_MIN, _GAMMA_MAX))


def sample_inverse_gaussian(mu_prime, lambda_prime, rng: np.random.Generator):
    """Inverse-Gaussian(mean mu', shape lambda') draws.

    Transformation method with uniform correction: square a standard normal,
    map it to the smaller root of the defining quadratic, then pick between
    the root and its reciprocal image with probability mu'/(mu' + root).
    Broadcasts over array parameters; consumes one normal and one uniform
    per draw.
    """
    mu = np.asarray(mu_prime, dtype=float)
    lam = np.asarray(lambda_prime, dtype=float)
    if np.any(mu <= 0) or np.any(lam <= 0):
        raise ValueError("inverse-Gaussian parameters must be positive")
    shape = np.broadcast_shapes(mu.shape, lam.shape)
    nu = rng.standard_normal(shape) ** 2
    # larger root first (sum of positive terms, no cancellation); the smaller
    # root follows from the product identity x1 * x2 = mu^2
    disc = np.sqrt(4.0 * mu * lam * nu + (mu * nu) ** 2)
    x2 = mu + (mu / (2.0 * lam)) * (mu * nu + disc)
    x1 = mu * mu / x2
    u = rng.uniform(size=shape)
    out = np.where(u <= mu / (mu + x1), x1, x2)
    if np.isscalar(mu_prime) and np.isscalar(lambda_prime):
        return float(out)
    return out


def update_tau(state: ChainState, prior: PriorSpec, rng: np.random.Generator) -> np.ndarray:
    """Refresh the mixture scales: 1/tau_j^2 ~ IG(rate_j/|theta_j|, rate_j^2).

    Laplace uses the global rate gamma for every coordinate; SCAD substitutes
    the linearized per-coordinate rates from the previous theta.  Coordinates
    with rate zero are locally unpenalized and get the flat surrogate scale
    (a draw is still consumed so the stream never depends on the prior kind).
    """
    p = state.theta.size
    if prior.kind == "scad":
        rates = local_linear_weights(state.theta, state.gamma, prior.scad_a)
    else:
        rates = np.full(p, state.gamma)
    flat = rates <= 0.0
    safe_rates = np.where(flat, 1e-12, rates)
    abs_theta = np.maximum(np.abs(state.theta), _THETA_CLAMP)
    inv_tau = sample_inverse_gaussian(safe_rates / abs_theta, safe_rates**2, rng)
    tau_sq = 1.0 / np.maximum(inv_tau, 1e-300)
    return np.where(flat, FLAT_TAU_SQ, tau_sq)


def propose_rw(
    state: ChainState,
    cfg: SamplerConfig,
    rng: np.random.Generator,
    step_size: float | None = None,
) -> np.ndarray:
    """Symmetric random-walk proposal.

    Draw order per call: the move selector, the coordinate pair, then the
    normal increments (p+1 for a full-vector move, 1 or 2 for coordinate
    moves).
    """
    s = cfg.step_size if step_size is None else step_size
    if s is None:
        raise ValueError("random-walk proposal needs a step size")
    p = state.theta.size
    un = rng.uniform()
    if p >= 2:
        idx = rng.choice(p, size=2, replace=False)
    else:
        idx = np.zeros(2, dtype=int)
    a1, a2, _ = cfg.move_probs
    theta = state.theta.copy()
    if un < a1:
        e = rng.standard_normal(p)
        e /= np.linalg.norm(e)  # uniform direction on the unit sphere
        theta += e * (rng.standard_normal() * s)
    elif un < a1 + a2:
        theta[idx[0]] += rng.standard_normal() * s
    else:
        theta[idx[0]] += rng.standard_normal() * s
        theta[idx[1]] += rng.standard_normal() * s
    return theta


@dataclass(frozen=True)
class _ApproxBase:
    """Data-only pieces of the independence proposal: V^-1 and V^-1 theta_hat."""

    v_inv: np.ndarray
    v_inv_theta: np.ndarray


def _inv_spd(m: np.ndarray, what: str) -> np.ndarray:
    """Invert an SPD matrix, ridge-jittering (with a warning) if singular."""
    p = m.shape[0]
    eye = np.eye(p)
    try:
        low = cho_factor(m, lower=True)
        d = np.diag(low[0])
        # LAPACK can return a factor with a rounding-noise pivot instead of
        # failing on an exactly singular matrix; treat that as singular too.
        if d.min() > 1e-7 * d.max():
            return cho_solve(low, eye)
    except LinAlgError:
        pass
    tr = float(np.trace(m))
    jitter = 1e-8 * (tr / p if tr > 0 else 1.0)
    warnings.warn(
        f"{what} is singular; adding ridge jitter {jitter:.3e}", RuntimeWarning
    )
    for _ in range(40):
        try:
            return cho_solve(cho_factor(m + jitter * eye, lower=True), eye)
        except LinAlgError:
            jitter *= 10.0
    raise np.linalg.LinAlgError(f"{what} is not positive definite")


def _approx_base(data: Dataset, mode: str) -> _ApproxBase:
    x = data.x
    n, p = x.shape
    if mode == "mean":
        xbar = x.mean(axis=0)
        xc = x - xbar
        sigma_n = xc.T @ xc / n
        v_inv = n * _inv_spd(sigma_n, "sample covariance")  # V = Sigma_n / n
        theta_hat = xbar
    else:
        if data.y is None:
            raise ValueError("regression mode requires a response")
        beta, _, rank, _ = np.linalg.lstsq(x, data.y, rcond=None)
        if rank < p:
            raise np.linalg.LinAlgError("singular design: X is rank deficient")
        resid = data.y - x @ beta
        bread = x.T @ x
        meat = x.T @ (x * (resid**2)[:, None])  # sum_i U_i U_i'
        v_inv = bread @ _inv_spd(meat, "estimating-function covariance") @ bread
        theta_hat = beta
    return _ApproxBase(v_inv=v_inv, v_inv_theta=v_inv @ theta_hat)


def approx_proposal_params(
    data: Dataset, state: ChainState, mode: str = "mean"
) -> tuple[np.ndarray, np.ndarray]:
    """(mu_tilde, Sigma_tilde) of the independence proposal at this state."""
    base = _approx_base(data, mode)
    prec = base.v_inv + np.diag(1.0 / state.tau_sq)
    cov = np.linalg.inv(prec)
    return cov @ base.v_inv_theta, cov


def propose_normal_approx(
    data: Dataset,
    state: ChainState,
    mode: str = "mean",
    rng: np.random.Generator | None = None,
    base: _ApproxBase | None = None,
) -> tuple[np.ndarray, float, float]:
    """Independence proposal; returns (draw, log q(draw), log q(current))."""
    if rng is None:
        raise ValueError("propose_normal_approx requires an rng")
    if base is None:
        base = _approx_base(data, mode)
    p = state.theta.size
    prec = base.v_inv + np.diag(1.0 / state.tau_sq)
    low, _ = cho_factor(prec, lower=True)
    mu_tilde = cho_solve((low, True), base.v_inv_theta)
    z = rng.standard_normal(p)
    # x = mu + L^-T z has covariance (L L')^-1 = prec^-1
    delta = solve_triangular(low, z, trans=1, lower=True)
    proposal = mu_tilde + delta
    const = float(np.log(np.diag(low)).sum()) - 0.5 * p * _LOG_2PI

    def _logq(v: np.ndarray) -> float:
        d = v - mu_tilde
        return const - 0.5 * float(d @ (prec @ d))

    return proposal, _logq(proposal), _logq(state.theta)


def _make_loglik(
    data: Dataset,
    mode: str,
    el_cfg: ELConfig | None,
    log_likelihood: Callable[[np.ndarray], float] | None,
) -> Callable[[np.ndarray], float]:
    if log_likelihood is not None:
        return log_likelihood
    return lambda theta: log_el(data, theta, mode, el_cfg)


def mh_step(
    state: ChainState,
    proposal: np.ndarray,
    log_q_fwd: float,
    log_q_rev: float,
    data: Dataset,
    prior: PriorSpec,
    rng: np.random.Generator,
    mode: str = "mean",
    el_cfg: ELConfig | None = None,
    log_likelihood: Callable[[np.ndarray], float] | None = None,
) -> tuple[ChainState, bool]:
    """One Metropolis-Hastings accept/reject decision on theta.

    Returns the (possibly unchanged) state and the acceptance flag.  An
    infeasible proposal (log-likelihood -inf) is always rejected; the
    uniform is still consumed so streams stay aligned across prior kinds.
    """
    loglik = _make_loglik(data, mode, el_cfg, log_likelihood)
    ll_prop = loglik(proposal)
    u = rng.uniform()
    if ll_prop == -math.inf:
        return state, False
    log_post_prop = ll_prop + log_conditional_prior(proposal, state.tau_sq)
    log_ratio = (log_post_prop - state.log_post) + (log_q_rev - log_q_fwd)
    accept = (math.log(u) if u > 0.0 else -math.inf) < log_ratio
    if accept:
        return (
            ChainState(
                theta=np.asarray(proposal, dtype=float),
                tau_sq=state.tau_sq,
                gamma=state.gamma,
                log_post=log_post_prop,
                iteration=state.iteration,
                log_el_val=ll_prop,
            ),
            True,
        )
    return state, False


def run_chain(
    data: Dataset,
    prior: PriorSpec,
    cfg: SamplerConfig,
    mode: str = "mean",
    el_cfg: ELConfig | None = None,
    log_likelihood: Callable[[np.ndarray], float] | None = None,
) -> Chain:
    """Run one chain: per-iteration order is gamma, then tau^2, then theta.

    The initialized state is iteration 1; sweeps run from iteration 2 and
    iteration k is stored when k > burn_in and (k - burn_in) % thin == 0.
    ``log_likelihood`` overrides the EL evaluation (testing hook).
    """
    n, p = data.x.shape
    check_dimension(n, p)
    burn_in = cfg.resolved_burn_in
    rng = np.random.default_rng(cfg.seed)
    loglik = _make_loglik(data, mode, el_cfg, log_likelihood)

    state = initialize(data, mode)
    state.log_el_val = loglik(state.theta)
    if state.log_el_val == -math.inf:
        raise ValueError("initial state has zero likelihood")
    state.log_post = state.log_el_val + log_conditional_prior(state.theta, state.tau_sq)

    # Running per-coordinate mean of tau^2 draws (seeded by the initial
    # value) drives the EM gamma update.  SCAD flat-surrogate coordinates do
    # not contribute, else the 1e6 surrogate collapses gamma.
    running_sum = state.tau_sq.copy()
    running_cnt = np.ones(p)

    base: _ApproxBase | None = None
    if cfg.algorithm == "approx" or cfg.step_size is None:
        try:
            base = _approx_base(data, mode)
        except np.linalg.LinAlgError:
            if cfg.algorithm == "approx":
                raise
            base = None

    if cfg.algorithm == "rw":
        if cfg.step_size is not None:
            s_live = cfg.step_size
        elif base is not None:
            v_diag = np.diag(np.linalg.inv(base.v_inv))
            s_live = float(np.sqrt(np.mean(np.abs(v_diag))))
        else:
            s_live = 0.5
    else:
        s_live = 0.0

    kept_th: list[np.ndarray] = []
    kept_tau: list[np.ndarray] = []
    kept_gam: list[float] = []
    kept_it: list[int] = []
    kept_lp: list[float] = []

    def keep(st: ChainState, k: int) -> None:
        if k > burn_in and (k - burn_in) % cfg.thin == 0:
            kept_th.append(st.theta.copy())
            kept_tau.append(st.tau_sq.copy())
            kept_gam.append(st.gamma)
            kept_it.append(k)
            kept_lp.append(st.log_post)

    keep(state, 1)
    accept_count = 0
    window_acc = 0
    window_n = 0

    for k in range(2, cfg.n_iter + 1):
        if prior.gamma_mode == "em":
            state.gamma = update_gamma_em(running_sum / running_cnt, p)
        elif prior.gamma_mode == "hyperprior":
            state.gamma = update_gamma_conjugate(state.tau_sq, prior.r, prior.delta, rng)
        elif prior.gamma_mode == "fixed":
            state.gamma = float(prior.gamma)

        tau_sq = update_tau(state, prior, rng)
        if prior.kind == "scad":
            drawn = local_linear_weights(state.theta, state.gamma, prior.scad_a) > 0.0
            running_sum[drawn] += tau_sq[drawn]
            running_cnt[drawn] += 1.0
        else:
            running_sum += tau_sq
            running_cnt += 1.0
        state.tau_sq = tau_sq
        state.log_post = state.log_el_val + log_conditional_prior(state.theta, tau_sq)

        if cfg.algorithm == "rw":
            proposal = propose_rw(state, cfg, rng, step_size=s_live)
            lqf = lqr = 0.0
        else:
            proposal, lqf, lqr = propose_normal_approx(data, state, mode, rng, base=base)
        state, accepted = mh_step(
            state,
            proposal,
            lqf,
            lqr,
            data,
            prior,
            rng,
            mode=mode,
            el_cfg=el_cfg,
            log_likelihood=log_likelihood,
        )
        state.iteration = k
        accept_count += accepted

        # Pilot step-size tuning: burn-in only, frozen afterward.
        if cfg.algorithm == "rw" and cfg.step_size is None and k <= burn_in:
            window_acc += accepted
            window_n += 1
            if window_n == 100:
                rate = window_acc / 100.0
                if rate < 0.20:
                    s_live = max(s_live * 0.7, 1e-8)
                elif rate > 0.40:
                    s_live = min(s_live * 1.4, 1e8)
                window_acc = 0
                window_n = 0

        keep(state, k)

    m = len(kept_th)
    thetas = np.asarray(kept_th) if m else np.zeros((0, p))
    tau_sqs = np.asarray(kept_tau) if m else np.zeros((0, p))
    if m >= 10:
        ess_vec = np.array([ess(thetas[:, j]) for j in range(p)])
    else:
        ess_vec = np.full(p, np.nan)
    if m >= 2:
        lag1 = np.array([autocorrelation(thetas[:, j], 1)[1] for j in range(p)])
    else:
        lag1 = np.full(p, np.nan)
    return Chain(
        thetas=thetas,
        tau_sqs=tau_sqs,
        gammas=np.asarray(kept_gam),
        iterations=np.asarray(kept_it, dtype=int),
        acceptance_rate=(accept_count / (cfg.n_iter - 1)) if cfg.n_iter > 1 else 0.0,
        ess=ess_vec,
        lag1_autocorr=lag1,
        mode=mode,
        config=cfg,
        log_posts=np.asarray(kept_lp),
    )


# ---------------------------------------------------------------------------
# Chain persistence: columnar CSV plus a JSON sidecar.

_FMT = ".17g"


def _meta_path_for(csv_path: Path) -> Path:
    return csv_path.with_suffix(".json")


def save_chain(chain: Chain, csv_path: str | Path, meta_path: str | Path | None = None) -> None:
    """Write samples to CSV (iteration, theta_*, tau_sq_*, gamma) and the
    config/diagnostics sidecar to JSON.  Values round-trip bit-exactly."""
    csv_path = Path(csv_path)
    meta_path = _meta_path_for(csv_path) if meta_path is None else Path(meta_path)
    p = chain.p
    header = (
        ["iteration"]
        + [f"theta_{j + 1}" for j in range(p)]
        + [f"tau_sq_{j + 1}" for j in range(p)]
        + ["gamma"]
    )
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for i in range(chain.m):
            row = [str(int(chain.iterations[i]))]
            row += [format(v, _FMT) for v in chain.thetas[i]]
            row += [format(v, _FMT) for v in chain.tau_sqs[i]]
            row.append(format(chain.gammas[i], _FMT))
            writer.writerow(row)
    cfg = chain.config
    meta = {
        "mode": chain.mode,
        "seed": cfg.seed,
        "acceptance_rate": chain.acceptance_rate,
        "ess": [None if math.isnan(v) else v for v in chain.ess],
        "lag1_autocorr": [None if math.isnan(v) else v for v in chain.lag1_autocorr],
        "config": {
            "algorithm": cfg.algorithm,
            "n_iter": cfg.n_iter,
            "burn_in": cfg.burn_in,
            "thin": cfg.thin,
            "step_size": cfg.step_size,
            "move_probs": list(cfg.move_probs),
            "seed": cfg.seed,
        },
    }
    with meta_path.open("w") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_chain(csv_path: str | Path, meta_path: str | Path | None = None) -> Chain:
    """Rebuild a Chain from its CSV and JSON sidecar."""
    csv_path = Path(csv_path)
    meta_path = _meta_path_for(csv_path) if meta_path is None else Path(meta_path)
    with csv_path.open(newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        rows = [r for r in reader if r]
    n_cols = len(header)
    if n_cols < 3 or (n_cols - 2) % 2 != 0:
        raise ValueError(f"{csv_path}: unexpected chain column layout")
    p = (n_cols - 2) // 2
    data = np.asarray([[float(c) for c in r] for r in rows], dtype=float)
    data = data.reshape(-1, n_cols)
    with meta_path.open() as fh:
        meta = json.load(fh)
    raw_cfg = meta["config"]
    cfg = SamplerConfig(
        algorithm=raw_cfg["algorithm"],
        n_iter=raw_cfg["n_iter"],
        burn_in=raw_cfg["burn_in"],
        thin=raw_cfg["thin"],
        step_size=raw_cfg["step_size"],
        move_probs=tuple(raw_cfg["move_probs"]),
        seed=raw_cfg["seed"],
    )
    to_arr = lambda vals: np.array(
        [np.nan if v is None else v for v in vals], dtype=float
    )
    return Chain(
        thetas=data[:, 1 : 1 + p],
        tau_sqs=data[:, 1 + p : 1 + 2 * p],
        gammas=data[:, 1 + 2 * p],
        iterations=data[:, 0].astype(int),
        acceptance_rate=meta["acceptance_rate"],
        ess=to_arr(meta["ess"]),
        lag1_autocorr=to_arr(meta["lag1_autocorr"]),
        mode=meta["mode"],
        config=cfg,
        log_posts=None,
    )
