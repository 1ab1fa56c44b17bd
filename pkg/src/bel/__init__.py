"""Bayesian variable selection through empirical likelihood.

Evaluate the empirical likelihood of a mean vector or regression
coefficients, sample the shrinkage posterior (Laplace or SCAD-linearized
prior) with either a random-walk or a Gaussian-approximation MCMC kernel,
and hard-threshold posterior means to select variables.
"""
from .baselines import OLSFit, hard_threshold_mean, ols, soft_threshold_mean
from .bench import (
    MEAN_METHODS,
    REGRESSION_METHODS,
    CellSpec,
    format_rows,
    run_cell,
    write_bench_csv,
    write_bench_json,
)
from .dataset import (
    DataFormatError,
    Dataset,
    center,
    read_dataset_csv,
    standardize,
    write_dataset_csv,
)
from .el import (
    ELConfig,
    LagrangeSolution,
    MaxIterExceeded,
    NotInConvexHull,
    check_dimension,
    estimating_functions,
    estimating_functions_mean,
    estimating_functions_regression,
    log_el,
    solve_lambda,
)
from .metrics import BenchRow, autocorrelation, ess, f1, mse, support_counts
from .priors import (
    FLAT_TAU_SQ,
    PriorSpec,
    local_linear_weights,
    log_conditional_prior,
    scad_derivative,
    scad_penalty,
)
from .rng import derive_seed, spawn_seeds
from .samplers import (
    Chain,
    ChainState,
    SamplerConfig,
    approx_proposal_params,
    initialize,
    load_chain,
    mh_step,
    propose_normal_approx,
    propose_rw,
    run_chain,
    sample_inverse_gaussian,
    save_chain,
    update_gamma_conjugate,
    update_gamma_em,
    update_tau,
)
from .selection import (
    DEFAULT_CUTOFF,
    DEFAULT_CUTOFF_GRID,
    SelectionReport,
    apply_threshold,
    cv_cutoff,
    cv_cutoff_curve,
    summarize,
    threshold_scale,
)
from .simgen import (
    MU0_HEAD,
    MeanDesign,
    RegressionDesign,
    equicorrelation_sqrt,
    gen_mean_data,
    gen_regression_data,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # data
    "Dataset",
    "DataFormatError",
    "center",
    "standardize",
    "read_dataset_csv",
    "write_dataset_csv",
    # empirical likelihood
    "ELConfig",
    "LagrangeSolution",
    "NotInConvexHull",
    "MaxIterExceeded",
    "estimating_functions",
    "estimating_functions_mean",
    "estimating_functions_regression",
    "solve_lambda",
    "log_el",
    "check_dimension",
    # priors
    "PriorSpec",
    "FLAT_TAU_SQ",
    "scad_derivative",
    "scad_penalty",
    "local_linear_weights",
    "log_conditional_prior",
    # samplers
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
    # selection
    "DEFAULT_CUTOFF",
    "DEFAULT_CUTOFF_GRID",
    "SelectionReport",
    "threshold_scale",
    "summarize",
    "apply_threshold",
    "cv_cutoff",
    "cv_cutoff_curve",
    # simulation designs
    "MeanDesign",
    "RegressionDesign",
    "MU0_HEAD",
    "equicorrelation_sqrt",
    "gen_mean_data",
    "gen_regression_data",
    # baselines
    "OLSFit",
    "soft_threshold_mean",
    "hard_threshold_mean",
    "ols",
    # metrics
    "BenchRow",
    "mse",
    "support_counts",
    "f1",
    "autocorrelation",
    "ess",
    # benchmarks
    "CellSpec",
    "MEAN_METHODS",
    "REGRESSION_METHODS",
    "run_cell",
    "format_rows",
    "write_bench_csv",
    "write_bench_json",
    # seeds
    "spawn_seeds",
    "derive_seed",
]
