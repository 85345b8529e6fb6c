"""Randomized quasi-Monte Carlo mean estimation with anytime-valid
confidence intervals: scrambled digital nets, replicated estimates,
betting-style and classical interval methods, and replicate-size
allocation under a power-law variance model."""

from ._core import (
    AllocationResult,
    CapitalTrace,
    Interval,
    ReplicateSample,
    bennett_ci,
    bennett_half_width,
    clt_ci,
    eval_ridge,
    guidance_bound,
    hbci,
    hedged_capital,
    hoeffding_ci,
    integrand_true_mean,
    known_integrands,
    maurer_pontil_ci,
    mix_seed,
    model_half_width,
    optimal_n_continuous,
    optimal_n_discrete,
    optimal_n_unconstrained,
    phi,
    phi_inv,
    prpl_eb_ci,
    replicate_estimates,
    ridge_true_mean,
    scrambled_points,
    sobol_points,
    t_quantile,
    var_indicator_third,
    var_smooth_exact,
    width_ratio,
)

__all__ = [
    "AllocationResult",
    "CapitalTrace",
    "Interval",
    "ReplicateSample",
    "bennett_ci",
    "bennett_half_width",
    "clt_ci",
    "eval_ridge",
    "guidance_bound",
    "hbci",
    "hedged_capital",
    "hoeffding_ci",
    "integrand_true_mean",
    "known_integrands",
    "maurer_pontil_ci",
    "mix_seed",
    "model_half_width",
    "optimal_n_continuous",
    "optimal_n_discrete",
    "optimal_n_unconstrained",
    "phi",
    "phi_inv",
    "prpl_eb_ci",
    "replicate_estimates",
    "ridge_true_mean",
    "scrambled_points",
    "sobol_points",
    "t_quantile",
    "var_indicator_third",
    "var_smooth_exact",
    "width_ratio",
]

__version__ = "0.1.0"
