"""End-to-end smoke tests for the Python bindings."""

import math

import pytest

import rqmcbet as rq


def test_point_generation():
    pts = rq.sobol_points(8, 3)
    assert len(pts) == 8 and all(len(row) == 3 for row in pts)
    assert pts[0] == [0.0, 0.0, 0.0]  # natural order starts at the origin
    assert all(0.0 <= x < 1.0 for row in pts for x in row)
    assert pts[1] == [0.5, 0.5, 0.5]

    a = rq.scrambled_points(16, 2, seed=42, replicate=0)
    b = rq.scrambled_points(16, 2, seed=42, replicate=0)
    c = rq.scrambled_points(16, 2, seed=42, replicate=1)
    assert a == b
    assert a != c
    assert all(0.0 <= x < 1.0 for row in a for x in row)


def test_replicates_and_intervals():
    sample = rq.replicate_estimates("jump", d=2, n=64, R=32, seed=7)
    assert sample.R() == 32 and sample.n == 64 and sample.d == 2
    truth = rq.integrand_true_mean("jump")
    assert abs(sample.mean() - truth) < 0.05

    iv = rq.hbci(sample.y, alpha=0.05)
    assert iv.method == "hbci"
    assert 0.0 <= iv.lo <= iv.hi <= 1.0
    assert iv.contains(truth)
    assert iv.width() < 0.35

    # The betting interval is narrower than the distribution-free bound here.
    hoeff = rq.hoeffding_ci(sample.y, alpha=0.05)
    assert iv.width() < hoeff.width()


def test_hoeffding_closed_form():
    y = [0.3] * 64
    iv = rq.hoeffding_ci(y, alpha=0.05)
    half = math.sqrt(math.log(2 / 0.05) / (2 * 64))
    assert iv.hi - iv.lo == pytest.approx(2 * half, rel=1e-12)


def test_betting_frozen_values():
    iv = rq.prpl_eb_ci([0.5])
    assert iv.half_width_preclip == pytest.approx(7.3777589082278725, abs=1e-12)
    assert (iv.lo, iv.hi) == (0.0, 1.0)

    trace = rq.hedged_capital([1.0], m=0.5)
    assert trace.max_log_hedged == pytest.approx(math.log(0.75), abs=1e-12)


def test_allocation():
    n_star = rq.optimal_n_unconstrained(1024, sigma0_sq=2 / 9, theta=2)
    assert n_star == pytest.approx(6.523317212927993, rel=1e-12)

    res = rq.optimal_n_discrete(1024, sigma0_sq=2 / 9, theta=2)
    assert res.n == 8
    assert res.effective_budget == pytest.approx(277.59107141818038, rel=1e-12)
    assert res.half_width == pytest.approx(
        rq.model_half_width(8, 1024, 2 / 9, 2), rel=1e-12
    )

    # Ratio identity against the model half width.
    ratio = rq.width_ratio(1024, sigma0_sq=2 / 9, theta=2)
    quotient = rq.model_half_width(n_star, 1024, 2 / 9, 2) / rq.model_half_width(
        1, 1024, 2 / 9, 2
    )
    assert ratio == pytest.approx(quotient, rel=1e-12)

    assert rq.guidance_bound(1024, theta=2) == pytest.approx(6.7845233, rel=1e-6)


def test_variance_oracles():
    assert rq.var_indicator_third(2) == pytest.approx(1 / 18, rel=1e-15)
    assert rq.var_smooth_exact(1) == pytest.approx(0.25 - 1.25 * math.exp(-2), rel=1e-14)
    with pytest.raises(ValueError):
        rq.var_indicator_third(3)  # replicate size divisible by 3


def test_ridge_and_special():
    assert rq.ridge_true_mean("jump") == pytest.approx(1 - rq.phi(1.0), rel=1e-14)
    assert rq.eval_ridge("smooth", [0.5, 0.5]) == pytest.approx(
        rq.phi(1.0), rel=1e-12
    )
    assert rq.phi(0.0) == 0.5
    assert rq.phi(rq.phi_inv(0.975)) == pytest.approx(0.975, abs=1e-11)
    assert rq.t_quantile(0.5, 10) == pytest.approx(0.0, abs=1e-10)
    assert rq.t_quantile(0.975, 5) > rq.phi_inv(0.975)


def test_seed_mixing():
    assert rq.mix_seed(1, 2) == rq.mix_seed(1, 2)
    assert rq.mix_seed(1, 2) != rq.mix_seed(1, 3)
    assert rq.mix_seed(1, 2) != rq.mix_seed(2, 2)


def test_known_integrands():
    names = rq.known_integrands()
    assert set(names) >= {
        "jump",
        "kink",
        "smooth",
        "finance",
        "indicator_third",
        "smooth_1d",
    }
