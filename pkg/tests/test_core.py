import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate, optimize

from ordmix import (DomainError, Exponential, Laplace, MixtureIndicator, SupportExhausted,
                    TransformedDistribution, Uniform, Weibull, make_rng, median,
                    proportional_odds_cdf, psi, psi_inv, residual_life_survival,
                    residual_mix_parameter, sample, sample_inverse, split_rng,
                    transform_cdf, transform_hazard, transform_pdf, transform_quantile,
                    transform_survival)
from ordmix.verify import ks_statistic, ks_two_sample

from conftest import BASELINES, LN2

lams = st.floats(-1.0, 1.0)
E1 = Exponential(1.0)


def G(lam, base=E1):
    return TransformedDistribution(base, lam)


# point examples ------------------------------------------------------------------

def test_cdf_examples():
    assert transform_cdf(G(0.0), LN2) == pytest.approx(0.5, abs=1e-15)
    assert transform_cdf(G(0.5), LN2) == pytest.approx(0.625, abs=1e-15)
    x = np.linspace(0, 5, 41)
    np.testing.assert_allclose(transform_cdf(G(1.0), x), -np.expm1(-2 * x), rtol=1e-14, atol=1e-16)


def test_survival_examples():
    assert transform_survival(G(0.5), LN2) == pytest.approx(0.375, abs=1e-15)
    for lam in (-1, 0.3, 1):
        assert transform_survival(G(lam), -math.inf) == 1.0
        assert transform_survival(G(lam), 0.0) == 1.0
    x = np.linspace(0, 5, 41)
    np.testing.assert_allclose(transform_survival(G(-1.0), x), 1 - (1 - np.exp(-x)) ** 2,
                               rtol=1e-13, atol=1e-16)


def test_pdf_examples():
    assert transform_pdf(G(0.7), LN2) == pytest.approx(0.5, abs=1e-15)
    x = np.linspace(0, 5, 41)
    np.testing.assert_allclose(transform_pdf(G(0.0), x), np.exp(-x), rtol=1e-15)
    assert transform_pdf(G(1.0), 0.0) == pytest.approx(2.0)


def test_hazard_examples():
    x = np.linspace(0, 20, 41)
    np.testing.assert_allclose(transform_hazard(G(1.0), x), 2.0, rtol=1e-14)
    np.testing.assert_allclose(transform_hazard(G(0.0), x), 1.0, rtol=1e-14)
    assert transform_hazard(G(0.5), LN2) == pytest.approx(4 / 3, rel=1e-15)


def test_quantile_examples():
    # independent oracle: root of the cdf with a bracketing solver
    oracle = optimize.brentq(lambda x: transform_cdf(G(0.5), x) - 0.5, 0.0, 5.0, xtol=1e-15)
    assert oracle == pytest.approx(0.481212, abs=5e-7)
    assert transform_quantile(G(0.5), 0.5) == pytest.approx(oracle, abs=1e-13)
    assert psi_inv(0.5, 0.5) == pytest.approx(0.381966, abs=5e-7)
    assert transform_quantile(G(1.0), 0.75) == pytest.approx(LN2, rel=1e-15)
    q = np.linspace(0.01, 0.99, 50)
    for base in BASELINES:
        np.testing.assert_array_equal(transform_quantile(G(0.0, base), q), base.quantile(q))


def test_median_examples():
    assert median(G(0.0)) == pytest.approx(LN2, rel=1e-15)
    assert median(G(0.5)) == pytest.approx(0.481212, abs=5e-7)
    assert median(G(1.0)) == pytest.approx(LN2 / 2, rel=1e-15)


def test_residual_examples():
    assert residual_mix_parameter(G(0.5), LN2) == pytest.approx(1 / 3, rel=1e-15)
    for t in (0.0, 1.0, 7.5):
        assert residual_mix_parameter(G(0.0), t) == 0.0
    for lam in (-0.9, 0.4, 0.99):
        assert abs(residual_mix_parameter(G(lam), 40.0)) < 1e-10
    # at lam = 1 the law is Exp(2): memoryless, so the residual law is itself
    assert residual_mix_parameter(G(1.0), 30.0) == 1.0
    assert residual_life_survival(G(0.5), LN2, LN2) == pytest.approx(5 / 12, rel=1e-15)
    for lam in (-1, 0.2, 1):
        assert residual_life_survival(G(lam), 1.3, 0.0) == 1.0
    x = np.linspace(0, 4, 9)
    np.testing.assert_allclose(residual_life_survival(G(0.0), 2.0, x), np.exp(-x), rtol=1e-14)


def test_proportional_odds_examples():
    x = np.linspace(0, 6, 31)
    np.testing.assert_allclose(proportional_odds_cdf(E1, 1.0, x), E1.cdf(x), rtol=1e-15)
    assert proportional_odds_cdf(E1, 0.5, LN2) == pytest.approx(2 / 3, rel=1e-15)
    with pytest.raises(DomainError):
        proportional_odds_cdf(E1, 0.0, 1.0)


def test_proportional_odds_quadratic_decay():
    # Marshall-Olkin law with alpha = 1 - lam agrees with G_lam to first order in lam
    z = np.linspace(1e-6, 1 - 1e-6, 200001)
    x = E1.quantile(z)

    def gap(lam):
        return np.max(np.abs(proportional_odds_cdf(E1, 1 - lam, x) - G(lam).cdf(x)))

    g = [gap(l) for l in (0.1, 0.05, 0.025)]
    for a, b in zip(g, g[1:]):
        assert 3.0 <= a / b <= 5.0


# invariants -----------------------------------------------------------------------

@pytest.mark.parametrize("base", BASELINES, ids=str)
@given(lam=lams, z=st.floats(0.0, 1.0))
def test_sandwich_and_mixture_identity(base, lam, z):
    x = base.quantile(z)
    F = base.cdf(x)
    g = G(lam, base).cdf(x)
    assert F * F - 1e-15 <= g <= 2 * F - F * F + 1e-15
    mix = (1 + lam) / 2 * (2 * F - F * F) + (1 - lam) / 2 * F * F
    assert g == pytest.approx(mix, abs=1e-15)
    assert g + G(lam, base).sf(x) == pytest.approx(1.0, abs=1e-15)


@given(l1=lams, l2=lams, x=st.floats(-10, 10))
def test_monotone_in_lambda(l1, l2, x):
    lo, hi = sorted((l1, l2))
    for base in (E1, Laplace(1.0)):
        assert G(lo, base).cdf(x) <= G(hi, base).cdf(x) + 1e-16


@pytest.mark.parametrize("base", [E1, Weibull(2.0, 1.0), Weibull(0.5, 1.0)], ids=str)
@given(lam=lams, x=st.floats(0.01, 5.0))
def test_hazard_bounds(base, lam, x):
    h = base.hazard(x)
    hg = G(lam, base).hazard(x)
    lo, hi = sorted((h, (1 + lam) * h))
    assert lo * (1 - 1e-13) <= hg <= hi * (1 + 1e-13)


@pytest.mark.parametrize("lam", [-0.7, 0.0, 0.4, 1.0])
def test_hazard_limits(lam):
    base = Weibull(2.0, 1.0)
    x0 = 1e-7
    assert G(lam, base).hazard(x0) == pytest.approx((1 + lam) * base.hazard(x0), rel=1e-10)
    far = 5.0
    # upper-end ratio tends to 1 except at lam = 1, where it is identically 2
    limit = 2.0 if lam == 1.0 else 1.0
    assert G(lam, base).hazard(far) / base.hazard(far) == pytest.approx(limit, abs=1e-9)


@pytest.mark.parametrize("lam", [-1.0, -1e-8, 0.0, 1e-8, 0.3, 1.0])
@pytest.mark.parametrize("base", [E1, Laplace(1.0), Weibull(0.5, 1.0)], ids=str)
def test_quantile_round_trip(base, lam):
    d = G(lam, base)
    q = np.concatenate([np.logspace(-6, -0.31, 11), 1 - np.logspace(-6, -0.31, 10)])
    assert np.max(np.abs(d.cdf(d.quantile(q)) - q)) <= 1e-9
    assert np.max(np.abs(d.sf(d.isf(q)) - q)) <= 1e-9
    grid = np.linspace(0.001, 0.999, 999)
    assert np.max(np.abs(d.cdf(d.quantile(grid)) - grid)) <= 1e-9


@given(lam=lams, q=st.floats(0.0, 1.0))
def test_psi_inverse_pair(lam, q):
    p = psi_inv(lam, q)
    assert psi(lam, p) == pytest.approx(q, abs=1e-15)


def test_psi_examples():
    t = np.linspace(0, 1, 11)
    np.testing.assert_array_equal(psi(0.0, t), t)
    assert psi(1.0, 0.5) == 0.75
    assert psi_inv(-1.0, 0.25) == pytest.approx(0.5, abs=1e-15)
    assert psi_inv(1.0, 0.75) == pytest.approx(0.5, abs=1e-15)


@pytest.mark.parametrize("lam", [-1.0, -0.4, 0.0, 0.6, 1.0])
@pytest.mark.parametrize("base", [E1, Laplace(1.0), Weibull(2.0, 1.0)], ids=str)
def test_pdf_is_cdf_derivative_and_integrates(base, lam):
    d = G(lam, base)
    x = d.quantile(np.linspace(0.02, 0.98, 25))
    x = x[np.abs(x) > 1e-3]  # keep off the Laplace kink
    h = 1e-5
    fd = (d.cdf(x + h) - d.cdf(x - h)) / (2 * h)
    np.testing.assert_allclose(fd, d.pdf(x), rtol=1e-6)
    lo, hi = d.quantile(1e-15), d.isf(1e-15)
    pts = [0.0] if lo < 0.0 < hi else None
    total, _ = integrate.quad(d.pdf, lo, hi, points=pts, limit=200, epsabs=1e-12)
    assert total == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("lam", [-0.9, 0.4, 1.0])
@given(t=st.floats(0.0, 20.0), x=st.floats(0.0, 20.0))
def test_residual_closure(lam, t, x):
    d = G(lam)
    lhs = d.residual_life_survival(t, x)
    rhs = d.residual_distribution(t).sf(x)
    assert lhs == pytest.approx(rhs, abs=1e-12)


def test_residual_closure_other_baseline():
    d = G(-0.6, Weibull(2.0, 1.0))
    r = d.residual_distribution(0.8)
    x = np.linspace(0, 2, 21)
    np.testing.assert_allclose(d.residual_life_survival(0.8, x), r.sf(x), atol=1e-12)


# samplers -------------------------------------------------------------------------

def test_mixture_sampler_ks():
    d = G(0.5)
    n = 100_000
    res = ks_statistic(sample(d, n, make_rng(42)), d.cdf)
    assert res.threshold == pytest.approx(0.0043, abs=1e-5)
    assert res.passed


def test_samplers_agree():
    d = G(0.5)
    n = 100_000
    a = sample(d, n, make_rng(42))
    b = sample_inverse(d, n, make_rng(43))
    assert ks_two_sample(a, b).passed


def test_inverse_sampler_mean_at_lambda_one():
    n = 100_000
    x = sample_inverse(G(1.0), n, make_rng(43))
    assert abs(x.mean() - 0.5) <= 3 * 0.5 / math.sqrt(n)


def test_inverse_sampler_lambda_zero_is_baseline():
    u = make_rng(5).random(50)
    x = sample_inverse(G(0.0), 50, make_rng(5))
    np.testing.assert_allclose(x, E1.quantile(u), rtol=1e-15)


@pytest.mark.parametrize("lam,pick", [(1.0, np.minimum), (-1.0, np.maximum)])
def test_sampler_endpoints_select_min_or_max(lam, pick):
    n = 1000
    rng = make_rng(11)
    x1 = E1.quantile(rng.random(n))
    x2 = E1.quantile(rng.random(n))
    np.testing.assert_array_equal(sample(G(lam), n, make_rng(11)), pick(x1, x2))


def test_sampler_determinism_and_split():
    a = sample(G(0.3), 100, make_rng(9))
    b = sample(G(0.3), 100, make_rng(9))
    np.testing.assert_array_equal(a, b)
    kids = split_rng(make_rng(9), 3)
    draws = [k.random(5) for k in kids]
    assert not np.allclose(draws[0], draws[1])
    again = [k.random(5) for k in split_rng(make_rng(9), 3)]
    np.testing.assert_array_equal(draws, again)


def test_mixture_indicator():
    ind = MixtureIndicator.from_lambda(0.5)
    assert ind.p_min == 0.75 and ind.p_max == 0.25
    frac = ind.draw(100_000, make_rng(1)).mean()
    assert abs(frac - 0.75) < 3 * math.sqrt(0.75 * 0.25 / 100_000)


# errors ---------------------------------------------------------------------------

@pytest.mark.parametrize("lam", [-1.0001, 1.5, math.nan])
def test_lambda_domain(lam):
    with pytest.raises(DomainError):
        G(lam)
    with pytest.raises(DomainError):
        psi(lam, 0.5)


def test_probability_domain():
    with pytest.raises(DomainError):
        transform_quantile(G(0.2), 1.2)
    with pytest.raises(DomainError):
        psi(0.2, -0.1)


def test_support_exhausted():
    d = G(0.3, Uniform(0.0, 1.0))
    with pytest.raises(SupportExhausted):
        d.hazard(1.0)
    with pytest.raises(SupportExhausted):
        d.residual_mix_parameter(2.0)
    with pytest.raises(SupportExhausted):
        d.residual_life_survival(1.5, 0.1)


def test_negative_sample_size():
    with pytest.raises(DomainError):
        sample(G(0.1), -1, make_rng(0))
