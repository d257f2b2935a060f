import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate, stats

from ordmix import DomainError, Exponential, FunctionDistribution, Laplace, Uniform, Weibull

from conftest import BASELINES

SCIPY_TWINS = [
    (Exponential(2.5), stats.expon(scale=1 / 2.5)),
    (Laplace(0.3), stats.laplace(scale=0.3)),
    (Weibull(0.5, 1.7), stats.weibull_min(0.5, scale=1.7)),
    (Uniform(-1.0, 3.0), stats.uniform(-1.0, 4.0)),
]


@pytest.mark.parametrize("ours,ref", SCIPY_TWINS, ids=lambda d: getattr(d, "name", ""))
def test_matches_scipy(ours, ref):
    x = np.linspace(-2, 6, 101)
    np.testing.assert_allclose(ours.cdf(x), ref.cdf(x), rtol=1e-12, atol=1e-15)
    np.testing.assert_allclose(ours.sf(x), ref.sf(x), rtol=1e-12, atol=1e-15)
    inside = (x > ours.support[0]) & (x < ours.support[1])
    np.testing.assert_allclose(ours.pdf(x[inside]), ref.pdf(x[inside]), rtol=1e-12)
    q = np.linspace(0.001, 0.999, 57)
    np.testing.assert_allclose(ours.quantile(q), ref.ppf(q), rtol=1e-12, atol=1e-14)
    np.testing.assert_allclose(ours.isf(q), ref.isf(q), rtol=1e-12, atol=1e-14)


@pytest.mark.parametrize("d", BASELINES, ids=str)
def test_support_limits(d):
    assert d.cdf(-math.inf) == 0.0
    assert d.cdf(math.inf) == 1.0
    assert d.sf(-math.inf) == 1.0
    assert d.sf(math.inf) == 0.0


@pytest.mark.parametrize("d", BASELINES, ids=str)
def test_pdf_integrates_to_one(d):
    lo, hi = d.support
    lo = lo if math.isfinite(lo) else d.quantile(1e-15)
    hi = hi if math.isfinite(hi) else d.isf(1e-15)
    pts = [0.0] if lo < 0.0 < hi else None
    total, _ = integrate.quad(d.pdf, lo, hi, points=pts, limit=200)
    assert total == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("d", BASELINES, ids=str)
@given(q=st.floats(1e-9, 1 - 1e-9))
def test_quantile_round_trip(d, q):
    assert d.cdf(d.quantile(q)) == pytest.approx(q, abs=1e-12)
    assert d.sf(d.isf(q)) == pytest.approx(q, abs=1e-12)


@pytest.mark.parametrize("d", BASELINES, ids=str)
@given(a=st.floats(-50, 50), b=st.floats(-50, 50))
def test_cdf_nondecreasing(d, a, b):
    lo, hi = min(a, b), max(a, b)
    assert d.cdf(lo) <= d.cdf(hi)
    assert d.cdf(lo) + d.sf(lo) == pytest.approx(1.0, abs=1e-15)


def test_bisection_fallback_matches_closed_form():
    logistic = FunctionDistribution(lambda x: 1 / (1 + np.exp(-x)), name="logistic")
    q = np.array([1e-6, 0.1, 0.5, 0.9, 1 - 1e-6])
    np.testing.assert_allclose(logistic.quantile(q), np.log(q / (1 - q)), atol=1e-9)
    assert logistic.quantile(0.0) == -math.inf
    assert isinstance(logistic.quantile(0.3), float)
    with pytest.raises(NotImplementedError):
        logistic.pdf(0.0)


@pytest.mark.parametrize("bad", [-0.1, 1.1, math.nan])
def test_quantile_domain(bad):
    with pytest.raises(DomainError):
        Exponential(1.0).quantile(bad)


@pytest.mark.parametrize("ctor", [lambda: Exponential(0), lambda: Laplace(-1),
                                  lambda: Weibull(0, 1), lambda: Uniform(1, 1)])
def test_parameter_validation(ctor):
    with pytest.raises(DomainError):
        ctor()
