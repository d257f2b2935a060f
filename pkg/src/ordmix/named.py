"""Closed-form members of the family: transformed exponential and skew-Laplace."""

from __future__ import annotations

import math

import numpy as np

from .baselines import Exponential, Laplace, UnivariateDistribution, _check_prob, _out
from .core import TransformedDistribution, check_lambda, psi_inv_pair
from .errors import DomainError, SupportExhausted


def _check_theta(theta: float) -> float:
    theta = float(theta)
    if not theta > 0:
        raise DomainError(f"theta must be positive, got {theta}")
    return theta


def _check_order(r: int) -> int:
    if int(r) != r or r < 1:
        raise DomainError(f"moment order must be a positive integer, got {r}")
    return int(r)


class TransformedExponential(UnivariateDistribution):
    """``(1 - e^{-theta x}) (1 + lam e^{-theta x})`` on ``x >= 0``.

    Exhibits increasing hazard for ``lam < 0`` and decreasing hazard for
    ``lam > 0``; ``lam = 1`` is Exp(2 theta).
    """

    support = (0.0, math.inf)

    def __init__(self, theta: float = 1.0, lam: float = 0.0):
        self.theta = _check_theta(theta)
        self.lam = check_lambda(lam)
        self.name = f"TExp({self.theta:g},{self.lam:g})"

    def generic(self) -> TransformedDistribution:
        return TransformedDistribution(Exponential(self.theta), self.lam)

    def _e(self, x):
        return np.exp(-self.theta * np.maximum(np.asarray(x, dtype=float), 0.0))

    @staticmethod
    def _nonneg(x):
        x = np.asarray(x, dtype=float)
        if np.any(x < 0.0):
            raise DomainError("density and hazard are defined for x >= 0")
        return x

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        e = self._e(x)
        F = -np.expm1(-self.theta * np.maximum(x, 0.0))
        return _out(F * (1.0 + self.lam * e))

    def sf(self, x):
        x = np.asarray(x, dtype=float)
        e = self._e(x)
        return _out(e * ((1.0 - self.lam) + self.lam * e))

    def pdf(self, x):
        x = self._nonneg(x)
        e = self._e(x)
        return _out(self.theta * e * self._density_factor(x, e))

    def _density_factor(self, x, e):
        # 1 + lam (2e - 1) without cancellation for either sign of lam
        lam = self.lam
        if lam >= 0.0:
            return (1.0 - lam) + 2.0 * lam * e
        return (1.0 + lam) - 2.0 * lam * -np.expm1(-self.theta * x)

    def hazard(self, x):
        x = self._nonneg(x)
        e = self._e(x)
        lam = self.lam
        if np.any(e * ((1.0 - lam) + lam * e) <= 0.0):
            raise SupportExhausted("survival underflowed to zero")
        return _out(self.theta * self._density_factor(x, e) / ((1.0 - lam) + lam * e))

    def quantile(self, q):
        q = np.asarray(q, dtype=float)
        _check_prob(q)
        return self._log_tail(q, 1.0 - q)

    def isf(self, s):
        s = np.asarray(s, dtype=float)
        _check_prob(s)
        return self._log_tail(1.0 - s, s)

    def _log_tail(self, q, s):
        # -(1/theta) ln(baseline survival level), with that level in conjugate form
        p, pc = psi_inv_pair(self.lam, q, s)
        with np.errstate(divide="ignore"):
            x = np.where(p <= 0.5, -np.log1p(-p), -np.log(pc)) / self.theta
        return _out(x)

    def mode(self) -> float:
        if self.lam >= -1.0 / 3.0:
            return 0.0
        return -math.log((self.lam - 1.0) / (4.0 * self.lam)) / self.theta

    def median(self) -> float:
        return self.quantile(0.5)

    def mean(self) -> float:
        return self.raw_moment(1)

    def raw_moment(self, r: int) -> float:
        r = _check_order(r)
        return (1.0 + self.lam * (2.0 ** -r - 1.0)) * math.factorial(r) / self.theta ** r

    def mgf(self, t: float) -> float:
        th, lam = self.theta, self.lam
        if not t < th:
            raise DomainError(f"mgf defined for t < theta = {th}")
        return th * (2.0 * th - (1.0 + lam) * t) / ((th - t) * (2.0 * th - t))

    def residual_mix_parameter(self, t):
        e = self._e(self._nonneg(t))
        return _out(self.lam * e / ((1.0 - self.lam) + self.lam * e))

    def mean_residual_life(self, t):
        e = self._e(self._nonneg(t))
        lam = self.lam
        return _out(((1.0 - lam) + 0.5 * lam * e) / (self.theta * ((1.0 - lam) + lam * e)))


class SkewLaplace(UnivariateDistribution):
    """Skewed Laplace law obtained by transforming the symmetric Laplace(theta).

    Skewness has the opposite sign of ``lam``.
    """

    def __init__(self, theta: float = 1.0, lam: float = 0.0):
        self.theta = _check_theta(theta)
        self.lam = check_lambda(lam)
        self.name = f"SLaplace({self.theta:g},{self.lam:g})"

    def generic(self) -> TransformedDistribution:
        return TransformedDistribution(Laplace(self.theta), self.lam)

    def _h(self, x):
        return 0.5 * np.exp(-np.abs(np.asarray(x, dtype=float)) / self.theta)

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        h, lam = self._h(x), self.lam
        left = h * ((1.0 + lam) - lam * h)
        right = (1.0 - h) * (1.0 + lam * h)
        return _out(np.where(x <= 0.0, left, right))

    def sf(self, x):
        x = np.asarray(x, dtype=float)
        h, lam = self._h(x), self.lam
        left = (1.0 - h) * (1.0 - lam * h)
        right = h * ((1.0 - lam) + lam * h)
        return _out(np.where(x <= 0.0, left, right))

    def pdf(self, x):
        x = np.asarray(x, dtype=float)
        e = np.exp(-np.abs(x) / self.theta)
        lam = self.lam
        left = e * ((1.0 + lam) - lam * e)
        right = e * ((1.0 - lam) + lam * e)
        return _out(np.where(x <= 0.0, left, right) / (2.0 * self.theta))

    def quantile(self, q):
        q = np.asarray(q, dtype=float)
        _check_prob(q)
        return self._invert(q, 1.0 - q)

    def isf(self, s):
        s = np.asarray(s, dtype=float)
        _check_prob(s)
        return self._invert(1.0 - s, s)

    def _invert(self, q, s):
        p, pc = psi_inv_pair(self.lam, q, s)
        with np.errstate(divide="ignore"):
            x = np.where(p <= 0.5, self.theta * np.log(2.0 * p), -self.theta * np.log(2.0 * pc))
        return _out(x)

    def raw_moment(self, r: int) -> float:
        r = _check_order(r)
        if r % 2 == 0:
            return math.factorial(r) * self.theta ** r
        return math.factorial(r) * self.lam * self.theta ** r * (1.0 - 2.0 ** (r + 1)) / 2.0 ** (r + 1)

    def mgf(self, t: float) -> float:
        u = self.theta * t
        if not abs(u) < 1.0:
            raise DomainError(f"mgf defined for |t| < 1/theta = {1.0 / self.theta}")
        return (1.0 - self.lam * u) / (1.0 - u * u) + self.lam * u / (4.0 - u * u)

    def summary(self) -> tuple[float, float, float, float]:
        """(mean, variance, skewness, kurtosis).

        The variance is ``theta^2 (2 - 9 lam^2 / 16)``: the Laplace(theta)
        baseline has variance ``2 theta^2``, and this is the value the skewness
        and kurtosis expressions are normalised by.
        """
        th, lam = self.theta, self.lam
        l2 = lam * lam
        mean = -0.75 * lam * th
        var = th * th * (2.0 - 9.0 * l2 / 16.0)
        skew = 18.0 * lam * (4.0 + 3.0 * l2) / ((9.0 * l2 - 32.0) * math.sqrt(32.0 - 9.0 * l2))
        kurt = (6144.0 - 243.0 * l2 * l2 - 2592.0 * l2) / (32.0 - 9.0 * l2) ** 2
        return mean, var, skew, kurt


# functional aliases -------------------------------------------------------------

def te_cdf(d: TransformedExponential, x):
    return d.cdf(x)


def te_pdf(d: TransformedExponential, x):
    return d.pdf(x)


def te_hazard(d: TransformedExponential, x):
    return d.hazard(x)


def te_quantile(d: TransformedExponential, q):
    return d.quantile(q)


def te_mode(d: TransformedExponential) -> float:
    return d.mode()


def te_raw_moment(d: TransformedExponential, r: int) -> float:
    return d.raw_moment(r)


def te_mgf(d: TransformedExponential, t: float) -> float:
    return d.mgf(t)


def te_mean_residual_life(d: TransformedExponential, t):
    return d.mean_residual_life(t)


def sl_cdf(d: SkewLaplace, x):
    return d.cdf(x)


def sl_pdf(d: SkewLaplace, x):
    return d.pdf(x)


def sl_raw_moment(d: SkewLaplace, r: int) -> float:
    return d.raw_moment(r)


def sl_mgf(d: SkewLaplace, t: float) -> float:
    return d.mgf(t)


def sl_summary(d: SkewLaplace) -> tuple[float, float, float, float]:
    return d.summary()
