"""Continuous baseline distributions.

Every method is vectorised over numpy arrays and returns a python float for
scalar input. Evaluation is allowed on the extended real line, so ``cdf(-inf)``
and ``sf(inf)`` are well defined for every family.
"""

from __future__ import annotations

import math
from typing import Union

import numpy as np

from .config import DEFAULTS
from .errors import DomainError

ArrayLike = Union[float, np.ndarray]


def _out(a: np.ndarray) -> ArrayLike:
    a = np.asarray(a, dtype=float)
    return float(a) if a.ndim == 0 else a


def _check_prob(q: np.ndarray) -> None:
    if np.any(np.isnan(q)) or np.any(q < 0.0) or np.any(q > 1.0):
        raise DomainError("probability levels must lie in [0, 1]")


class UnivariateDistribution:
    """A continuous distribution on the (extended) real line.

    Subclasses implement at least ``cdf`` and ``pdf``. ``sf``, ``quantile``,
    ``isf`` and ``hazard`` have generic fallbacks; the quantile fallback is a
    bracketed bisection on the cdf. Subclasses should override ``sf`` and
    ``isf`` when an accurate upper-tail form exists.
    """

    name: str = "distribution"
    support: tuple[float, float] = (-math.inf, math.inf)

    def cdf(self, x):
        raise NotImplementedError

    def pdf(self, x):
        raise NotImplementedError

    def sf(self, x):
        return _out(1.0 - np.asarray(self.cdf(x), dtype=float))

    def hazard(self, x):
        f = np.asarray(self.pdf(x), dtype=float)
        s = np.asarray(self.sf(x), dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            return _out(np.where(s > 0.0, f / s, np.nan))

    def quantile(self, q):
        q = np.asarray(q, dtype=float)
        _check_prob(q)
        return _out(bisect_quantile(self, q))

    def isf(self, s):
        s = np.asarray(s, dtype=float)
        _check_prob(s)
        return self.quantile(1.0 - s)

    def __repr__(self) -> str:
        return self.name


def bisect_quantile(dist: UnivariateDistribution, q: np.ndarray,
                    tol: float = DEFAULTS.bisect_tol,
                    max_iter: int = DEFAULTS.bisect_iter) -> np.ndarray:
    """Invert ``dist.cdf`` by bisection, stopping once ``|F(x) - q| <= tol``."""
    q = np.asarray(q, dtype=float)
    shape = q.shape
    q = np.atleast_1d(q).ravel()
    lo_b, hi_b = dist.support
    out = np.empty_like(q)
    out[q <= 0.0] = lo_b
    out[q >= 1.0] = hi_b
    inner = (q > 0.0) & (q < 1.0)
    if np.any(inner):
        qi = q[inner]
        lo = np.full_like(qi, lo_b if math.isfinite(lo_b) else -1.0)
        hi = np.full_like(qi, hi_b if math.isfinite(hi_b) else 1.0)
        # expand infinite brackets until they straddle the target level
        for _ in range(2000):
            bad = np.asarray(dist.cdf(lo)) > qi
            if not np.any(bad):
                break
            lo = np.where(bad, 2.0 * lo - 1.0, lo)
        for _ in range(2000):
            bad = np.asarray(dist.cdf(hi)) < qi
            if not np.any(bad):
                break
            hi = np.where(bad, 2.0 * hi + 1.0, hi)
        mid = 0.5 * (lo + hi)
        for _ in range(max_iter):
            mid = 0.5 * (lo + hi)
            fm = np.asarray(dist.cdf(mid), dtype=float)
            if np.all(np.abs(fm - qi) <= tol):
                break
            below = fm < qi
            lo = np.where(below, mid, lo)
            hi = np.where(below, hi, mid)
        out[inner] = mid
    return out.reshape(shape)


class Exponential(UnivariateDistribution):
    """Exponential distribution with rate ``theta``."""

    support = (0.0, math.inf)

    def __init__(self, theta: float = 1.0):
        if not theta > 0:
            raise DomainError(f"exponential rate must be positive, got {theta}")
        self.theta = float(theta)
        self.name = f"Exp({self.theta:g})"

    def cdf(self, x):
        x = np.maximum(np.asarray(x, dtype=float), 0.0)
        return _out(-np.expm1(-self.theta * x))

    def sf(self, x):
        x = np.maximum(np.asarray(x, dtype=float), 0.0)
        return _out(np.exp(-self.theta * x))

    def pdf(self, x):
        x = np.asarray(x, dtype=float)
        xc = np.maximum(x, 0.0)
        return _out(np.where(x >= 0.0, self.theta * np.exp(-self.theta * xc), 0.0))

    def hazard(self, x):
        x = np.asarray(x, dtype=float)
        return _out(np.where(x >= 0.0, self.theta, 0.0) + 0.0 * x)

    def quantile(self, q):
        q = np.asarray(q, dtype=float)
        _check_prob(q)
        with np.errstate(divide="ignore"):
            return _out(-np.log1p(-q) / self.theta)

    def isf(self, s):
        s = np.asarray(s, dtype=float)
        _check_prob(s)
        with np.errstate(divide="ignore"):
            return _out(-np.log(s) / self.theta)


class Laplace(UnivariateDistribution):
    """Symmetric Laplace distribution centred at zero with scale ``theta``."""

    def __init__(self, theta: float = 1.0):
        if not theta > 0:
            raise DomainError(f"laplace scale must be positive, got {theta}")
        self.theta = float(theta)
        self.name = f"Laplace({self.theta:g})"

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        half_tail = 0.5 * np.exp(-np.abs(x) / self.theta)
        return _out(np.where(x <= 0.0, half_tail, 1.0 - half_tail))

    def sf(self, x):
        x = np.asarray(x, dtype=float)
        half_tail = 0.5 * np.exp(-np.abs(x) / self.theta)
        return _out(np.where(x >= 0.0, half_tail, 1.0 - half_tail))

    def pdf(self, x):
        x = np.asarray(x, dtype=float)
        return _out(np.exp(-np.abs(x) / self.theta) / (2.0 * self.theta))

    def quantile(self, q):
        q = np.asarray(q, dtype=float)
        _check_prob(q)
        with np.errstate(divide="ignore"):
            lower = self.theta * np.log(2.0 * q)
            upper = -self.theta * np.log(2.0 * (1.0 - q))
        return _out(np.where(q <= 0.5, lower, upper))

    def isf(self, s):
        s = np.asarray(s, dtype=float)
        _check_prob(s)
        return _out(-np.asarray(self.quantile(s)))


class Weibull(UnivariateDistribution):
    """Weibull distribution with ``shape`` k and ``scale``."""

    support = (0.0, math.inf)

    def __init__(self, shape: float = 1.0, scale: float = 1.0):
        if not shape > 0 or not scale > 0:
            raise DomainError("weibull shape and scale must be positive")
        self.shape = float(shape)
        self.scale = float(scale)
        self.name = f"Weibull({self.shape:g},{self.scale:g})"

    def _z(self, x):
        return (np.maximum(np.asarray(x, dtype=float), 0.0) / self.scale) ** self.shape

    def cdf(self, x):
        return _out(-np.expm1(-self._z(x)))

    def sf(self, x):
        return _out(np.exp(-self._z(x)))

    def pdf(self, x):
        x = np.asarray(x, dtype=float)
        xc = np.maximum(x, 0.0) / self.scale
        k = self.shape
        with np.errstate(divide="ignore", invalid="ignore"):
            dens = k / self.scale * xc ** (k - 1.0) * np.exp(-(xc ** k))
        return _out(np.where(x >= 0.0, dens, 0.0))

    def hazard(self, x):
        x = np.asarray(x, dtype=float)
        xc = np.maximum(x, 0.0) / self.scale
        with np.errstate(divide="ignore"):
            h = self.shape / self.scale * xc ** (self.shape - 1.0)
        return _out(np.where(x >= 0.0, h, 0.0))

    def quantile(self, q):
        q = np.asarray(q, dtype=float)
        _check_prob(q)
        with np.errstate(divide="ignore"):
            return _out(self.scale * (-np.log1p(-q)) ** (1.0 / self.shape))

    def isf(self, s):
        s = np.asarray(s, dtype=float)
        _check_prob(s)
        with np.errstate(divide="ignore"):
            return _out(self.scale * (-np.log(s)) ** (1.0 / self.shape))


class Uniform(UnivariateDistribution):
    def __init__(self, low: float = 0.0, high: float = 1.0):
        if not high > low:
            raise DomainError("uniform requires low < high")
        self.low = float(low)
        self.high = float(high)
        self.support = (self.low, self.high)
        self.name = f"Uniform({self.low:g},{self.high:g})"

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        return _out(np.clip((x - self.low) / (self.high - self.low), 0.0, 1.0))

    def sf(self, x):
        x = np.asarray(x, dtype=float)
        return _out(np.clip((self.high - x) / (self.high - self.low), 0.0, 1.0))

    def pdf(self, x):
        x = np.asarray(x, dtype=float)
        inside = (x >= self.low) & (x <= self.high)
        return _out(np.where(inside, 1.0 / (self.high - self.low), 0.0))

    def quantile(self, q):
        q = np.asarray(q, dtype=float)
        _check_prob(q)
        return _out(self.low + q * (self.high - self.low))

    def isf(self, s):
        s = np.asarray(s, dtype=float)
        _check_prob(s)
        return _out(self.high - s * (self.high - self.low))


class FunctionDistribution(UnivariateDistribution):
    """Wrap user callables; the quantile falls back to bisection on ``cdf``.

    ``pdf`` may be omitted, in which case density-based operations raise
    ``NotImplementedError``.
    """

    def __init__(self, cdf, pdf=None, support=(-math.inf, math.inf), name="custom"):
        self._cdf = cdf
        self._pdf = pdf
        self.support = (float(support[0]), float(support[1]))
        self.name = name

    def cdf(self, x):
        return _out(self._cdf(np.asarray(x, dtype=float)))

    def pdf(self, x):
        if self._pdf is None:
            raise NotImplementedError(f"{self.name} has no density")
        return _out(self._pdf(np.asarray(x, dtype=float)))
