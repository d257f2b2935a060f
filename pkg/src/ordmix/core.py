"""The min/max mixture transform of a baseline distribution.

Given a baseline ``F`` and ``lam`` in [-1, 1], ``G(x) = F(x) * (1 + lam * Fbar(x))``
is the law of ``min(X1, X2)`` with probability ``(1 + lam)/2`` and of
``max(X1, X2)`` otherwise, for ``X1, X2`` iid from ``F``.

All evaluation routines use forms that keep the small factors
``(1 + lam) - lam*F`` and ``(1 - lam) + lam*Fbar`` free of cancellation, so the
endpoints ``lam = +-1`` stay accurate in both tails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .baselines import UnivariateDistribution, _check_prob, _out
from .errors import DomainError, SupportExhausted


def check_lambda(lam: float) -> float:
    lam = float(lam)
    if not -1.0 <= lam <= 1.0:
        raise DomainError(f"mixing parameter must lie in [-1, 1], got {lam}")
    return lam


def _radicand(lam: float, q: np.ndarray, s: np.ndarray) -> np.ndarray:
    # (1+lam)^2 - 4 lam q == (1-lam)^2 + 4 lam s; pick the sum of non-negative terms
    if lam < 0.0:
        r = (1.0 + lam) ** 2 - 4.0 * lam * q
    else:
        r = (1.0 - lam) ** 2 + 4.0 * lam * s
    return np.maximum(r, 0.0)


def psi(lam: float, t):
    """Unit-interval distortion ``t + lam * t * (1 - t)``."""
    lam = check_lambda(lam)
    t = np.asarray(t, dtype=float)
    _check_prob(t)
    return _out(np.clip(t * ((1.0 + lam) - lam * t), 0.0, 1.0))


def psi_inv_pair(lam: float, q, s=None):
    """Invert ``psi`` returning ``(p, 1 - p)``, both without cancellation.

    ``s`` is the upper-tail level ``1 - q``; pass it when it is known more
    accurately than ``1 - q`` can be computed.
    """
    lam = check_lambda(lam)
    q = np.asarray(q, dtype=float)
    s = 1.0 - q if s is None else np.asarray(s, dtype=float)
    _check_prob(q)
    root = np.sqrt(_radicand(lam, q, s))
    with np.errstate(divide="ignore", invalid="ignore"):
        p = np.where(q > 0.0, 2.0 * q / ((1.0 + lam) + root), 0.0)
        pc = np.where(s > 0.0, 2.0 * s / ((1.0 - lam) + root), 0.0)
    return np.clip(p, 0.0, 1.0), np.clip(pc, 0.0, 1.0)


def psi_inv(lam: float, s):
    """Inverse of :func:`psi` in the conjugate form ``2s / (1 + lam + sqrt(...))``."""
    p, _ = psi_inv_pair(lam, s)
    return _out(p)


@dataclass(frozen=True)
class MixtureIndicator:
    """Bernoulli switch choosing the sample minimum with probability ``p_min``."""

    p_min: float

    def __post_init__(self):
        if not 0.0 <= self.p_min <= 1.0:
            raise DomainError("p_min must be a probability")

    @classmethod
    def from_lambda(cls, lam: float) -> "MixtureIndicator":
        return cls((1.0 + check_lambda(lam)) / 2.0)

    @property
    def p_max(self) -> float:
        return 1.0 - self.p_min

    def draw(self, n: int, rng: np.random.Generator) -> np.ndarray:
        """Boolean array, True where the minimum is selected."""
        return rng.random(n) < self.p_min


class TransformedDistribution(UnivariateDistribution):
    """``G_lam[F]`` for an arbitrary continuous baseline ``F``."""

    def __init__(self, base: UnivariateDistribution, lam: float):
        self.base = base
        self.lam = check_lambda(lam)
        self.support = base.support
        self.name = f"G[{base.name}; lam={self.lam:g}]"

    # evaluation -------------------------------------------------------------

    def cdf(self, x):
        F = np.asarray(self.base.cdf(x), dtype=float)
        return _out(np.clip(F * ((1.0 + self.lam) - self.lam * F), 0.0, 1.0))

    def sf(self, x):
        S = np.asarray(self.base.sf(x), dtype=float)
        return _out(np.clip(S * ((1.0 - self.lam) + self.lam * S), 0.0, 1.0))

    def pdf(self, x):
        f = np.asarray(self.base.pdf(x), dtype=float)
        F = np.asarray(self.base.cdf(x), dtype=float)
        S = np.asarray(self.base.sf(x), dtype=float)
        lam = self.lam
        # 1 + lam (S - F) as a sum of non-negative terms
        factor = (1.0 - lam) + 2.0 * lam * S if lam >= 0.0 else (1.0 + lam) - 2.0 * lam * F
        return _out(f * factor)

    def hazard(self, x):
        self._require_survival(x)
        S = np.asarray(self.base.sf(x), dtype=float)
        h = np.asarray(self.base.hazard(x), dtype=float)
        return _out(h * (1.0 + self.lam * S / ((1.0 - self.lam) + self.lam * S)))

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
        lower = np.asarray(self.base.quantile(np.minimum(p, 0.5)), dtype=float)
        upper = np.asarray(self.base.isf(np.minimum(pc, 0.5)), dtype=float)
        return _out(np.where(p <= 0.5, lower, upper))

    def median(self) -> float:
        return self.quantile(0.5)

    # residual life ---------------------------------------------------------

    def _require_survival(self, t):
        if np.any(np.asarray(self.sf(t)) <= 0.0):
            raise SupportExhausted("survival probability is zero; beyond the support")

    def residual_mix_parameter(self, t):
        """Mixing parameter of the residual-life law at age ``t``."""
        self._require_survival(t)
        S = np.asarray(self.base.sf(t), dtype=float)
        return _out(self.lam * S / ((1.0 - self.lam) + self.lam * S))

    def residual_life_survival(self, t, x):
        """``P(X > t + x | X > t)`` as a ratio of survival values."""
        self._require_survival(t)
        t = np.asarray(t, dtype=float)
        x = np.asarray(x, dtype=float)
        return _out(np.asarray(self.sf(t + x)) / np.asarray(self.sf(t)))

    def residual_distribution(self, t: float) -> "TransformedDistribution":
        """Residual life at age ``t`` as a transform of the baseline's residual law."""
        beta = self.residual_mix_parameter(t)
        return TransformedDistribution(ResidualLife(self.base, t), float(np.clip(beta, -1.0, 1.0)))

    # sampling --------------------------------------------------------------

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        """Draw via the order-statistics mixture: min or max of two baseline draws."""
        if n < 0:
            raise DomainError("sample size must be non-negative")
        x1 = np.asarray(self.base.quantile(rng.random(n)), dtype=float)
        x2 = np.asarray(self.base.quantile(rng.random(n)), dtype=float)
        take_min = MixtureIndicator.from_lambda(self.lam).draw(n, rng)
        return np.where(take_min, np.minimum(x1, x2), np.maximum(x1, x2))

    def sample_inverse(self, n: int, rng: np.random.Generator) -> np.ndarray:
        if n < 0:
            raise DomainError("sample size must be non-negative")
        return np.asarray(self.quantile(rng.random(n)), dtype=float).reshape(n)


class ResidualLife(UnivariateDistribution):
    """Law of ``X - t`` given ``X > t``."""

    def __init__(self, base: UnivariateDistribution, t: float):
        self.base = base
        self.t = float(t)
        self._s0 = float(base.sf(self.t))
        if self._s0 <= 0.0:
            raise SupportExhausted("no survival mass beyond t")
        self.support = (0.0, base.support[1] - self.t)
        self.name = f"residual[{base.name}; t={self.t:g}]"

    def sf(self, x):
        x = np.maximum(np.asarray(x, dtype=float), 0.0)
        return _out(np.asarray(self.base.sf(x + self.t)) / self._s0)

    def cdf(self, x):
        x = np.maximum(np.asarray(x, dtype=float), 0.0)
        lost = np.asarray(self.base.sf(self.t)) - np.asarray(self.base.sf(x + self.t))
        return _out(lost / self._s0)

    def pdf(self, x):
        x = np.asarray(x, dtype=float)
        dens = np.asarray(self.base.pdf(np.maximum(x, 0.0) + self.t)) / self._s0
        return _out(np.where(x >= 0.0, dens, 0.0))


# functional aliases -------------------------------------------------------------


def transform_cdf(d: TransformedDistribution, x):
    return d.cdf(x)


def transform_survival(d: TransformedDistribution, x):
    return d.sf(x)


def transform_pdf(d: TransformedDistribution, x):
    return d.pdf(x)


def transform_hazard(d: TransformedDistribution, x):
    return d.hazard(x)


def transform_quantile(d: TransformedDistribution, q):
    return d.quantile(q)


def median(d: TransformedDistribution) -> float:
    return d.median()


def residual_mix_parameter(d: TransformedDistribution, t):
    return d.residual_mix_parameter(t)


def residual_life_survival(d: TransformedDistribution, t, x):
    return d.residual_life_survival(t, x)


def sample(d: TransformedDistribution, n: int, rng: np.random.Generator) -> np.ndarray:
    return d.sample(n, rng)


def sample_inverse(d: TransformedDistribution, n: int, rng: np.random.Generator) -> np.ndarray:
    return d.sample_inverse(n, rng)


def proportional_odds_cdf(base: UnivariateDistribution, alpha: float, x):
    """Marshall-Olkin cdf ``F / (1 - (1 - alpha) * Fbar)``."""
    if not alpha > 0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    F = np.asarray(base.cdf(x), dtype=float)
    S = np.asarray(base.sf(x), dtype=float)
    # denominator rewritten as F + alpha * Fbar, which is positive and cancellation free
    return _out(F / (F + alpha * S))


def make_rng(seed: int | None) -> np.random.Generator:
    return np.random.default_rng(seed)


def split_rng(rng: np.random.Generator, k: int) -> list[np.random.Generator]:
    """Independent child streams for parallel sampling."""
    return list(rng.spawn(k))


