"""Bivariate extension: joint cdf, induced copula and the pairwise order-statistic sampler.

For iid pairs ``(X1, Y1)``, ``(X2, Y2)`` from a joint cdf ``F`` with copula
``D``, emitting the componentwise minima with probability ``(1 + lam)/2`` and
the componentwise maxima otherwise gives a joint law whose margins are the
univariate transforms of the margins of ``F``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .baselines import UnivariateDistribution, _out
from .config import DEFAULTS
from .core import MixtureIndicator, TransformedDistribution, check_lambda, psi, psi_inv, psi_inv_pair
from .errors import DomainError, UnsupportedCoupling, WrongCoupling

__all__ = [
    "Copula", "TransformedCopula", "BivariateTransformed", "CopulaValidity",
    "INDEPENDENCE", "UPPER_FRECHET", "LOWER_FRECHET", "psi", "psi_inv",
    "bivariate_cdf", "transformed_copula_value", "copula_validity",
    "sample_bivariate", "independence_case_cdf", "joint_cdf_from_uniforms",
]


class Copula:
    """A bivariate copula given by a vectorised function of ``(u, v)``."""

    def __init__(self, name: str, fn: Callable[[np.ndarray, np.ndarray], np.ndarray]):
        self.name = name
        self._fn = fn

    def value(self, u, v):
        u = np.asarray(u, dtype=float)
        v = np.asarray(v, dtype=float)
        return _out(self._fn(u, v))

    def survival(self, u, v):
        """``1 - u - v + C(u, v)``, the joint survival at the same arguments."""
        u = np.asarray(u, dtype=float)
        v = np.asarray(v, dtype=float)
        return _out(1.0 - u - v + np.asarray(self.value(u, v)))

    def __call__(self, u, v):
        return self.value(u, v)

    def __repr__(self) -> str:
        return f"Copula({self.name})"


INDEPENDENCE = Copula("independence", lambda u, v: u * v)
UPPER_FRECHET = Copula("M", lambda u, v: np.minimum(u, v))
LOWER_FRECHET = Copula("W", lambda u, v: np.maximum(u + v - 1.0, 0.0))

COUPLINGS = {"independence": INDEPENDENCE, "M": UPPER_FRECHET, "W": LOWER_FRECHET}


def joint_cdf_from_uniforms(D: Copula, lam: float, a, b):
    """Transformed joint cdf written in terms of the baseline margins ``a = F1(x)``, ``b = F2(y)``."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    c = np.asarray(D.value(a, b), dtype=float)
    c_bar = 1.0 - a - b + c
    return (1.0 + lam) * (a * b + c * c_bar) - lam * c * c


class TransformedCopula(Copula):
    """Copula of the transformed joint law built on a baseline copula ``D``.

    Evaluation at ``(u, v)`` first maps each argument back through ``psi_inv``.
    """

    def __init__(self, base: Copula, lam: float):
        self.base = base
        self.lam = check_lambda(lam)
        super().__init__(f"C[{base.name}; lam={self.lam:g}]", self._evaluate)

    def _evaluate(self, u, v):
        u, v = np.broadcast_arrays(np.asarray(u, dtype=float), np.asarray(v, dtype=float))
        if np.any((u < 0) | (u > 1) | (v < 0) | (v > 1)):
            raise DomainError("copula arguments must lie in [0, 1]")
        a, _ = psi_inv_pair(self.lam, u)
        b, _ = psi_inv_pair(self.lam, v)
        val = np.clip(joint_cdf_from_uniforms(self.base, self.lam, a, b), 0.0, 1.0)
        # exact boundary values
        val = np.where((u == 0.0) | (v == 0.0), 0.0, val)
        val = np.where(u == 1.0, v, val)
        val = np.where(v == 1.0, u, val)
        return val


@dataclass(frozen=True)
class BivariateTransformed:
    margin1: UnivariateDistribution
    margin2: UnivariateDistribution
    coupling: Copula
    lam: float

    def __post_init__(self):
        object.__setattr__(self, "lam", check_lambda(self.lam))

    @property
    def G1(self) -> TransformedDistribution:
        return TransformedDistribution(self.margin1, self.lam)

    @property
    def G2(self) -> TransformedDistribution:
        return TransformedDistribution(self.margin2, self.lam)

    def copula(self) -> TransformedCopula:
        return TransformedCopula(self.coupling, self.lam)

    def cdf(self, x, y):
        a = np.asarray(self.margin1.cdf(x), dtype=float)
        b = np.asarray(self.margin2.cdf(y), dtype=float)
        return _out(np.clip(joint_cdf_from_uniforms(self.coupling, self.lam, a, b), 0.0, 1.0))


def bivariate_cdf(b: BivariateTransformed, x, y):
    return b.cdf(x, y)


def transformed_copula_value(c: TransformedCopula, u, v):
    return c.value(u, v)


def independence_case_cdf(b: BivariateTransformed, x, y):
    """Closed form for the independence coupling: ``ab{ab + (1+lam)(2 - a - b)}``."""
    if b.coupling is not INDEPENDENCE:
        raise WrongCoupling(f"independence closed form requested for coupling {b.coupling.name}")
    F1 = np.asarray(b.margin1.cdf(x), dtype=float)
    F2 = np.asarray(b.margin2.cdf(y), dtype=float)
    S1 = np.asarray(b.margin1.sf(x), dtype=float)
    S2 = np.asarray(b.margin2.sf(y), dtype=float)
    ab = F1 * F2
    return _out(ab * (ab + (1.0 + b.lam) * (S1 + S2)))


@dataclass(frozen=True)
class CopulaValidity:
    valid: bool
    grounded_error: float
    margin_error: float
    worst_volume: float
    worst_location: tuple
    resolution: int
    tol: float

    def as_dict(self) -> dict:
        return {
            "valid": self.valid,
            "grounded_error": self.grounded_error,
            "margin_error": self.margin_error,
            "worst_volume": self.worst_volume,
            "worst_location": list(self.worst_location),
            "resolution": self.resolution,
            "tol": self.tol,
        }


def copula_validity(c: Copula, resolution: int = DEFAULTS.copula_resolution,
                    tol: float = DEFAULTS.copula_tol) -> CopulaValidity:
    """Groundedness, uniform margins and 2-increasingness on a ``(n+1) x (n+1)`` grid."""
    if resolution < 3:
        raise DomainError("resolution must be at least 3")
    g = np.linspace(0.0, 1.0, resolution + 1)
    U, V = np.meshgrid(g, g, indexing="ij")
    C = np.asarray(c.value(U, V), dtype=float)
    grounded = float(max(np.abs(C[0, :]).max(), np.abs(C[:, 0]).max()))
    margins = float(max(np.abs(C[-1, :] - g).max(), np.abs(C[:, -1] - g).max()))
    vol = C[1:, 1:] - C[:-1, 1:] - C[1:, :-1] + C[:-1, :-1]
    i, j = np.unravel_index(int(np.argmin(vol)), vol.shape)
    worst = float(vol[i, j])
    location = (float(g[i]), float(g[j]))
    if grounded > tol:
        k = np.argmax(np.concatenate([np.abs(C[0, :]), np.abs(C[:, 0])]))
        location = (0.0, float(g[k])) if k <= resolution else (float(g[k - resolution - 1]), 0.0)
    elif margins > tol:
        k = np.argmax(np.concatenate([np.abs(C[-1, :] - g), np.abs(C[:, -1] - g)]))
        location = (1.0, float(g[k])) if k <= resolution else (float(g[k - resolution - 1]), 1.0)
    valid = grounded <= tol and margins <= tol and worst >= -tol
    return CopulaValidity(valid, grounded, margins, worst, location, resolution, tol)


PairSampler = Callable[[int, np.random.Generator], tuple]


def _baseline_pairs(b: BivariateTransformed, n: int, rng: np.random.Generator,
                    pair_sampler: Optional[PairSampler]):
    if pair_sampler is not None:
        x, y = pair_sampler(n, rng)
        return np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    name = b.coupling.name
    if b.coupling is INDEPENDENCE:
        u1, u2 = rng.random(n), rng.random(n)
    elif b.coupling is UPPER_FRECHET:
        u1 = rng.random(n)
        u2 = u1
    elif b.coupling is LOWER_FRECHET:
        u1 = rng.random(n)
        u2 = 1.0 - u1
    else:
        raise UnsupportedCoupling(f"no sampler for coupling {name}; pass pair_sampler")
    return (np.asarray(b.margin1.quantile(u1), dtype=float),
            np.asarray(b.margin2.quantile(u2), dtype=float))


def sample_bivariate(b: BivariateTransformed, n: int, rng: np.random.Generator,
                     pair_sampler: Optional[PairSampler] = None) -> np.ndarray:
    """``n`` draws as an ``(n, 2)`` array.

    Two baseline pairs are drawn per row; a single Bernoulli switch picks the
    componentwise minima or the componentwise maxima.
    """
    if n < 0:
        raise DomainError("sample size must be non-negative")
    x1, y1 = _baseline_pairs(b, n, rng, pair_sampler)
    x2, y2 = _baseline_pairs(b, n, rng, pair_sampler)
    take_min = MixtureIndicator.from_lambda(b.lam).draw(n, rng)
    vx = np.where(take_min, np.minimum(x1, x2), np.maximum(x1, x2))
    vy = np.where(take_min, np.minimum(y1, y2), np.maximum(y1, y2))
    return np.column_stack([vx, vy])
