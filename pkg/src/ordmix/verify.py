"""Independent numerical oracles.

Nothing here knows about the closed forms it is used to check: the KS
statistics consume only cdf evaluations, the quadrature only density
evaluations, and the empirical copula only ranks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .baselines import UnivariateDistribution
from .config import DEFAULTS
from .errors import DomainError, EmptySample, NonConvergence


@dataclass(frozen=True)
class SampleBatch:
    values: np.ndarray
    seed: Optional[int] = None
    n: int = field(init=False)

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "n", int(vals.shape[0]) if vals.ndim else 0)

    @classmethod
    def draw(cls, sampler: Callable[[int, np.random.Generator], np.ndarray],
             n: int, seed: int) -> "SampleBatch":
        """Run ``sampler(n, rng)`` on a fresh stream seeded with ``seed``."""
        return cls(sampler(n, np.random.default_rng(seed)), seed)


@dataclass(frozen=True)
class GofResult:
    statistic: float
    threshold: float
    passed: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "passed", bool(self.statistic <= self.threshold))

    def as_dict(self) -> dict:
        return {"statistic": self.statistic, "threshold": self.threshold, "pass": self.passed}


def _values(samples) -> np.ndarray:
    vals = samples.values if isinstance(samples, SampleBatch) else np.asarray(samples, dtype=float)
    if vals.size == 0:
        raise EmptySample("no samples")
    return vals


def ks_statistic(samples, cdf: Callable, crit: float = DEFAULTS.ks_crit) -> GofResult:
    """One-sample Kolmogorov-Smirnov distance with the fixed-level threshold ``crit/sqrt(n)``."""
    x = np.sort(_values(samples).ravel())
    n = x.size
    F = np.asarray(cdf(x), dtype=float)
    i = np.arange(1, n + 1)
    d = max(float(np.max(i / n - F)), float(np.max(F - (i - 1) / n)))
    return GofResult(d, crit / math.sqrt(n))


def ks_two_sample(a, b, crit: float = DEFAULTS.ks_crit) -> GofResult:
    """Two-sample KS statistic; threshold ``crit * sqrt((n + m) / (n m))``."""
    x = np.sort(_values(a).ravel())
    y = np.sort(_values(b).ravel())
    n, m = x.size, y.size
    pts = np.concatenate([x, y])
    fx = np.searchsorted(x, pts, side="right") / n
    fy = np.searchsorted(y, pts, side="right") / m
    d = float(np.max(np.abs(fx - fy)))
    return GofResult(d, crit * math.sqrt((n + m) / (n * m)))


def adaptive_simpson(f: Callable[[float], float], a: float, b: float,
                     tol: float = DEFAULTS.quad_tol,
                     max_depth: int = DEFAULTS.quad_depth) -> float:
    """Adaptive Simpson integration with absolute tolerance ``tol``.

    Raises NonConvergence if some panel still misses its share of the
    tolerance at ``max_depth`` subdivisions.
    """
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError("adaptive_simpson needs finite bounds")
    if a == b:
        return 0.0
    if a > b:
        return -adaptive_simpson(f, b, a, tol, max_depth)

    fa, fb = float(f(a)), float(f(b))
    m = 0.5 * (a + b)
    fm = float(f(m))
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    total = 0.0
    stack = [(a, b, fa, fm, fb, whole, tol, 0)]
    while stack:
        lo, hi, flo, fmid, fhi, s, eps, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        lm, rm = 0.5 * (lo + mid), 0.5 * (mid + hi)
        flm, frm = float(f(lm)), float(f(rm))
        left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid)
        right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi)
        err = left + right - s
        if abs(err) <= 15.0 * eps:
            total += left + right + err / 15.0
            continue
        if depth >= max_depth:
            raise NonConvergence(f"adaptive Simpson hit depth {max_depth} on [{lo}, {hi}]")
        stack.append((mid, hi, fmid, frm, fhi, right, 0.5 * eps, depth + 1))
        stack.append((lo, mid, flo, flm, fmid, left, 0.5 * eps, depth + 1))
    return total


def quadrature_moment(pdf: Callable, r: int, lower: float, upper: float,
                      split_points: Sequence[float] = (),
                      tol: float = DEFAULTS.quad_tol) -> float:
    """``int x^r pdf(x) dx`` over ``[lower, upper]``, split at kinks."""
    if r < 0:
        raise DomainError("moment order must be non-negative")
    if not (math.isfinite(lower) and math.isfinite(upper)):
        raise DomainError("pass finite truncation bounds, e.g. from truncation_bounds()")
    knots = [lower] + sorted(p for p in split_points if lower < p < upper) + [upper]
    piece_tol = tol / (len(knots) - 1)

    def integrand(x: float) -> float:
        return x ** r * float(pdf(x))

    return sum(adaptive_simpson(integrand, lo, hi, piece_tol) for lo, hi in zip(knots, knots[1:]))


def truncation_bounds(dist: UnivariateDistribution,
                      level: float = DEFAULTS.tail_level) -> tuple[float, float]:
    """Finite integration range: the support ends when finite, else tail quantiles."""
    lo, hi = dist.support
    if not math.isfinite(lo):
        lo = float(dist.quantile(level))
    if not math.isfinite(hi):
        hi = float(dist.isf(level))
    return lo, hi


def moment_by_quadrature(dist: UnivariateDistribution, r: int,
                         split_points: Sequence[float] = (),
                         level: float = DEFAULTS.tail_level,
                         tol: float = DEFAULTS.quad_tol) -> float:
    """Quadrature moment of ``dist`` using only its density and tail quantiles."""
    lo, hi = truncation_bounds(dist, level)
    return quadrature_moment(dist.pdf, r, lo, hi, split_points, tol)


def empirical_copula(pairs, u, v):
    """Rank-based empirical copula ``(1/n) #{R_i/n <= u, S_i/n <= v}``."""
    xy = _values(pairs)
    if xy.ndim != 2 or xy.shape[1] != 2:
        raise DomainError("pairs must have shape (n, 2)")
    n = xy.shape[0]
    rx = np.empty(n)
    ry = np.empty(n)
    rx[np.argsort(xy[:, 0], kind="stable")] = np.arange(1, n + 1) / n
    ry[np.argsort(xy[:, 1], kind="stable")] = np.arange(1, n + 1) / n
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    uu, vv = np.broadcast_arrays(u, v)
    out = np.array([np.mean((rx <= a) & (ry <= b)) for a, b in zip(uu.ravel(), vv.ravel())])
    out = out.reshape(uu.shape)
    return float(out) if out.ndim == 0 else out


def empirical_joint_cdf(pairs, x, y):
    xy = _values(pairs)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    xx, yy = np.broadcast_arrays(x, y)
    out = np.array([np.mean((xy[:, 0] <= a) & (xy[:, 1] <= b)) for a, b in zip(xx.ravel(), yy.ravel())])
    out = out.reshape(xx.shape)
    return float(out) if out.ndim == 0 else out


def binomial_band(p, n: int, k: float = 3.0):
    """Half-width ``k * sqrt(p (1 - p) / n)`` of a pointwise binomial band."""
    p = np.asarray(p, dtype=float)
    return k * np.sqrt(p * (1.0 - p) / n)
