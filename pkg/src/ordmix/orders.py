"""Grid-based falsification checkers for stochastic orders and aging classes.

A "holds" verdict means no counterexample was found on the grid at the given
tolerance. None of this proves an order relation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .baselines import UnivariateDistribution
from .config import DEFAULTS
from .core import TransformedDistribution
from .errors import DomainError, UnsupportedOrder

ORDER_KINDS = ("st", "hr", "lr", "convex", "star", "superadditive", "dispersive")
PRESERVED_ORDERS = ("st", "convex", "star", "superadditive", "dispersive")
AGING_CLASSES = ("IHR", "DHR", "IHRA", "DHRA", "NBU", "NWU")


@dataclass(frozen=True)
class Grid:
    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 1 or pts.size < 3:
            raise DomainError("a grid needs at least 3 points")
        if not np.all(np.isfinite(pts)) or np.any(np.diff(pts) <= 0.0):
            raise DomainError("grid points must be finite and strictly increasing")
        object.__setattr__(self, "points", pts)

    @property
    def resolution(self) -> int:
        return int(self.points.size)

    @classmethod
    def quantile_spaced(cls, dist: UnivariateDistribution, n: int = DEFAULTS.grid_points) -> "Grid":
        """Quantiles of ``dist`` at levels ``(i - 0.5)/n``."""
        levels = (np.arange(1, n + 1) - 0.5) / n
        pts = np.unique(np.asarray(dist.quantile(levels), dtype=float))
        return cls(pts[np.isfinite(pts)])

    @classmethod
    def linear(cls, lo: float, hi: float, n: int) -> "Grid":
        return cls(np.linspace(lo, hi, n))


@dataclass(frozen=True)
class OrderReport:
    order_kind: str
    holds: bool
    margin: float
    witness: Optional[tuple] = None
    grid_size: int = 0
    tol: float = DEFAULTS.tol_closed

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("holds must be True exactly when no witness is present")

    def as_dict(self) -> dict:
        return {
            "order": self.order_kind,
            "holds": self.holds,
            "margin": self.margin,
            "witness": None if self.witness is None else [float(w) for w in self.witness],
            "grid_size": self.grid_size,
            "tol": self.tol,
        }


@dataclass(frozen=True)
class Verdict:
    holds: bool
    margin: float
    witness: Optional[tuple] = None

    def __str__(self) -> str:
        return "holds" if self.holds else "fails-with-witness"


@dataclass(frozen=True)
class AgingReport:
    flags: dict

    def __post_init__(self):
        f = self.flags
        missing = set(AGING_CLASSES) - set(f)
        if missing:
            raise ValueError(f"missing aging classes: {sorted(missing)}")
        for chain in (("IHR", "IHRA", "NBU"), ("DHR", "DHRA", "NWU")):
            for stronger, weaker in zip(chain, chain[1:]):
                if f[stronger].holds and not f[weaker].holds:
                    raise ValueError(f"inconsistent report: {stronger} holds but {weaker} fails")

    def __getitem__(self, key: str) -> Verdict:
        return self.flags[key]

    def as_dict(self) -> dict:
        return {
            k: {
                "verdict": str(v),
                "margin": v.margin,
                "witness": None if v.witness is None else [float(w) for w in v.witness],
            }
            for k, v in self.flags.items()
        }


def _worst(slack: np.ndarray, where: Sequence[np.ndarray], tol: float):
    """Return (holds, margin, witness) from an array of signed slacks."""
    slack = np.asarray(slack, dtype=float)
    if slack.size == 0:
        return True, math.inf, None
    bad = np.isnan(slack)
    filled = np.where(bad, -np.inf, slack)
    i = int(np.argmin(filled))
    margin = float(filled[i])
    holds = margin >= -tol
    witness = None if holds else tuple(float(np.asarray(w)[i]) for w in where)
    return holds, margin, witness


def _increments(values: np.ndarray) -> np.ndarray:
    v = np.asarray(values, dtype=float)
    return np.diff(v) / np.maximum(1.0, np.abs(v[:-1]))


def quantile_composition(F1: UnivariateDistribution, F2: UnivariateDistribution, x):
    """``F2^{-1}(F1(x))``, switching to the upper-tail route above the median."""
    x = np.asarray(x, dtype=float)
    p = np.asarray(F1.cdf(x), dtype=float)
    s = np.asarray(F1.sf(x), dtype=float)
    lower = np.asarray(F2.quantile(np.minimum(p, 0.5)), dtype=float)
    upper = np.asarray(F2.isf(np.minimum(s, 0.5)), dtype=float)
    return np.where(p <= 0.5, lower, upper)


def _subsample(pts: np.ndarray, cap: int) -> np.ndarray:
    if pts.size <= cap:
        return pts
    idx = np.unique(np.linspace(0, pts.size - 1, cap).round().astype(int))
    return pts[idx]


def check_order(kind: str, F1: UnivariateDistribution, F2: UnivariateDistribution,
                grid: Optional[Grid] = None, tol: float = DEFAULTS.tol_closed) -> OrderReport:
    """Test ``F1 <_kind F2`` at the points of ``grid`` (default: quantiles of F1)."""
    if kind not in ORDER_KINDS:
        raise UnsupportedOrder(f"unknown order {kind!r}; expected one of {ORDER_KINDS}")
    grid = grid or Grid.quantile_spaced(F1)
    x = grid.points
    try:
        if kind == "st":
            slack = np.asarray(F1.cdf(x)) - np.asarray(F2.cdf(x))
            where = (x,)
        elif kind == "hr":
            with np.errstate(divide="ignore", invalid="ignore"):
                h1 = np.asarray(F1.pdf(x)) / np.asarray(F1.sf(x))
                h2 = np.asarray(F2.pdf(x)) / np.asarray(F2.sf(x))
            keep = np.isfinite(h1) & np.isfinite(h2)
            slack = (h1 - h2)[keep] / np.maximum(1.0, np.abs(h2[keep]))
            where = (x[keep],)
        elif kind == "lr":
            f1 = np.asarray(F1.pdf(x), dtype=float)
            f2 = np.asarray(F2.pdf(x), dtype=float)
            keep = f1 > 0.0
            ratio, xs = f2[keep] / f1[keep], x[keep]
            slack, where = _increments(ratio), (xs[:-1], xs[1:])
        elif kind == "convex":
            phi = quantile_composition(F1, F2, x)
            slopes = np.diff(phi) / np.diff(x)
            slack = _increments(slopes)
            where = (x[:-2], x[1:-1], x[2:])
        elif kind == "star":
            xs = x[x >= DEFAULTS.star_min_x]
            if xs.size < 2:
                raise DomainError("star order needs grid points bounded away from zero")
            phi = quantile_composition(F1, F2, xs)
            slack, where = _increments(phi / xs), (xs[:-1], xs[1:])
        elif kind == "dispersive":
            phi = quantile_composition(F1, F2, x)
            slack, where = _increments(phi - x), (x[:-1], x[1:])
        else:  # superadditive
            xs = _subsample(x, DEFAULTS.pair_cap)
            if np.any(xs < 0.0):
                xs = xs[xs >= 0.0]
            a, b = np.meshgrid(xs, xs, indexing="ij")
            inside = a + b <= x[-1]
            a, b = a[inside], b[inside]
            phi_a = quantile_composition(F1, F2, a)
            phi_b = quantile_composition(F1, F2, b)
            phi_ab = quantile_composition(F1, F2, a + b)
            scale = np.maximum(1.0, np.abs(phi_ab))
            slack, where = (phi_ab - phi_a - phi_b) / scale, (a, b)
    except NotImplementedError as exc:
        raise UnsupportedOrder(f"{kind} order needs an unavailable function: {exc}") from exc
    holds, margin, witness = _worst(slack, where, tol)
    return OrderReport(kind, holds, margin, witness, grid.resolution, tol)


def _aging_grid(F: UnivariateDistribution, grid: Optional[Grid]) -> np.ndarray:
    if F.support[0] < 0.0:
        raise DomainError("aging classes need a distribution supported on [0, inf)")
    grid = grid or Grid.quantile_spaced(F)
    t = grid.points
    if np.any(t < 0.0):
        raise DomainError("aging grid must be non-negative")
    return t[t > 0.0]


def classify_aging(F: UnivariateDistribution, grid: Optional[Grid] = None,
                   tol: float = DEFAULTS.tol_closed) -> AgingReport:
    """IHR/DHR, IHRA/DHRA and NBU/NWU verdicts for a lifetime distribution."""
    t = _aging_grid(F, grid)
    s = np.asarray(F.sf(t), dtype=float)
    keep = s > 0.0
    t, s = t[keep], s[keep]
    if t.size < 3:
        raise DomainError("need at least 3 grid points with positive survival")

    try:
        h = np.asarray(F.hazard(t), dtype=float)
    except NotImplementedError as exc:
        raise UnsupportedOrder(f"hazard unavailable: {exc}") from exc
    dh = _increments(h)
    pairs = (t[:-1], t[1:])
    flags = {}
    flags["IHR"] = Verdict(*_worst(dh, pairs, tol))
    flags["DHR"] = Verdict(*_worst(-dh, pairs, tol))

    avg = -np.log(s) / t
    da = _increments(avg)
    flags["IHRA"] = Verdict(*_worst(da, pairs, tol))
    flags["DHRA"] = Verdict(*_worst(-da, pairs, tol))

    ts = _subsample(t, DEFAULTS.pair_cap)
    a, b = np.meshgrid(ts, ts, indexing="ij")
    a, b = a.ravel(), b.ravel()
    joint = np.asarray(F.sf(a + b), dtype=float)
    prod = np.asarray(F.sf(a), dtype=float) * np.asarray(F.sf(b), dtype=float)
    ok = prod > 0.0
    rel = np.full_like(prod, np.nan)
    rel[ok] = joint[ok] / prod[ok] - 1.0
    rel, a, b = rel[ok], a[ok], b[ok]
    flags["NBU"] = Verdict(*_worst(-rel, (a, b), tol))
    flags["NWU"] = Verdict(*_worst(rel, (a, b), tol))
    return AgingReport(flags)


@dataclass(frozen=True)
class PreservationClaim:
    order: str
    lam: float
    premise: OrderReport
    conclusion: OrderReport
    status: str = field(init=False)

    def __post_init__(self):
        if not self.premise.holds:
            status = "premise-fails"
        elif self.conclusion.holds:
            status = "preserved"
        else:
            status = "violated"
        object.__setattr__(self, "status", status)


def preservation_suite(F1: UnivariateDistribution, F2: UnivariateDistribution,
                       lambdas: Sequence[float], grid: Optional[Grid] = None,
                       orders: Sequence[str] = PRESERVED_ORDERS,
                       tol: float = DEFAULTS.tol_closed) -> list[PreservationClaim]:
    """Check that ``F1 < F2`` carries over to the transformed pair for every ``lam``.

    The premise is evaluated on ``grid`` (default: quantiles of F1) and the
    conclusion on the same points, so a claim is directly comparable with its
    premise.
    """
    grid = grid or Grid.quantile_spaced(F1)
    claims = []
    for order, lam in itertools.product(orders, lambdas):
        premise = check_order(order, F1, F2, grid, tol)
        G1 = TransformedDistribution(F1, lam)
        G2 = TransformedDistribution(F2, lam)
        conclusion = check_order(order, G1, G2, grid, tol)
        claims.append(PreservationClaim(order, float(lam), premise, conclusion))
    return claims


def composition_gap(F1: UnivariateDistribution, F2: UnivariateDistribution, lam: float, x):
    """``|G2^{-1}(G1(x)) - F2^{-1}(F1(x))|`` with ``Gi`` the transforms of ``Fi``.

    The quantile composition is invariant under the transform, which is what
    carries the convex, star, superadditive and dispersive orders over.
    """
    G1 = TransformedDistribution(F1, lam)
    G2 = TransformedDistribution(F2, lam)
    return np.abs(quantile_composition(G1, G2, x) - quantile_composition(F1, F2, x))
