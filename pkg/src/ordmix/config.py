"""Numerical defaults shared by the checkers, oracles and the CLI.

Everything tunable lives here so that reports can echo the exact settings
they were produced with.
"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass

SEED_ENV = "ORDMIX_SEED"


@dataclass(frozen=True)
class Defaults:
    seed: int = 42
    # grid checkers
    grid_points: int = 512
    tol_closed: float = 1e-9
    tol_numeric: float = 1e-6
    star_min_x: float = 1e-6
    pair_cap: int = 128
    # copulas
    copula_resolution: int = 100
    copula_tol: float = 1e-12
    mc_grid: int = 5
    # oracles
    ks_crit: float = 1.36
    tail_level: float = 1e-18
    quad_tol: float = 1e-10
    quad_depth: int = 50
    # baseline quantile fallback
    bisect_tol: float = 1e-12
    bisect_iter: int = 200

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


DEFAULTS = Defaults()


def default_seed() -> int:
    """Seed from ``ORDMIX_SEED`` if set, else the built-in default."""
    raw = os.environ.get(SEED_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULTS.seed
    return int(raw)
