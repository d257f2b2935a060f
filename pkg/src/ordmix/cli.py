"""Command-line interface: ``ordmix eval|sample|check|copula-grid|verify``.

Exit codes: 0 success, 1 a check or verification failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import acceptance
from .baselines import Exponential, Laplace, UnivariateDistribution, Uniform, Weibull
from .bivariate import COUPLINGS, BivariateTransformed, TransformedCopula, copula_validity, sample_bivariate
from .config import DEFAULTS, default_seed
from .core import TransformedDistribution, check_lambda
from .errors import OrdmixError
from .named import SkewLaplace, TransformedExponential
from .orders import ORDER_KINDS, AGING_CLASSES, Grid, check_order, classify_aging
from .verify import adaptive_simpson, ks_statistic, truncation_bounds

SYMBOLS = {"ln2": math.log(2.0), "e": math.e, "pi": math.pi}


class UsageError(Exception):
    pass


def fmt(v: float) -> str:
    return format(float(v), ".17g")


def parse_point(tok: str) -> float:
    tok = tok.strip()
    sign = 1.0
    if tok.startswith("-") and tok[1:] in SYMBOLS:
        sign, tok = -1.0, tok[1:]
    if tok in SYMBOLS:
        return sign * SYMBOLS[tok]
    try:
        return float(tok)
    except ValueError:
        raise UsageError(f"cannot parse point {tok!r}; use a number or one of {sorted(SYMBOLS)}")


def parse_points(tokens) -> list[float]:
    return [parse_point(t) for tok in tokens for t in tok.split(",") if t.strip()]


@dataclass(frozen=True)
class DistributionSpec:
    family: str
    theta: float = 1.0
    lam: float = 0.0
    baseline: str = "exp"
    shape: float = 1.0
    scale: float = 1.0
    low: float = 0.0
    high: float = 1.0

    def __post_init__(self):
        if self.family not in ("texp", "slaplace", "transform"):
            raise UsageError(f"unknown family {self.family!r}")
        if self.baseline not in ("exp", "laplace", "weibull", "uniform"):
            raise UsageError(f"unknown baseline {self.baseline!r}")
        # validate everything up front by building once
        self.build()

    def baseline_dist(self) -> UnivariateDistribution:
        if self.baseline == "exp":
            return Exponential(self.theta)
        if self.baseline == "laplace":
            return Laplace(self.theta)
        if self.baseline == "weibull":
            return Weibull(self.shape, self.scale)
        return Uniform(self.low, self.high)

    def build(self) -> UnivariateDistribution:
        check_lambda(self.lam)
        if self.family == "texp":
            return TransformedExponential(self.theta, self.lam)
        if self.family == "slaplace":
            return SkewLaplace(self.theta, self.lam)
        return TransformedDistribution(self.baseline_dist(), self.lam)

    def as_dict(self) -> dict:
        d = {"family": self.family, "theta": self.theta, "lambda": self.lam}
        if self.family == "transform":
            d.update(baseline=self.baseline, shape=self.shape, scale=self.scale, low=self.low, high=self.high)
        return d


def spec_from_args(args) -> DistributionSpec:
    family = "transform" if getattr(args, "transform", False) else args.family
    return DistributionSpec(family, args.theta, args.lam, args.baseline,
                            args.shape, args.scale, args.low, args.high)


def parse_dist_string(text: str) -> UnivariateDistribution:
    """``family:p1,p2[@lam]``; e.g. ``texp:1,0.9``, ``weibull:2,1@-0.5``."""
    body, _, lam_txt = text.partition("@")
    family, _, params = body.partition(":")
    try:
        vals = [float(p) for p in params.split(",") if p.strip()]
    except ValueError:
        raise UsageError(f"bad parameters in {text!r}")
    builders = {
        "texp": (TransformedExponential, 2), "slaplace": (SkewLaplace, 2),
        "exp": (Exponential, 1), "laplace": (Laplace, 1),
        "weibull": (Weibull, 2), "uniform": (Uniform, 2),
    }
    if family not in builders:
        raise UsageError(f"unknown distribution family {family!r} in {text!r}")
    cls, nparams = builders[family]
    if len(vals) != nparams:
        raise UsageError(f"{family} takes {nparams} parameter(s), got {len(vals)}")
    dist = cls(*vals)
    if lam_txt:
        dist = TransformedDistribution(dist, float(lam_txt))
    return dist


def mean_residual_life(dist: UnivariateDistribution, t: float) -> float:
    if isinstance(dist, TransformedExponential):
        return float(dist.mean_residual_life(t))
    s_t = float(dist.sf(t))
    if s_t <= 0.0:
        raise OrdmixError("survival is zero; mean residual life undefined")
    _, hi = truncation_bounds(dist)
    if hi <= t:
        return 0.0
    knots = [t] + ([0.0] if t < 0.0 < hi else []) + [hi]
    area = sum(adaptive_simpson(lambda x: float(dist.sf(x)), a, b, DEFAULTS.quad_tol * s_t)
               for a, b in zip(knots, knots[1:]))
    return area / s_t


def write_csv(out, header, rows) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) if isinstance(v, (float, np.floating)) else v for v in row])


def cmd_eval(args, out, stdin=None) -> int:
    dist = spec_from_args(args).build()
    points = parse_points(args.points)
    funcs = {
        "cdf": dist.cdf, "pdf": dist.pdf, "hazard": dist.hazard, "survival": dist.sf,
        "quantile": dist.quantile, "mrl": lambda t: mean_residual_life(dist, t),
    }
    rows = [(p, float(funcs[args.what](p))) for p in points]
    write_csv(out, ["point", args.what], rows)
    return 0


def cmd_sample(args, out, stdin=None) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    rng = np.random.default_rng(args.seed)
    if args.bivariate:
        spec = spec_from_args(args)
        margin = spec.baseline_dist()
        b = BivariateTransformed(margin, margin, COUPLINGS[args.coupling], args.lam)
        pairs = sample_bivariate(b, args.n, rng)
        write_csv(out, ["x", "y"], ([float(x), float(y)] for x, y in pairs))
        return 0
    dist = spec_from_args(args).build()
    if args.method == "inverse":
        draws = np.asarray(dist.quantile(rng.random(args.n))).reshape(args.n)
    elif isinstance(dist, TransformedDistribution):
        draws = dist.sample(args.n, rng)
    else:
        draws = dist.generic().sample(args.n, rng)
    write_csv(out, ["x"], ([float(v)] for v in draws))
    return 0


def _grid(args, dist) -> Optional[Grid]:
    if args.grid_lo is not None and args.grid_hi is not None:
        return Grid.linear(args.grid_lo, args.grid_hi, args.grid_n)
    return Grid.quantile_spaced(dist, args.grid_n)


def cmd_check(args, out, stdin=None) -> int:
    cfg = {"grid_points": args.grid_n, "tol": args.tol, "defaults": DEFAULTS.as_dict()}
    if args.kind == "aging":
        spec = spec_from_args(args)
        dist = spec.build()
        report = classify_aging(dist, _grid(args, dist), args.tol)
        expect = args.expect or []
        for cls in expect:
            if cls not in AGING_CLASSES:
                raise UsageError(f"unknown aging class {cls!r}")
        ok = all(report[c].holds for c in expect)
        doc = {"kind": "aging", "distribution": spec.as_dict(), "report": report.as_dict(),
               "expect": expect, "pass": ok, "config": cfg}
    else:
        if args.kind != "order" or args.order not in ORDER_KINDS:
            raise UsageError(f"usage: check order {{{','.join(ORDER_KINDS)}}} --left DIST --right DIST")
        if not args.left or not args.right:
            raise UsageError("check order needs --left and --right")
        F1, F2 = parse_dist_string(args.left), parse_dist_string(args.right)
        report = check_order(args.order, F1, F2, _grid(args, F1), args.tol)
        ok = report.holds
        doc = {"kind": "order", "left": args.left, "right": args.right,
               "report": report.as_dict(), "pass": ok, "config": cfg}
    out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return 0 if ok else 1


def cmd_copula_grid(args, out, stdin=None) -> int:
    if args.coupling not in COUPLINGS:
        raise UsageError(f"unknown coupling {args.coupling!r}")
    c = TransformedCopula(COUPLINGS[args.coupling], args.lam)
    if args.validity:
        rep = copula_validity(c, args.resolution, DEFAULTS.copula_tol)
        out.write(json.dumps({"copula": c.name, **rep.as_dict()}, indent=2, sort_keys=True) + "\n")
        return 0 if rep.valid else 1
    g = np.linspace(0.0, 1.0, args.resolution + 1)
    U, V = np.meshgrid(g, g, indexing="ij")
    C = np.asarray(c.value(U, V))
    write_csv(out, ["u", "v", "C"], ([float(u), float(v), float(w)]
                                     for u, v, w in zip(U.ravel(), V.ravel(), C.ravel())))
    return 0


def cmd_verify(args, out, stdin) -> int:
    if args.suite == "ks":
        dist = spec_from_args(args).build()
        text = stdin.read()
        reader = csv.reader(io.StringIO(text))
        header = next(reader, None)
        if header is None:
            raise UsageError("no CSV input on stdin")
        values = np.array([float(r[0]) for r in reader if r])
        res = ks_statistic(values, dist.cdf)
        out.write(json.dumps({"test": "ks", "n": int(values.size), **res.as_dict(),
                              "crit": DEFAULTS.ks_crit}, indent=2, sort_keys=True) + "\n")
        return 0 if res.passed else 1
    rows = acceptance.run_suite(args.suite, getattr(args, "overrides", None))
    ok = acceptance.suite_passed(rows)
    if args.json:
        doc = {"suite": args.suite, "pass": ok, "criteria": [r.as_dict() for r in rows],
               "seeds": {"mixture": acceptance.MIXTURE_SEED, "inverse": acceptance.INVERSE_SEED,
                         "bivariate": acceptance.BIVARIATE_SEED},
               "config": DEFAULTS.as_dict()}
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        for r in rows:
            out.write(r.line() + "\n")
        n_fail = sum(1 for r in rows if r.asserted and not r.passed)
        out.write(f"{args.suite}: {'PASS' if ok else 'FAIL'} ({n_fail} failing checks)\n")
    return 0 if ok else 1


def _add_dist_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=("texp", "slaplace", "transform"), default="transform")
    p.add_argument("--transform", action="store_true", help="shorthand for --family transform")
    p.add_argument("--baseline", choices=("exp", "laplace", "weibull", "uniform"), default="exp")
    p.add_argument("--theta", type=float, default=1.0, help="exp rate / laplace scale")
    p.add_argument("--lambda", dest="lam", type=float, default=0.0)
    p.add_argument("--shape", type=float, default=1.0, help="weibull shape")
    p.add_argument("--scale", type=float, default=1.0, help="weibull scale")
    p.add_argument("--low", type=float, default=0.0, help="uniform lower end")
    p.add_argument("--high", type=float, default=1.0, help="uniform upper end")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ordmix", description=__doc__)
    parser.add_argument("--out", help="write output to FILE instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a distribution function at points")
    _add_dist_args(p)
    p.add_argument("--what", choices=("cdf", "pdf", "hazard", "survival", "quantile", "mrl"), required=True)
    p.add_argument("--points", nargs="+", required=True)

    p = sub.add_parser("sample", help="draw a seeded sample as CSV")
    _add_dist_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--method", choices=("mixture", "inverse"), default="mixture")
    p.add_argument("--bivariate", action="store_true")
    p.add_argument("--coupling", choices=sorted(COUPLINGS), default="independence")

    p = sub.add_parser("check", help="stochastic order or aging checks (JSON)")
    p.add_argument("kind", choices=("order", "aging"))
    p.add_argument("order", nargs="?")
    _add_dist_args(p)
    p.add_argument("--left")
    p.add_argument("--right")
    p.add_argument("--expect", nargs="*", help="aging classes required to hold")
    p.add_argument("--tol", type=float, default=DEFAULTS.tol_closed)
    p.add_argument("--grid-n", type=int, default=DEFAULTS.grid_points)
    p.add_argument("--grid-lo", type=float)
    p.add_argument("--grid-hi", type=float)

    p = sub.add_parser("copula-grid", help="tabulate or certify a transformed copula")
    p.add_argument("--coupling", default="independence")
    p.add_argument("--lambda", dest="lam", type=float, default=0.0)
    p.add_argument("--resolution", type=int, default=10)
    p.add_argument("--validity", action="store_true")

    p = sub.add_parser("verify", help="run the acceptance suite, or KS-test CSV from stdin")
    p.add_argument("suite", choices=("univariate", "bivariate", "all", "ks"))
    p.add_argument("--json", action="store_true")
    _add_dist_args(p)
    return parser


def main(argv=None, stdin=None, stdout=None, overrides=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else 2
    if getattr(args, "seed", "unset") is None:
        args.seed = default_seed()
    args.overrides = overrides
    handlers = {"eval": cmd_eval, "sample": cmd_sample, "check": cmd_check,
                "copula-grid": cmd_copula_grid, "verify": cmd_verify}
    buf = io.StringIO()
    try:
        code = handlers[args.command](args, buf, stdin)
    except (UsageError, OrdmixError, ValueError) as exc:
        print(f"ordmix: error: {exc}", file=sys.stderr)
        return 2
    with contextlib.ExitStack() as stack:
        out = stack.enter_context(open(args.out, "w", newline="")) if args.out else stdout
        out.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
