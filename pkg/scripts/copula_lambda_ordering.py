#!/usr/bin/env python3
"""Is the induced copula ordered in lambda?

Prints C_lam(u, u) for several base copulas next to the joint cdf at fixed
baseline margins (a, a). The second column family is monotone in lambda; the
copula itself is not, because the transformed margins move with lambda too.
"""

import argparse

import numpy as np

from ordmix import INDEPENDENCE, LOWER_FRECHET, UPPER_FRECHET, TransformedCopula
from ordmix.bivariate import joint_cdf_from_uniforms

BASES = {"Pi": INDEPENDENCE, "M": UPPER_FRECHET, "W": LOWER_FRECHET}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=float, nargs="+", default=[0.25, 0.5, 0.62, 0.75])
    ap.add_argument("--lambdas", type=float, nargs="+", default=[-1.0, -0.5, 0.0, 0.5, 1.0])
    args = ap.parse_args()
    lams = args.lambdas

    head = "base  u     " + "  ".join(f"C({l:+.1f})" for l in lams) + "   monotone"
    for title, fn in (("copula C_lam(u, u)", lambda D, l, u: TransformedCopula(D, l)(u, u)),
                      ("joint cdf at baseline margins (u, u)", lambda D, l, u: joint_cdf_from_uniforms(D, l, u, u))):
        print(f"\n{title}\n{head}")
        for name, D in BASES.items():
            for u in args.points:
                vals = np.array([float(fn(D, l, u)) for l in lams])
                mono = bool(np.all(np.diff(vals) >= -1e-12))
                print(f"{name:<5} {u:<5.2f} " + "  ".join(f"{v:8.5f}" for v in vals) + f"   {mono}")


if __name__ == "__main__":
    main()
