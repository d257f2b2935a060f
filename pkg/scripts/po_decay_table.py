#!/usr/bin/env python3
"""Distance between the transform and the proportional-odds law with alpha = 1 - lam.

The gap should shrink quadratically, i.e. by about 4 per halving of lam.
"""

import argparse

from ordmix.acceptance import po_sup_gap


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--start", type=float, default=0.4)
    ap.add_argument("--halvings", type=int, default=8)
    args = ap.parse_args()

    lam, prev = args.start, None
    print(f"{'lam':>10} {'sup|H-G|':>14} {'ratio':>8}")
    for _ in range(args.halvings + 1):
        gap = po_sup_gap(lam)
        ratio = f"{prev / gap:8.4f}" if prev else f"{'':>8}"
        print(f"{lam:10.6f} {gap:14.6e} {ratio}")
        prev, lam = gap, lam / 2


if __name__ == "__main__":
    main()
