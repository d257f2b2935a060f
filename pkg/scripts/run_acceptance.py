#!/usr/bin/env python3
"""Run the acceptance suite and save the rows as JSON.

    python scripts/run_acceptance.py --suite all --json results/acceptance.json
"""

import argparse
import json
import sys
import time
from pathlib import Path

from ordmix import acceptance
from ordmix.config import DEFAULTS


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--suite", choices=sorted(acceptance.SUITES), default="all")
    ap.add_argument("--json", type=Path, help="also write rows to this file")
    args = ap.parse_args()

    t0 = time.perf_counter()
    rows = acceptance.run_suite(args.suite)
    elapsed = time.perf_counter() - t0
    for r in rows:
        print(r.line())
    ok = acceptance.suite_passed(rows)
    print(f"{args.suite}: {'PASS' if ok else 'FAIL'} in {elapsed:.1f}s")

    if args.json:
        args.json.parent.mkdir(parents=True, exist_ok=True)
        doc = {"suite": args.suite, "pass": ok, "seconds": round(elapsed, 2),
               "rows": [r.as_dict() for r in rows], "config": DEFAULTS.as_dict()}
        args.json.write_text(json.dumps(doc, indent=2) + "\n")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
