"""Acceptance criteria 1-11 at their stated tolerances.

Each test runs one criterion and fails if any asserted row fails. A one-line
verdict per criterion is printed in the pytest terminal summary; run this file
directly for the same table plus every individual row.
"""

import functools
import sys

import pytest

from ordmix import acceptance

CRITERIA = {i: getattr(acceptance, f"criterion_{i}") for i in range(1, 12)}
RESULTS: dict[int, list] = {}


@functools.lru_cache(maxsize=None)
def rows_for(number: int):
    rows = CRITERIA[number]()
    RESULTS[number] = rows
    return rows


def summary_line(number: int, rows) -> str:
    asserted = [r for r in rows if r.asserted]
    failed = [r for r in asserted if not r.passed]
    tag = "FAIL" if failed else "PASS"
    note = "; ".join(f"{r.label}: {r.value:.4g} vs {r.limit:.4g}" for r in failed)
    return f"[{tag}] criterion {number:>2}: {len(asserted) - len(failed)}/{len(asserted)} checks" + (
        f"  failing: {note}" if note else "")


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    rows = rows_for(number)
    for r in rows:
        print(r.line())
    failed = [r.line() for r in rows if r.asserted and not r.passed]
    assert not failed, "\n".join(failed)


def test_mixture_and_inverse_seeds_fixed():
    assert (acceptance.MIXTURE_SEED, acceptance.INVERSE_SEED, acceptance.BIVARIATE_SEED) == (42, 43, 7)


def main() -> int:
    ok = True
    for number in sorted(CRITERIA):
        rows = rows_for(number)
        for r in rows:
            print("   " + r.line())
        line = summary_line(number, rows)
        ok &= line.startswith("[PASS]")
        print(line)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
