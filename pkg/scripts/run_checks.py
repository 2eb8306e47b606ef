#!/usr/bin/env python3
"""Run the whole verification battery at desk scale and print a summary.

Default bounds match the acceptance suite; --fast shrinks everything for a
quick smoke run.  Exits non-zero if any check fails.
"""

import argparse
import sys

from lexleast.checks import (
    check_b_inequality,
    check_b_window,
    check_cross,
    check_ell_claim,
    check_eq6_intervals,
    check_minimality,
    check_powerfree,
    check_x_overlapfree,
    check_x_squares,
)


def battery(fast: bool):
    n = 1_000 if fast else 10_000
    n_min = 200 if fast else 2_000
    grid = 40 if fast else 300
    return [
        lambda: check_powerfree("w32", length=n),
        lambda: check_powerfree("x32", length=n),
        lambda: check_powerfree("ruler", length=n),
        lambda: check_cross(length=n),
        lambda: check_minimality("w32", length=n_min),
        lambda: check_minimality("x32", length=n_min),
        lambda: check_b_window(n_max=n_min, r_max=grid if fast else 200),
        lambda: check_b_inequality(s_max=grid, j_max=grid),
        lambda: check_ell_claim(n_max=n_min),
        lambda: check_eq6_intervals(n_max=n_min),
        lambda: check_x_squares(length=n),
        lambda: check_x_overlapfree(length=n),
    ]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--fast", action="store_true", help="shrink all bounds")
    args = parser.parse_args()

    failures = 0
    total_elapsed = 0.0
    for job in battery(args.fast):
        report = job()
        total_elapsed += report.elapsed
        print(f"{report.summary()}  [{report.elapsed:.2f}s]")
        if not report.passed:
            failures += 1
    print(f"\n{failures} failing check(s), {total_elapsed:.1f}s total")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
