#!/usr/bin/env python3
"""Run the bundled quadric sweep and print its summary plus extremes.

Demonstrates the sweep API end to end: build a spec, run the grid,
aggregate, and pick out the rows with the largest certified bounds.
"""

import sys
from fractions import Fraction

from nonvanish import SweepSpec, hypersurface, run_sweep, summarize


def main() -> int:
    spec = SweepSpec(
        threefolds=(hypersurface(2),),
        c1_values=(0,),
        c2_range=(0, 10),
        alpha_range=(-5, 5),
    )
    rows = run_sweep(spec)
    summary = summarize(rows)
    print("quadric grid, c2 in 0..10, alpha in -5..5")
    for key in ("rows", "invalid", "split", "certified"):
        print(f"  {key}: {summary[key]}")
    print(f"  regimes: {summary['regimes']}")
    print(f"  theorems: {summary['theorems']}")

    def bound(row):
        return Fraction(row[12]) if row[12] else Fraction(0)

    print("\nlargest certified lower bounds:")
    for row in sorted(rows, key=bound, reverse=True)[:5]:
        print(
            f"  c2={row[4]:>2s} alpha={row[5]:>2s}  "
            f"max bound {row[12]:>5s} at n={row[11]} via {row[13]}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
