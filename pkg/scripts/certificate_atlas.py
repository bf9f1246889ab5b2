#!/usr/bin/env python3
"""Print a compact certificate atlas for every bundled fixture.

One row per certified twist, grouped by fixture. Lightweight API demo:
parse a fixture, analyze it, read the certificate tuple.
"""

import pathlib
import sys

from nonvanish import AnalyzeConfig, analyze, load_input, rat_str

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

ANALYZABLE = [
    "quadric_stable.nv",
    "quintic_nonstable.nv",
    "quadric_skew_lines.nv",
    "quadric_nonstable.nv",
    "cubic_engine.nv",
    "split_p3.nv",
    "numz_cover.nv",
]


def main() -> int:
    for name in ANALYZABLE:
        doc = load_input(str(FIXTURES / name))
        report = analyze(doc.threefold, doc.bundle, AnalyzeConfig(label=doc.label))
        X, D = report.threefold, report.derived
        print(
            f"{name:26s} d={X.d} eps={X.epsilon:3d} tau={X.tau:3d}  "
            f"delta={D.delta:3d} theta={rat_str(D.theta):>6s}  "
            f"regime={report.regime.name}"
            + ("  SPLIT" if report.split else "")
        )
        if not report.certificates:
            print("    no certificates")
        for cert in report.certificates:
            also = (
                " (also " + ", ".join(t.value for t in cert.supporting) + ")"
                if cert.supporting
                else ""
            )
            print(
                f"    n={cert.n:3d}  h1 >= {rat_str(cert.lower_bound):>6s}"
                f"  {cert.theorem.value}{also}"
            )
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
