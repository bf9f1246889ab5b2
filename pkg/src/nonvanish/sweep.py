"""Grid sweeps over bundle invariants with CSV output.

Cells are analyzed independently, so the sweep can fan out over worker
processes; results keep grid order either way.  Invalid characteristic
triples become rows flagged valid=no instead of aborting the sweep.
"""

from __future__ import annotations

import csv
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import IO, Iterator

from .bundle import BundleInvariants
from .errors import GridTooLargeError, ValidationFailedError
from .exactnum import rat_str
from .nonvanishing import analyze
from .threefold import PicardMode, Threefold, VanishingMode

DEFAULT_CAP = 10**6

CSV_COLUMNS = (
    "d", "epsilon", "tau", "c1", "c2", "alpha",
    "valid", "rules_failed", "regime", "split",
    "certificates", "max_twist", "max_bound", "theorems", "acm",
)

# A cell is a tuple of primitives so worker processes get cheap pickles:
# (d, epsilon, tau, picard, vanishing, c1, c2, alpha).
Cell = tuple[int, int, int, str, str, int, int, int]


@dataclass(frozen=True)
class SweepSpec:
    threefolds: tuple[Threefold, ...]
    c1_values: tuple[int, ...]
    c2_range: tuple[int, int]
    alpha_range: tuple[int, int]
    cap: int = DEFAULT_CAP


def grid_size(spec: SweepSpec) -> int:
    c2_lo, c2_hi = spec.c2_range
    a_lo, a_hi = spec.alpha_range
    return (
        len(spec.threefolds)
        * len(spec.c1_values)
        * (c2_hi - c2_lo + 1)
        * (a_hi - a_lo + 1)
    )


def iter_cells(spec: SweepSpec) -> Iterator[Cell]:
    for X in spec.threefolds:
        for c1 in spec.c1_values:
            for c2 in range(spec.c2_range[0], spec.c2_range[1] + 1):
                for alpha in range(spec.alpha_range[0], spec.alpha_range[1] + 1):
                    yield (
                        X.d, X.epsilon, X.tau,
                        X.picard_mode.value, X.vanishing_mode.value,
                        c1, c2, alpha,
                    )


def row_for_cell(cell: Cell) -> tuple[str, ...]:
    d, epsilon, tau, picard, vanishing, c1, c2, alpha = cell
    head = (str(d), str(epsilon), str(tau), str(c1), str(c2), str(alpha))
    X = Threefold(
        d=d, epsilon=epsilon, tau=tau,
        picard_mode=PicardMode(picard),
        vanishing_mode=VanishingMode(vanishing),
    )
    B = BundleInvariants(c1=c1, c2=c2, alpha=alpha)
    try:
        report = analyze(X, B)
    except ValidationFailedError as exc:
        return head + ("no", ";".join(exc.failed_rules), "", "", "", "", "", "", "")
    certs = report.certificates
    theorems = sorted({c.theorem.value for c in certs})
    return head + (
        "yes",
        "",
        report.regime.name,
        "yes" if report.split else "no",
        str(len(certs)),
        str(max(c.n for c in certs)) if certs else "",
        rat_str(max(c.lower_bound for c in certs)) if certs else "",
        ";".join(theorems),
        ";".join(o.kind.value for o in report.acm_obstructions),
    )


def run_sweep(spec: SweepSpec, jobs: int = 1) -> list[tuple[str, ...]]:
    """All grid rows in deterministic grid order.

    Raises GridTooLargeError before any work when the cell count exceeds
    the cap.
    """
    total = grid_size(spec)
    if total > spec.cap:
        raise GridTooLargeError(
            f"grid has {total} cells, cap is {spec.cap}; "
            "raise --cap or NONVANISH_CAP to proceed"
        )
    cells = iter_cells(spec)
    if jobs <= 1:
        return [row_for_cell(cell) for cell in cells]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(row_for_cell, cells, chunksize=64))


def write_csv(rows: list[tuple[str, ...]], stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    writer.writerows(rows)


def summarize(rows: list[tuple[str, ...]]) -> dict:
    """Aggregate counts: total, invalid, split, certified, per-regime and
    per-theorem row counts (rows in which the tag certifies some twist)."""
    regimes: dict[str, int] = {}
    theorems: dict[str, int] = {}
    invalid = split = certified = 0
    for row in rows:
        if row[6] != "yes":
            invalid += 1
            continue
        regimes[row[8]] = regimes.get(row[8], 0) + 1
        if row[9] == "yes":
            split += 1
        if row[10] != "0":
            certified += 1
        for tag in row[13].split(";"):
            if tag:
                theorems[tag] = theorems.get(tag, 0) + 1
    return {
        "rows": len(rows),
        "invalid": invalid,
        "split": split,
        "certified": certified,
        "regimes": dict(sorted(regimes.items())),
        "theorems": dict(sorted(theorems.items())),
    }
