"""Finite-cover transport of invariants and h1 aggregation.

For a degree-d cyclic cover of projective 3-space branched so that the
pull-back of O(1) is the generator upstairs, a rank-2 bundle E downstairs
pulls back to F with the same c1 and alpha while c2 scales by d.  Twist
cohomology aggregates over a length-d window downstairs:

    h1(F(n)) = sum of h1(E(n - j)) for j = 0..d-1.

Downstairs h1 values enter as a table.  By default the table entries are
certified lower bounds, so aggregates are lower bounds too; tables marked
exact make aggregates exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bundle import BundleInvariants
from .errors import PreconditionViolatedError, WindowExceededError


@dataclass(frozen=True)
class P3BundleData:
    """Invariants of a bundle on projective 3-space plus a window of h1 values.

    h1_table holds (twist, value) pairs, sorted by twist, one per twist of
    the inclusive window.  Values are lower bounds unless exact is set.
    """

    invariants: BundleInvariants
    window: tuple[int, int] | None = None
    h1_table: tuple[tuple[int, int], ...] = ()
    exact: bool = False

    def __post_init__(self) -> None:
        if self.window is None:
            if self.h1_table:
                raise PreconditionViolatedError("h1 table given without a window")
            return
        lo, hi = self.window
        if lo > hi:
            raise PreconditionViolatedError(f"empty window {lo}..{hi}")
        twists = tuple(n for n, _ in self.h1_table)
        if twists != tuple(range(lo, hi + 1)):
            raise PreconditionViolatedError(
                f"h1 table twists {twists} do not cover the window {lo}..{hi}"
            )
        for n, value in self.h1_table:
            if value < 0:
                raise PreconditionViolatedError(f"negative h1 value {value} at n = {n}")

    def h1_at(self, n: int) -> int:
        if self.window is None or not (self.window[0] <= n <= self.window[1]):
            raise WindowExceededError(f"twist {n} outside the h1 window")
        return self.h1_table[n - self.window[0]][1]


def delta_of(d: int, B: BundleInvariants) -> int:
    # delta for a degree-d polarization: c2 + d*alpha^2 + c1*d*alpha.
    return B.c2 + d * B.alpha**2 + B.c1 * d * B.alpha


def pullback_invariants(d: int, E: BundleInvariants) -> BundleInvariants:
    """Invariants of the pull-back bundle under a degree-d cover.

    c1 and alpha are preserved; c2 scales by d.  The induced relation
    delta(F) = d * delta(E) is asserted by recomputation.
    """
    if d < 1:
        raise PreconditionViolatedError(f"cover degree must be >= 1, got {d}")
    F = BundleInvariants(c1=E.c1, c2=d * E.c2, alpha=E.alpha)
    assert delta_of(d, F) == d * delta_of(1, E), "delta transport identity failed"
    return F


def aggregate_h1(d: int, E: P3BundleData, n: int) -> int:
    """h1 of the pulled-back bundle at twist n, summed from the table.

    Requires the full downstairs range [n-d+1, n] inside E's window; a
    partial window would silently undercount, so it is an error instead.
    """
    if d < 1:
        raise PreconditionViolatedError(f"cover degree must be >= 1, got {d}")
    if E.window is None:
        raise WindowExceededError("no h1 window supplied")
    lo, hi = E.window
    if not (lo <= n - d + 1 and n <= hi):
        raise WindowExceededError(
            f"aggregation at twist {n} needs downstairs twists "
            f"{n - d + 1}..{n}, but the window is {lo}..{hi}"
        )
    return sum(E.h1_at(n - j) for j in range(d))
