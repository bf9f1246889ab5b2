"""Exact arithmetic kernel.

Rationals are stdlib fractions.Fraction (arbitrary precision, always
canonical).  On top of that this module provides the two exact decision
primitives the rest of the package needs:

* comparisons of a rational against a quadratic surd base + sqrt(radicand),
  done by sign analysis, never by approximating the square root;
* sign evaluation and root bracketing for monic depressed cubics
  X^3 + p*X + q with p >= 0 (strictly increasing, single real root).

Floating point is never used in any decision.  The bracket operation
exists only so reports can show a human-readable enclosure of the root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import PreconditionViolatedError

Rational = Fraction


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def rat(value: int | str | Fraction) -> Fraction:
    """Build a rational from an int, a Fraction, or a "p/q" / "p" string."""
    return Fraction(value)


def rat_str(value: Fraction) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(value))


def sqrt_exact(value: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None.

    Returns r with r*r == value iff value is the square of a rational,
    decided with integer square roots on the canonical numerator and
    denominator.  Negative input simply yields None.
    """
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class Surd:
    """The real number base + sqrt(radicand), radicand >= 0."""

    base: Fraction
    radicand: Fraction

    def __post_init__(self) -> None:
        if self.radicand < 0:
            raise PreconditionViolatedError(
                f"surd radicand must be >= 0, got {self.radicand}"
            )

    def as_rational(self) -> Fraction | None:
        """Exact rational value when the radicand is a perfect square."""
        root = sqrt_exact(self.radicand)
        if root is None:
            return None
        return self.base + root

    def is_integer(self) -> bool:
        value = self.as_rational()
        return value is not None and value.denominator == 1


def surd_cmp(x: Fraction | int, s: Surd) -> Ordering:
    """Exact order of the rational x versus base + sqrt(radicand).

    Let u = x - base.  If u < 0 the surd is larger outright; otherwise
    compare u^2 with the radicand.  Total on valid inputs.
    """
    u = Fraction(x) - s.base
    if u < 0:
        return Ordering.LESS
    uu = u * u
    if uu < s.radicand:
        return Ordering.LESS
    if uu == s.radicand:
        return Ordering.EQUAL
    return Ordering.GREATER


def floor_surd(s: Surd) -> int:
    """Exact floor of base + sqrt(radicand).

    A fast integer-sqrt estimate lands within O(1) of the answer; exact
    surd comparisons against candidate integers then pin it down.
    """
    r = s.radicand
    # floor(sqrt(n/d)) >= isqrt(n*d)//d with error < 1/d, so the first
    # guess is at most one off before the base is added.
    approx_root = Fraction(math.isqrt(r.numerator * r.denominator), r.denominator)
    guess = math.floor(s.base + approx_root)
    while surd_cmp(Fraction(guess + 1), s) is not Ordering.GREATER:
        guess += 1
    while surd_cmp(Fraction(guess), s) is Ordering.GREATER:
        guess -= 1
    return guess


@dataclass(frozen=True)
class Cubic:
    """The monic depressed cubic F(X) = X^3 + p*X + q."""

    p: Fraction
    q: Fraction

    def evaluate(self, x: Fraction | int) -> Fraction:
        x = Fraction(x)
        return x * x * x + self.p * x + self.q


def cubic_sign(f: Cubic, x: Fraction | int) -> int:
    """Exact sign of f at x: -1, 0, or +1."""
    value = f.evaluate(x)
    if value < 0:
        return -1
    if value > 0:
        return 1
    return 0


def cubic_unique_root_bracket(
    f: Cubic, width: Fraction | int
) -> tuple[Fraction, Fraction]:
    """Rational bracket (lo, hi) around the unique real root of f.

    Requires p >= 0, which makes f strictly increasing, so the real root
    is unique.  The result satisfies lo < hi, hi - lo <= width, and
    cubic_sign(f, lo) <= 0 <= cubic_sign(f, hi).  Bisection starts from
    the coefficient bound [-1-|p|-|q|, 1+|p|+|q|], which always
    straddles the root; shrinking the width refines the same bisection
    path, so brackets nest.
    """
    if f.p < 0:
        raise PreconditionViolatedError(
            f"cubic bracketing needs p >= 0 for a unique real root, got p = {f.p}"
        )
    width = Fraction(width)
    if width <= 0:
        raise PreconditionViolatedError(f"bracket width must be > 0, got {width}")
    bound = 1 + abs(f.p) + abs(f.q)
    lo, hi = -bound, bound
    while hi - lo > width:
        mid = (lo + hi) / 2
        if cubic_sign(f, mid) <= 0:
            lo = mid
        else:
            hi = mid
    return lo, hi
