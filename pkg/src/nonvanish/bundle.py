"""Normalized rank-2 bundle invariants and derived quantities.

The bundle enters through (c1, c2, alpha) with c1 in {0, -1}.  alpha is
the first relevant level (least t with h0(E(t)) != 0); it is input data,
not computable from Chern numbers.  Everything else is derived exactly:

    delta  = c2 + d*alpha^2 + c1*d*alpha      (0 iff the bundle splits)
    theta  = 3c2/d - tau/2d + eps^2/4 - 3c1^2/4
    zeta0  = (eps - c1)/2
    w0     = floor(zeta0) + 1
    zeta   = zeta0 + sqrt(theta)              (real iff theta >= 0)
    abar   = floor(zeta) + 1

and the Hilbert polynomial chi(E(n)) = (d/3)(n - zeta0)[(n - zeta0)^2 - theta].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import NonIntegerResultError, PreconditionViolatedError
from .exactnum import Surd, floor_surd
from .threefold import Threefold, lam


@dataclass(frozen=True)
class BundleInvariants:
    c1: int
    c2: int
    alpha: int

    def __post_init__(self) -> None:
        if self.c1 not in (0, -1):
            raise PreconditionViolatedError(
                f"bundle must be normalized, c1 in {{0, -1}}, got {self.c1}"
            )


@dataclass(frozen=True)
class DerivedInvariants:
    delta: int
    theta: Fraction
    zeta0: Fraction
    w0: int
    lam: Fraction
    # zeta and alpha_bar exist exactly when theta >= 0.
    zeta: Surd | None
    alpha_bar: int | None


def derive(X: Threefold, B: BundleInvariants) -> DerivedInvariants:
    d = X.d
    delta = B.c2 + d * B.alpha**2 + B.c1 * d * B.alpha
    shift = lam(X)
    theta = Fraction(3 * B.c2, d) - shift - Fraction(3 * B.c1**2, 4)
    zeta0 = Fraction(X.epsilon - B.c1, 2)
    w0 = math.floor(zeta0) + 1
    if theta >= 0:
        zeta = Surd(base=zeta0, radicand=theta)
        alpha_bar = floor_surd(zeta) + 1
    else:
        zeta = None
        alpha_bar = None
    return DerivedInvariants(
        delta=delta,
        theta=theta,
        zeta0=zeta0,
        w0=w0,
        lam=shift,
        zeta=zeta,
        alpha_bar=alpha_bar,
    )


def chi_E_rational(X: Threefold, D: DerivedInvariants, n: int) -> Fraction:
    """chi(E(n)) on the rational layer, no integrality assertion."""
    u = Fraction(n) - D.zeta0
    return Fraction(X.d, 3) * u * (u * u - D.theta)


def chi_E(X: Threefold, D: DerivedInvariants, n: int) -> int:
    """Integer layer of chi(E(n)); refuses to round."""
    value = chi_E_rational(X, D, n)
    if value.denominator != 1:
        raise NonIntegerResultError(
            f"chi(E({n})) = {value} is not an integer; "
            "the invariant set is inconsistent"
        )
    return value.numerator


def is_split_numeric(D: DerivedInvariants) -> bool:
    """delta = 0 characterizes split bundles among existing ones."""
    return D.delta == 0


class Regime(Enum):
    # Ordered: increasing alpha never moves the regime leftward.
    NONSTABLE_STRONG = "NONSTABLE_STRONG"
    GAP = "GAP"
    STABLE_STRONG = "STABLE_STRONG"


def regime(X: Threefold, B: BundleInvariants) -> Regime:
    """Coarse alpha classification against the two strong thresholds.

    NONSTABLE_STRONG when 2*alpha <= -(eps+3+c1), STABLE_STRONG when
    2*alpha >= eps+5-c1, GAP between.  For eps <= -4 the two thresholds
    meet and the nonstable label wins the tie.
    """
    if 2 * B.alpha <= -(X.epsilon + 3 + B.c1):
        return Regime.NONSTABLE_STRONG
    if 2 * B.alpha >= X.epsilon + 5 - B.c1:
        return Regime.STABLE_STRONG
    return Regime.GAP
