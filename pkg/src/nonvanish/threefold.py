"""Polarized threefold model.

A threefold enters the engine only through its characteristic numbers
(d, epsilon, tau): the degree H^3, the canonical twist (omega = O(eps)),
and the degree of the second Chern class of the tangent bundle.  This
module validates those numbers against the known constraints and
evaluates the Hilbert polynomial chi(O_X(n)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import NonIntegerResultError, PreconditionViolatedError


class PicardMode(Enum):
    # NUM_Z reinterprets every twist degree as an eta-degree (the integer
    # image of a numerical class); all formulas are unchanged.
    PIC_Z = "z"
    NUM_Z = "num-z"


class VanishingMode(Enum):
    # FULL_C2: h1(O_X(n)) = 0 for every n, no guard needed anywhere.
    # KODAIRA_C4: only Kodaira-type vanishing available; nonstable
    # certificates carry the guard n - alpha not in {0..eps}.
    FULL_C2 = "c2"
    KODAIRA_C4 = "c4"


@dataclass(frozen=True)
class Threefold:
    d: int
    epsilon: int
    tau: int
    picard_mode: PicardMode = PicardMode.PIC_Z
    vanishing_mode: VanishingMode = VanishingMode.KODAIRA_C4

    def __post_init__(self) -> None:
        if self.d < 1:
            raise PreconditionViolatedError(f"degree must be >= 1, got {self.d}")


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the characteristic-number sieve.

    violations holds (rule id, human message) pairs; rule ids are fixed
    wire tokens of the report format ("degree" plus "P3.2-1".."P3.2-10").
    ok holds exactly when violations is empty.
    """

    ok: bool
    violations: tuple[tuple[str, str], ...] = field(default_factory=tuple)


# The four (epsilon, tau) pairs possible for epsilon < 0.
NEGATIVE_EPSILON_PAIRS = ((-4, 6), (-3, 8), (-2, 12), (-1, 24))


def lam(X: Threefold) -> Fraction:
    """The quadratic shift tau/2d - eps^2/4 appearing in chi(O_X(n))."""
    return Fraction(X.tau, 2 * X.d) - Fraction(X.epsilon**2, 4)


def validate(d: int, epsilon: int, tau: int) -> ValidationReport:
    """Run every applicable sieve rule; report failures, never raise."""
    out: list[tuple[str, str]] = []

    if d < 1:
        out.append(("degree", f"d must be >= 1, got {d}"))
    if epsilon < -4:
        out.append(("P3.2-1", f"epsilon must be >= -4, got {epsilon}"))
    if epsilon == -4 and (d, epsilon, tau) != (1, -4, 6):
        out.append(
            ("P3.2-2", f"epsilon = -4 forces (d, epsilon, tau) = (1, -4, 6), got ({d}, {epsilon}, {tau})")
        )
    if epsilon == -3 and (d, epsilon, tau) != (2, -3, 8):
        out.append(
            ("P3.2-3", f"epsilon = -3 forces (d, epsilon, tau) = (2, -3, 8), got ({d}, {epsilon}, {tau})")
        )
    if epsilon * tau % 24 != 0:
        out.append(("P3.2-4", f"epsilon*tau must be a multiple of 24, got {epsilon * tau}"))
    elif epsilon < 0 and epsilon * tau != -24:
        out.append(("P3.2-4", f"epsilon < 0 forces epsilon*tau = -24, got {epsilon * tau}"))
    if epsilon != 0 and tau <= 0:
        out.append(("P3.2-5", f"epsilon != 0 forces tau > 0, got tau = {tau}"))
    if epsilon == 0 and d >= 1 and tau <= -2 * d:
        out.append(("P3.2-6", f"epsilon = 0 forces tau > -2d = {-2 * d}, got tau = {tau}"))
    if tau % 2 != 0:
        out.append(("P3.2-7", f"tau must be even (parity), got {tau}"))
    if d >= 1:
        shift = Fraction(tau, 2 * d) - Fraction(epsilon**2, 4)
        if epsilon % 2 == 0 and shift < -1:
            out.append(
                ("P3.2-8", f"epsilon even forces tau/2d - eps^2/4 >= -1, got {shift}")
            )
        if epsilon % 2 != 0 and shift < Fraction(-1, 4):
            out.append(
                ("P3.2-9", f"epsilon odd forces tau/2d - eps^2/4 >= -1/4, got {shift}")
            )
    if epsilon < 0 and (epsilon, tau) not in NEGATIVE_EPSILON_PAIRS:
        out.append(
            ("P3.2-10", f"epsilon < 0 admits only (eps, tau) in {NEGATIVE_EPSILON_PAIRS}, got ({epsilon}, {tau})")
        )

    return ValidationReport(ok=not out, violations=tuple(out))


def hypersurface(
    d: int,
    picard_mode: PicardMode = PicardMode.PIC_Z,
    vanishing_mode: VanishingMode = VanishingMode.FULL_C2,
) -> Threefold:
    """Smooth degree-d hypersurface threefold: (d, d-5, d(10-5d+d^2)).

    Hypersurfaces enjoy the full vanishing of h1(O_X(n)), so the default
    vanishing mode is FULL_C2.  The result passes validate() for every
    d >= 1.
    """
    if d < 1:
        raise PreconditionViolatedError(f"degree must be >= 1, got {d}")
    return Threefold(
        d=d,
        epsilon=d - 5,
        tau=d * (10 - 5 * d + d * d),
        picard_mode=picard_mode,
        vanishing_mode=vanishing_mode,
    )


def chi_O_rational(X: Threefold, n: int) -> Fraction:
    """chi(O_X(n)) = (d/6)(n - eps/2)[(n - eps/2)^2 + tau/2d - eps^2/4].

    Rational layer: no integrality assertion.  Oracle identities are
    checked here so that near-miss characteristic numbers (which pass the
    sieve but belong to no actual variety) can still be cross-checked.
    """
    m = Fraction(n) - Fraction(X.epsilon, 2)
    return Fraction(X.d, 6) * m * (m * m + lam(X))


def chi_O(X: Threefold, n: int) -> int:
    """Integer layer of chi(O_X(n)); refuses to round."""
    value = chi_O_rational(X, n)
    if value.denominator != 1:
        raise NonIntegerResultError(
            f"chi(O({n})) = {value} is not an integer for (d, epsilon, tau) = "
            f"({X.d}, {X.epsilon}, {X.tau}); no variety realizes these numbers"
        )
    return value.numerator
