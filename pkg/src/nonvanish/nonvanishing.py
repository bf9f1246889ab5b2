"""Certificate engines for the non-vanishing of h1(E(n)).

Each engine applies one proven lower-bound statement to the exact
invariants and emits certificates (twist, positive rational lower bound).
Certificates never claim more than the underlying statement: a bound of 1
means only "nonzero".  Inapplicable hypotheses raise NotApplicableError;
applicable-but-empty ranges return empty lists.  The analyze() driver
merges all engines, applies the vanishing guard, cross-checks the linear
bounds against an independent Euler-characteristic identity, and attaches
ACM obstructions and the split flag.

Certificate tags ("T4_3", "T4_5", "T4_7", "T5_2", "T5_4_1", "T5_4_3") are
fixed wire tokens of the report format.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .bundle import (
    BundleInvariants,
    DerivedInvariants,
    Regime,
    chi_E,
    chi_E_rational,
    derive,
    is_split_numeric,
    regime,
)
from .errors import NotApplicableError, PreconditionViolatedError, ValidationFailedError
from .exactnum import Cubic, Ordering, cubic_sign, surd_cmp
from .threefold import (
    PicardMode,
    Threefold,
    ValidationReport,
    VanishingMode,
    chi_O,
    chi_O_rational,
    validate,
)


class Theorem(Enum):
    # Members are named by what the statement does; values are the wire tags.
    NONSTABLE_LINEAR = "T4_3"
    NONSTABLE_QUADRATIC = "T4_5"
    NONSTABLE_CUBIC = "T4_7"
    STABLE_RANGE = "T5_2"
    THETA_WINDOW = "T5_4_1"
    THETA_INTEGER_EDGE = "T5_4_3"


_THEOREM_ORDER = {t: i for i, t in enumerate(Theorem)}
_NONSTABLE_TAGS = (
    Theorem.NONSTABLE_LINEAR,
    Theorem.NONSTABLE_QUADRATIC,
    Theorem.NONSTABLE_CUBIC,
)


@dataclass(frozen=True)
class NonvanishingCertificate:
    theorem: Theorem
    n: int
    lower_bound: Fraction  # certified h1(E(n)) >= lower_bound > 0
    guard_ok: bool = True
    # Other theorems that also certify this twist (dedup keeps the max bound).
    supporting: tuple[Theorem, ...] = ()


class AcmKind(Enum):
    ALPHA_TOO_LARGE = "ALPHA_TOO_LARGE"
    THETA_NONNEGATIVE = "THETA_NONNEGATIVE"


@dataclass(frozen=True)
class AcmObstruction:
    kind: AcmKind
    detail: str


@dataclass(frozen=True)
class AnalyzeConfig:
    label: str | None = None
    cross_check: bool = True
    # When set, the report carries exact chi values over this inclusive
    # window; both Euler characteristics are asserted integral there.
    chi_window: tuple[int, int] | None = None


@dataclass(frozen=True)
class AnalysisReport:
    threefold: Threefold
    bundle: BundleInvariants
    label: str | None
    validation: ValidationReport
    derived: DerivedInvariants
    regime: Regime
    split: bool
    certificates: tuple[NonvanishingCertificate, ...]
    acm_obstructions: tuple[AcmObstruction, ...]
    notes: tuple[str, ...]
    chi_table: tuple[tuple[int, int, int], ...] | None = None


def guard(X: Threefold, B: BundleInvariants, n: int) -> bool:
    """Vanishing guard for the nonstable engines.

    True in FULL_C2 mode and whenever epsilon < 0 (Kodaira alone already
    kills every h1(O_X(n))).  Otherwise the twist must satisfy
    n - alpha not in {0, ..., epsilon}; duality makes the mirror condition
    automatic.
    """
    if X.vanishing_mode is VanishingMode.FULL_C2:
        return True
    if X.epsilon < 0:
        return True
    return not (0 <= n - B.alpha <= X.epsilon)


def _require_nonstable(B: BundleInvariants) -> None:
    if B.alpha > 0:
        raise NotApplicableError(
            f"nonstable engines need alpha <= 0, got alpha = {B.alpha}"
        )


def thm_nonstable_basic(
    X: Threefold, B: BundleInvariants, D: DerivedInvariants
) -> list[NonvanishingCertificate]:
    """Linear bounds: h1(E(n)) >= (n - zeta0)*delta on zeta0 < n <= -alpha-c1-1.

    The range is nonempty exactly when 2*alpha <= -(epsilon+3+c1).  For
    delta <= 0 every bound is nonpositive, so nothing is emitted.
    """
    _require_nonstable(B)
    if D.delta <= 0:
        return []
    top = -B.alpha - B.c1 - 1
    return [
        NonvanishingCertificate(
            theorem=Theorem.NONSTABLE_LINEAR,
            n=n,
            lower_bound=(Fraction(n) - D.zeta0) * D.delta,
        )
        for n in range(D.w0, top + 1)
    ]


def _quadratic_gate(X: Threefold, B: BundleInvariants, D: DerivedInvariants) -> Fraction:
    return Fraction(6 * D.delta, X.d) - D.lam - Fraction(3 * B.c1**2, 4)


def thm_nonstable_quadratic(
    X: Threefold, B: BundleInvariants, D: DerivedInvariants
) -> list[NonvanishingCertificate]:
    """Quadratic bounds h1(E(n)) >= -S(n) with
    S(n) = (d/6)(n - zeta0)[(n - zeta0)^2 - Q], Q = 6*delta/d - lam - 3*c1^2/4.

    Applies for alpha <= 0 whenever Q >= 0; emitted twists satisfy
    n > zeta0, n >= epsilon-alpha-c1+1 and (n - zeta0)^2 < Q, which forces
    every bound positive.
    """
    _require_nonstable(B)
    q_gate = _quadratic_gate(X, B, D)
    if q_gate < 0:
        raise NotApplicableError(
            f"quadratic engine needs 6*delta/d - tau/2d + eps^2/4 - 3*c1^2/4 >= 0, got {q_gate}"
        )
    out = []
    n = max(D.w0, X.epsilon - B.alpha - B.c1 + 1)
    while (Fraction(n) - D.zeta0) ** 2 < q_gate:
        u = Fraction(n) - D.zeta0
        bound = -(Fraction(X.d, 6) * u * (u * u - q_gate))
        out.append(
            NonvanishingCertificate(
                theorem=Theorem.NONSTABLE_QUADRATIC, n=n, lower_bound=bound
            )
        )
        n += 1
    return out


def cubic_of(X: Threefold, D: DerivedInvariants, B: BundleInvariants) -> Cubic:
    """F(X) = X^3 + (lam - 6*delta/d)X + 6*alpha*delta/d."""
    six_delta_over_d = Fraction(6 * D.delta, X.d)
    return Cubic(p=D.lam - six_delta_over_d, q=B.alpha * six_delta_over_d)


def thm_nonstable_cubic(
    X: Threefold, B: BundleInvariants, D: DerivedInvariants
) -> list[NonvanishingCertificate]:
    """Cubic bounds h1(E(n)) >= -(d/6)F(n + alpha - zeta0).

    Needs alpha <= 0, delta != 0, and 6*delta/d - tau/2d + eps^2/4 <= 0
    (the gate is stated without the 3*c1^2/4 term and is applied exactly
    as written).  Under the gate F is strictly increasing, so membership
    n < -alpha + X0 + zeta0 is decided by the exact sign of F alone and
    the emitted run starting at epsilon-alpha-c1+1 is contiguous.
    """
    _require_nonstable(B)
    if D.delta == 0:
        raise NotApplicableError("cubic engine needs delta != 0")
    gate = Fraction(6 * D.delta, X.d) - D.lam
    if gate > 0:
        raise NotApplicableError(
            f"cubic engine needs 6*delta/d - tau/2d + eps^2/4 <= 0, got {gate}"
        )
    f = cubic_of(X, D, B)
    out = []
    n = X.epsilon - B.alpha - B.c1 + 1
    while True:
        x = Fraction(n + B.alpha) - D.zeta0
        if cubic_sign(f, x) >= 0:
            break
        out.append(
            NonvanishingCertificate(
                theorem=Theorem.NONSTABLE_CUBIC,
                n=n,
                lower_bound=-(Fraction(X.d, 6) * f.evaluate(x)),
            )
        )
        n += 1
    return out


def thm_stable_range(
    X: Threefold, B: BundleInvariants, D: DerivedInvariants
) -> list[NonvanishingCertificate]:
    """Nonzero h1(E(n)) for w0 <= n <= alpha-2 when 2*alpha >= eps+5-c1.

    The hypothesis makes the range nonempty.  No vanishing guard is
    needed on the stable side.
    """
    if 2 * B.alpha < X.epsilon + 5 - B.c1:
        raise NotApplicableError(
            f"stable range engine needs 2*alpha >= epsilon+5-c1 = "
            f"{X.epsilon + 5 - B.c1}, got 2*alpha = {2 * B.alpha}"
        )
    return [
        NonvanishingCertificate(
            theorem=Theorem.STABLE_RANGE, n=n, lower_bound=Fraction(1)
        )
        for n in range(D.w0, B.alpha - 1)
    ]


def thm_stable_theta(
    X: Threefold, B: BundleInvariants, D: DerivedInvariants
) -> list[NonvanishingCertificate]:
    """Root-window certificates for theta >= 0.

    Part 1 emits every integer strictly between zeta0 and zeta (exact
    surd comparisons).  When zeta is an integer and alpha < alpha_bar,
    the edge twist alpha_bar - 1 is certified separately.
    """
    if D.zeta is None:
        raise NotApplicableError(f"theta window engine needs theta >= 0, got {D.theta}")
    out = []
    n = D.w0  # least integer > zeta0
    while surd_cmp(Fraction(n), D.zeta) is Ordering.LESS:
        out.append(
            NonvanishingCertificate(
                theorem=Theorem.THETA_WINDOW, n=n, lower_bound=Fraction(1)
            )
        )
        n += 1
    assert D.alpha_bar is not None
    if D.zeta.is_integer() and B.alpha < D.alpha_bar:
        out.append(
            NonvanishingCertificate(
                theorem=Theorem.THETA_INTEGER_EDGE,
                n=D.alpha_bar - 1,
                lower_bound=Fraction(1),
            )
        )
    return out


def acm_obstructions(
    X: Threefold, B: BundleInvariants, D: DerivedInvariants
) -> list[AcmObstruction]:
    """Criteria excluding ACM-ness.  An empty list proves nothing."""
    out = []
    if 2 * B.alpha >= X.epsilon + 5 - B.c1:
        out.append(
            AcmObstruction(
                kind=AcmKind.ALPHA_TOO_LARGE,
                detail=f"2*alpha = {2 * B.alpha} >= epsilon+5-c1 = {X.epsilon + 5 - B.c1}; "
                "an ACM bundle must satisfy the strict reverse inequality",
            )
        )
    if D.theta >= 0:
        out.append(
            AcmObstruction(
                kind=AcmKind.THETA_NONNEGATIVE,
                detail=f"theta = {D.theta} >= 0; an ACM bundle must have theta < 0",
            )
        )
    return out


def _check_difference_range(B: BundleInvariants, D: DerivedInvariants, n: int) -> None:
    if B.alpha > 0:
        raise PreconditionViolatedError(
            f"the h1-h2 difference identity needs alpha <= 0, got {B.alpha}"
        )
    top = -B.alpha - B.c1 - 1
    if not (D.zeta0 <= n <= top):
        raise PreconditionViolatedError(
            f"twist {n} outside the identity range [{D.zeta0}, {top}]"
        )


def h1_h2_difference(
    X: Threefold, B: BundleInvariants, D: DerivedInvariants, n: int
) -> Fraction:
    """Certified value of h1(E(n)) - h2(E(n)) on zeta0 <= n <= -alpha-c1-1.

    Equals (n - zeta0)*delta.  Both sides vanish at n = zeta0 when that
    endpoint is an integer.
    """
    _check_difference_range(B, D, n)
    return (Fraction(n) - D.zeta0) * D.delta


def h1_h2_difference_via_chi(
    X: Threefold, B: BundleInvariants, D: DerivedInvariants, n: int
) -> Fraction:
    """Independent route to the same difference, through Euler characteristics.

    chi(O(n - alpha)) - chi(O(eps - n - alpha + [c1 = -1])) - chi(E(n)),
    evaluated on the rational layer so the identity can be checked even
    for characteristic numbers no variety realizes.
    """
    _check_difference_range(B, D, n)
    dual_twist = X.epsilon - n - B.alpha + (1 if B.c1 == -1 else 0)
    return (
        chi_O_rational(X, n - B.alpha)
        - chi_O_rational(X, dual_twist)
        - chi_E_rational(X, D, n)
    )


def split_precondition_numeric(X: Threefold, B: BundleInvariants) -> bool:
    """Numeric part of the splitting criterion: 2*alpha <= -epsilon-3-c1.

    The criterion's cohomological hypotheses are not checkable from
    invariants; this predicate only reports that the numeric gate is open.
    """
    return 2 * B.alpha <= -X.epsilon - 3 - B.c1


_ENGINES = (
    (Theorem.NONSTABLE_LINEAR, thm_nonstable_basic),
    (Theorem.NONSTABLE_QUADRATIC, thm_nonstable_quadratic),
    (Theorem.NONSTABLE_CUBIC, thm_nonstable_cubic),
    (Theorem.STABLE_RANGE, thm_stable_range),
    (Theorem.THETA_WINDOW, thm_stable_theta),
)


def _cross_check(
    X: Threefold, B: BundleInvariants, D: DerivedInvariants,
    linear_certs: list[NonvanishingCertificate],
) -> None:
    # The two routes to h1 - h2 must agree exactly; sample the whole
    # admissible window up to a fixed cap.
    import math

    lo = math.ceil(D.zeta0)
    hi = -B.alpha - B.c1 - 1
    for n in range(lo, min(hi, lo + 24) + 1):
        direct = h1_h2_difference(X, B, D, n)
        via_chi = h1_h2_difference_via_chi(X, B, D, n)
        if direct != via_chi:
            raise AssertionError(
                f"h1-h2 difference mismatch at n = {n}: {direct} != {via_chi}"
            )
    for cert in linear_certs:
        if cert.lower_bound != h1_h2_difference(X, B, D, cert.n):
            raise AssertionError(
                f"linear certificate bound at n = {cert.n} disagrees with the identity"
            )


def analyze(
    X: Threefold, B: BundleInvariants, config: AnalyzeConfig | None = None
) -> AnalysisReport:
    """Run every applicable engine and assemble the merged report.

    Raises ValidationFailedError when the characteristic numbers fail the
    sieve.  Split inputs (delta = 0) short-circuit every engine: split
    bundles are ACM-or-nothing at this level of information, and the
    stable-side statements exclude them outright.
    """
    config = config or AnalyzeConfig()
    validation = validate(X.d, X.epsilon, X.tau)
    if not validation.ok:
        raise ValidationFailedError(
            "characteristic numbers rejected: "
            + "; ".join(f"{rule}: {msg}" for rule, msg in validation.violations),
            failed_rules=tuple(rule for rule, _ in validation.violations),
        )
    D = derive(X, B)
    reg = regime(X, B)
    split = is_split_numeric(D)
    notes: list[str] = []
    raw: list[NonvanishingCertificate] = []
    linear_certs: list[NonvanishingCertificate] = []

    if split:
        notes.append(
            "split invariants (delta = 0): certificates suppressed; the "
            "h1-h2 difference vanishes identically and split bundles are "
            "excluded from the stable-side statements"
        )
    else:
        for tag, engine in _ENGINES:
            try:
                certs = engine(X, B, D)
            except NotApplicableError as exc:
                notes.append(f"{tag.value} not applicable: {exc}")
                if tag is Theorem.NONSTABLE_CUBIC and B.c1 == -1:
                    gate = Fraction(6 * D.delta, X.d) - D.lam
                    if 0 < gate <= Fraction(3, 4):
                        notes.append(
                            "T4_7 gate is stated without the 3*c1^2/4 term; "
                            f"for this c1 = -1 input the gate fails by {gate} <= 3/4, "
                            "so the corrected variant would pass; the printed "
                            "form is applied"
                        )
                continue
            if tag is Theorem.NONSTABLE_LINEAR:
                linear_certs = certs
                if not certs:
                    if D.delta < 0:
                        notes.append(
                            "T4_3: lower bounds nonpositive for delta < 0; suppressed"
                        )
                    elif D.w0 > -B.alpha - B.c1 - 1:
                        notes.append(
                            "T4_3: empty twist range (needs 2*alpha <= -(epsilon+3+c1))"
                        )
            if tag is Theorem.NONSTABLE_QUADRATIC and X.epsilon <= 0:
                branch = (
                    "epsilon <= -2: correction term nonpositive for every integer alpha <= 0"
                    if X.epsilon <= -2
                    else "epsilon = -1: correction term bounded via tau > 0"
                    if X.epsilon == -1
                    else "epsilon = 0: correction term bounded via tau > -2d"
                )
                notes.append(f"T4_5 applicability at {branch}")
            raw.extend(certs)

    # Vanishing guard.  The nonstable ranges place n - alpha strictly
    # above epsilon, so in KODAIRA_C4 mode the guard is provably satisfied
    # for every emitted twist; it is still evaluated and asserted.
    guarded: list[NonvanishingCertificate] = []
    for cert in raw:
        if cert.theorem in _NONSTABLE_TAGS:
            ok = guard(X, B, cert.n)
            assert ok, f"vanishing guard unexpectedly failed at n = {cert.n}"
            guarded.append(
                cert if cert.guard_ok == ok
                else NonvanishingCertificate(cert.theorem, cert.n, cert.lower_bound, ok)
            )
        else:
            guarded.append(cert)
    if (
        X.vanishing_mode is VanishingMode.KODAIRA_C4
        and X.epsilon >= 0
        and any(c.theorem in _NONSTABLE_TAGS for c in guarded)
    ):
        notes.append(
            "vanishing guard n - alpha not in {0..epsilon} automatically "
            "satisfied by every emitted nonstable twist"
        )

    if config.cross_check and B.alpha <= 0 and -B.alpha - B.c1 - 1 >= D.zeta0:
        _cross_check(X, B, D, linear_certs)

    # Deduplicate per twist, keeping the best bound.  Ties go to the
    # earlier theorem in declaration order; losers are recorded.
    by_n: dict[int, list[NonvanishingCertificate]] = {}
    for cert in guarded:
        by_n.setdefault(cert.n, []).append(cert)
    merged = []
    for n in sorted(by_n):
        group = sorted(
            by_n[n], key=lambda c: (-c.lower_bound, _THEOREM_ORDER[c.theorem])
        )
        winner = group[0]
        merged.append(
            NonvanishingCertificate(
                theorem=winner.theorem,
                n=winner.n,
                lower_bound=winner.lower_bound,
                guard_ok=winner.guard_ok,
                supporting=tuple(c.theorem for c in group[1:]),
            )
        )

    if X.picard_mode is PicardMode.NUM_Z:
        notes.append(
            "eta-degree mode: twist indices are eta-degrees; each "
            "certificate applies to every line bundle of that eta-degree"
        )
        if split_precondition_numeric(X, B):
            notes.append(
                "numeric split precondition 2*alpha <= -epsilon-3-c1 holds: "
                "the splitting criterion applies whenever its cohomological "
                "hypotheses hold (not checkable from invariants)"
            )

    chi_table = None
    if config.chi_window is not None:
        lo, hi = config.chi_window
        chi_table = tuple((n, chi_O(X, n), chi_E(X, D, n)) for n in range(lo, hi + 1))

    return AnalysisReport(
        threefold=X,
        bundle=B,
        label=config.label,
        validation=validation,
        derived=D,
        regime=reg,
        split=split,
        certificates=tuple(merged),
        acm_obstructions=tuple(acm_obstructions(X, B, D)),
        notes=tuple(notes),
        chi_table=chi_table,
    )
