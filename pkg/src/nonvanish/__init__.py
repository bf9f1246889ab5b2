"""Exact non-vanishing certificates for twisted rank-2 bundles on
polarized threefolds with cyclic Picard group.

All arithmetic is exact: rationals, quadratic surds compared by sign
analysis, and cubics bracketed by bisection.  Nothing is ever rounded;
results that must be integers are checked, not coerced.
"""

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
from .errors import (
    GridTooLargeError,
    NonIntegerResultError,
    NonvanishError,
    NotApplicableError,
    ParseError,
    PreconditionViolatedError,
    ValidationFailedError,
    WindowExceededError,
)
from .exactnum import (
    Cubic,
    Ordering,
    Rational,
    Surd,
    cubic_sign,
    cubic_unique_root_bracket,
    floor_surd,
    rat,
    rat_str,
    sqrt_exact,
    surd_cmp,
)
from .inputs import InputDoc, PullbackInput, SweepInput, load_input, parse_input
from .nonvanishing import (
    AcmKind,
    AcmObstruction,
    AnalysisReport,
    AnalyzeConfig,
    NonvanishingCertificate,
    Theorem,
    acm_obstructions,
    analyze,
    guard,
    h1_h2_difference,
    h1_h2_difference_via_chi,
    split_precondition_numeric,
    thm_nonstable_basic,
    thm_nonstable_cubic,
    thm_nonstable_quadratic,
    thm_stable_range,
    thm_stable_theta,
)
from .pullback import P3BundleData, aggregate_h1, pullback_invariants
from .reporting import (
    SCHEMA_VERSION,
    report_from_dict,
    report_to_dict,
    report_to_json,
    report_to_text,
)
from .sweep import DEFAULT_CAP, SweepSpec, grid_size, run_sweep, summarize, write_csv
from .threefold import (
    NEGATIVE_EPSILON_PAIRS,
    PicardMode,
    Threefold,
    ValidationReport,
    VanishingMode,
    chi_O,
    chi_O_rational,
    hypersurface,
    lam,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "AcmKind",
    "AcmObstruction",
    "AnalysisReport",
    "AnalyzeConfig",
    "BundleInvariants",
    "Cubic",
    "DEFAULT_CAP",
    "DerivedInvariants",
    "GridTooLargeError",
    "InputDoc",
    "NEGATIVE_EPSILON_PAIRS",
    "NonIntegerResultError",
    "NonvanishError",
    "NonvanishingCertificate",
    "NotApplicableError",
    "Ordering",
    "P3BundleData",
    "ParseError",
    "PicardMode",
    "PreconditionViolatedError",
    "PullbackInput",
    "Rational",
    "Regime",
    "SCHEMA_VERSION",
    "Surd",
    "SweepInput",
    "SweepSpec",
    "Theorem",
    "Threefold",
    "ValidationFailedError",
    "ValidationReport",
    "VanishingMode",
    "WindowExceededError",
    "acm_obstructions",
    "aggregate_h1",
    "analyze",
    "chi_E",
    "chi_E_rational",
    "chi_O",
    "chi_O_rational",
    "cubic_sign",
    "cubic_unique_root_bracket",
    "derive",
    "floor_surd",
    "grid_size",
    "guard",
    "h1_h2_difference",
    "h1_h2_difference_via_chi",
    "hypersurface",
    "is_split_numeric",
    "lam",
    "load_input",
    "parse_input",
    "pullback_invariants",
    "rat",
    "rat_str",
    "regime",
    "report_from_dict",
    "report_to_dict",
    "report_to_json",
    "report_to_text",
    "run_sweep",
    "split_precondition_numeric",
    "sqrt_exact",
    "summarize",
    "surd_cmp",
    "thm_nonstable_basic",
    "thm_nonstable_cubic",
    "thm_nonstable_quadratic",
    "thm_stable_range",
    "thm_stable_theta",
    "validate",
    "write_csv",
]
