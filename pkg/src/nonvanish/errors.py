"""Exception hierarchy shared across the package.

Every error raised by library code derives from NonvanishError so callers
can catch one type at the boundary.  The CLI maps subclasses onto process
exit codes; nothing else should inspect these classes structurally.
"""

from __future__ import annotations


class NonvanishError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionViolatedError(NonvanishError):
    """An operation was invoked outside its stated hypotheses."""


class NotApplicableError(NonvanishError):
    """A certificate engine cannot run on the given invariants at all.

    Distinct from PreconditionViolatedError: NOT_APPLICABLE means the
    engine's subject matter is absent (e.g. a degenerate discriminant),
    not that the caller passed bad data.
    """


class NonIntegerResultError(NonvanishError):
    """A quantity that must be an integer came out fractional.

    Euler characteristics of coherent sheaves are integers; if the
    rational-arithmetic layer produces a non-integer the input data is
    not the invariant set of an actual variety/bundle pair.  We refuse
    to round.
    """


class ValidationFailedError(NonvanishError):
    """Strict-mode rejection of a characteristic triple."""

    def __init__(self, message: str, failed_rules: tuple[str, ...] = ()):
        super().__init__(message)
        self.failed_rules = failed_rules


class ParseError(NonvanishError):
    """An input file could not be parsed.

    line is 1-based when known, 0 when the error is not tied to a line.
    """

    def __init__(self, message: str, line: int = 0):
        super().__init__(message)
        self.line = line


class WindowExceededError(NonvanishError):
    """A pull-back aggregation asked for twists outside the supplied table."""


class GridTooLargeError(NonvanishError):
    """A sweep grid exceeds the configured cell cap."""
