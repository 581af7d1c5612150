"""
Exception hierarchy shared by every leibniz_lab module.

Computation-level failures derive from LeibnizError so callers (the CLI in
particular) can map them to a single exit status.
"""

from typing import Any, Dict, Optional


class LeibnizError(Exception):
    """Base class for computation errors."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class ParseError(LeibnizError):
    """Malformed rational, algebra name or JSON document."""


class BadParams(LeibnizError):
    """Dimension or family parameters outside the stated range."""


class BadInverse(LeibnizError):
    """A supplied inverse does not multiply to the identity."""


class NotLeibniz(LeibnizError):
    """A tensor fails the Leibniz identity where one is required."""


class NoLimit(LeibnizError):
    def __init__(self, i: int, j: int, k: int, exponent: int):
        super().__init__(
            f"no limit at entry ({i + 1},{j + 1},{k + 1}): t^{exponent} survives",
            {"i": i, "j": j, "k": k, "exponent": exponent},
        )
        self.i, self.j, self.k = i, j, k
        self.exponent = exponent


class LimitNotLeibniz(LeibnizError):
    """The t -> 0 limit exists but is not a Leibniz bracket."""


class TargetMismatch(LeibnizError):
    def __init__(self, i: int, j: int, k: int, got: Any, expected: Any):
        super().__init__(
            f"limit differs from target at ({i + 1},{j + 1},{k + 1}): "
            f"got {got}, expected {expected}",
            {"i": i, "j": j, "k": k, "got": str(got), "expected": str(expected)},
        )
        self.i, self.j, self.k = i, j, k


class InclusionViolated(LeibnizError):
    """A computed coboundary failed the cocycle equations."""


class NotCocycle(LeibnizError):
    """A supplied representative fails the cocycle equations."""


class Undefined(LeibnizError):
    """No named representative exists for these parameters."""


class DimensionMismatch(LeibnizError):
    """Two algebras or matrices of incompatible sizes."""


class PreconditionError(LeibnizError):
    """An operation was called outside its precondition."""


class BadNilradical(LeibnizError):
    """A declared nilradical is not a nilpotent two-sided ideal."""


class InconsistentDegeneration(LeibnizError):
    """A verified degeneration that its necessary-condition report rules out."""
