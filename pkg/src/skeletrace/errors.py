"""Exception types shared across the package."""

from __future__ import annotations


class SkeletraceError(Exception):
    """Base class for all package-specific errors."""


class FormatError(SkeletraceError):
    """The input format is unsupported or could not be determined."""


class DecodeError(SkeletraceError):
    """The input bytes are malformed for the declared format.

    Carries the byte (or line) offset at which decoding failed.
    """

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class DegenerateHistogramError(SkeletraceError):
    """Automatic thresholding found no class separation (constant image)."""


class InvalidNodeError(SkeletraceError):
    """A graph operation referenced a dead or out-of-range node."""


class InvalidReferenceError(SkeletraceError):
    """A graph mutation referenced an edge or node that does not exist."""


class ContractViolationError(SkeletraceError):
    """An upstream stage handed this stage data violating its precondition."""


class InternalInvariantError(SkeletraceError):
    """An internal consistency check failed; indicates a bug, not bad input."""
