"""Error taxonomy shared by every module.

All failures raised by this package derive from PolymaassError, so callers
can catch one base class. Numeric overflow reuses the builtin OverflowError.
"""


class PolymaassError(Exception):
    """Base class for all errors raised by polymaass."""


class PoleError(PolymaassError):
    """Evaluation requested exactly at a pole of the function."""


class DomainError(PolymaassError):
    """Arguments outside the mathematical or numerical domain of validity."""


class AccuracyError(PolymaassError):
    """An internal convergence check failed to reach the requested tolerance."""


class TailError(PolymaassError):
    """A truncation tail bound exceeds the requested tolerance at the given radius."""


class DegenerateParameter(PolymaassError):
    """A parameter hit a degenerate value for which the chosen formula is invalid."""


class ZeroArgument(PolymaassError):
    """An argument that must be nonzero was zero."""
