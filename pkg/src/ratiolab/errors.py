"""Exception hierarchy.

UndefinedRatioError groups the input classes for which the ratio vector is
not defined at all (the CLI maps these to exit code 2); the remaining errors
signal misuse of a specific operation.
"""

__all__ = [
    "RatioLabError",
    "UndefinedRatioError",
    "RootsNotDistinctError",
    "RootRealPartsEqualError",
    "CriticalRealPartsEqualError",
    "ScaleGuardError",
    "NotAdmissibleError",
    "OutsideDomainError",
    "BadParameterError",
    "BadRangeError",
    "DegenerateTriangleError",
    "NotHyperbolicError",
    "ConstraintViolatedError",
]


class RatioLabError(Exception):
    """Base class for all library errors."""


class UndefinedRatioError(RatioLabError, ValueError):
    """The ratio vector is not defined for this root configuration."""


class RootsNotDistinctError(UndefinedRatioError):
    """Two roots coincide (within the equality tolerance)."""


class RootRealPartsEqualError(UndefinedRatioError):
    """Two roots share a real part, so the ordering is ambiguous."""


class CriticalRealPartsEqualError(UndefinedRatioError):
    """Distinct critical points share a real part."""


class ScaleGuardError(UndefinedRatioError):
    """Input magnitudes or separations are outside the supported range."""


class NotAdmissibleError(RatioLabError, ValueError):
    """The normalized pair fails the admissibility conditions."""


class OutsideDomainError(RatioLabError, ValueError):
    """Closed-form evaluation requested on or too near the excluded rays."""


class BadParameterError(RatioLabError, ValueError):
    """A scalar parameter is outside its allowed domain."""


class BadRangeError(RatioLabError, ValueError):
    """A scan range or resolution is invalid."""


class DegenerateTriangleError(RatioLabError, ValueError):
    """The three points are (numerically) collinear; no inellipse exists."""


class NotHyperbolicError(RatioLabError, ValueError):
    """Operation requires all roots real and distinct."""


class ConstraintViolatedError(RatioLabError, ValueError):
    """A family parameter violates the constraints of that family."""
