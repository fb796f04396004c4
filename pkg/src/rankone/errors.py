"""Exception types shared across the package."""


class RankOneError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class NonSplittingFactor(RankOneError):
    """A polynomial has an irreducible factor of degree >= 2 over Q(i)."""


class NotInGSigma(RankOneError):
    """Element is not of the form r/sigma(r)."""


class MismatchedShift(RankOneError):
    """Operands live over different shift automorphisms."""


class WindowTooSmall(RankOneError):
    """Closure oracle did not stabilise within the allotted sweeps."""


class NonScalarAction(RankOneError):
    """An element expected to act by a scalar did not."""


class StripViolation(RankOneError, ValueError):
    """Parameter root lies outside the required cross-section strip."""
