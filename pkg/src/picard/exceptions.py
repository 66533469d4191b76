"""Exception types raised across the package."""


class ZeroInverse(ZeroDivisionError):
    pass


class ZeroDenominator(ZeroDivisionError):
    pass


class ZeroInput(ZeroDivisionError):
    pass


class ZeroD(ZeroDivisionError):
    pass


class NotRealQuadratic(ValueError):
    pass


class NonIntegralD(ValueError):
    pass


class InvalidK(ValueError):
    pass


class NotAmbiguousInput(ValueError):
    pass


class PropositionViolation(AssertionError):
    """A C-triangle did not contain exactly one ambiguous image besides the input."""


class ClosureViolation(AssertionError):
    """A generator image of an enumerated ambiguous number left the enumerated set."""


class LimitExceeded(RuntimeError):
    pass
