"""Exception hierarchy for hankel_lab."""


class HankelLabError(ValueError):
    pass


class NonUnitConstantTerm(HankelLabError):
    pass


class TruncationError(HankelLabError):
    """A series is not known to the order an operation asked for."""


class NoConvergence(HankelLabError):
    pass


class InvalidPower(HankelLabError):
    pass


class InsufficientTerms(HankelLabError):
    pass


class InvalidPowerSeq(HankelLabError):
    pass


class InvalidPattern(HankelLabError):
    pass


class NotRepresentable(HankelLabError):
    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"pattern is not representable at n={index}")


class UnknownName(HankelLabError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)


class ZeroConstantTerm(HankelLabError):
    pass


class InternalExactnessViolation(AssertionError):
    """An exact division left a remainder. Always a bug, never bad input."""


class InexactDivision(AssertionError):
    pass
