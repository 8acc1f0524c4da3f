"""Exception types shared across the package."""


class JackMomentsError(Exception):
    """Base class for all errors raised by jackmoments."""


class ParameterError(JackMomentsError, ValueError):
    """A parameter hits a pole, a zero denominator or an invalid combination."""


class DomainError(JackMomentsError, ValueError):
    """The requested quantity is not defined (e.g. a divergent moment)."""


class SeriesConvergenceError(JackMomentsError, ArithmeticError):
    """A non-terminating series failed to settle within the weight budget."""

    def __init__(self, message, *, truncation_weight=None, last_block=None):
        super().__init__(message)
        self.truncation_weight = truncation_weight
        self.last_block = last_block
