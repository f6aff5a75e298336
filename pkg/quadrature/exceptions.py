
class NumericsError(Exception):
    """Base class for every error raised by the numerical apps."""


class DomainError(NumericsError, ValueError):
    """An argument lies outside the domain where the function is defined."""


class InvalidDomain(DomainError):
    """An integration interval is empty, reversed or not finite."""


class NoSignChange(DomainError):
    """A root bracket whose endpoint values do not change sign."""


class NonConvergence(NumericsError, ArithmeticError):
    """
    An iterative method exhausted its budget before meeting its tolerance.

    :param message: Human readable description of what failed to converge.
    :param best: Best estimate reached before giving up, if any.
    :param error: Error estimate attached to ``best``, if any.
    """

    def __init__(self, message: str, best: float | None = None, error: float | None = None):
        super().__init__(message)
        self.best = best
        self.error = error
