"""Exception hierarchy shared by every lerchkit module."""


class LerchkitError(Exception):
    """Base class for all lerchkit errors."""


class DomainError(LerchkitError, ValueError):
    """Arguments outside the supported domain (including NaN input)."""


class PoleError(DomainError):
    """Evaluation requested at a pole."""


class DivergenceError(DomainError):
    """The requested value has no finite continuation (e.g. z = 1, Re s <= 1)."""


class NoConvergenceError(LerchkitError, ArithmeticError):
    """An iterative method failed to meet its tolerance.

    Carries the best estimate reached so callers can inspect it.
    """

    def __init__(self, message, best=None, err_estimate=None, strategy=None):
        super().__init__(message)
        self.best = best
        self.err_estimate = err_estimate
        self.strategy = strategy
