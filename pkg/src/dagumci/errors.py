"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the function."""


class ConvergenceError(RuntimeError):
    """An iterative procedure stopped without meeting its tolerance.

    ``best`` carries the best point found so far, when there is one.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class BracketError(ConvergenceError):
    """No sign change was found over the scanned range."""

    def __init__(self, message, scanned=None):
        super().__init__(message)
        self.scanned = scanned
