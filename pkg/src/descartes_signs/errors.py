"""Exception hierarchy shared by all modules."""


class PreconditionError(ValueError):
    """An operation was called outside its domain."""


class ScalarError(PreconditionError):
    pass


class PolynomialError(PreconditionError):
    pass


class CaseError(PreconditionError):
    """A sign pattern that no table row accepts (inconsistent or unnormalized input)."""


class UnresolvedIntervalError(RuntimeError):
    """Bisection hit its depth limit without certifying an interval."""


class CounterexampleError(AssertionError):
    """A verified property failed.  ``report`` is a replayable text witness."""

    def __init__(self, message: str, report: str = ""):
        super().__init__(message)
        self.message = message
        self.report = report

    def __str__(self):
        if self.report:
            return f"{self.message}\n{self.report}"
        return self.message
