"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside an operation's mathematical domain."""


class ResourceBudgetError(RuntimeError):
    """A computation exceeded its configured term budget.

    Carries the partial value and tail estimate accumulated so far, so
    callers can report how far the run got.
    """

    def __init__(self, message, partial=None, tail_bound=None):
        super().__init__(message)
        self.partial = partial
        self.tail_bound = tail_bound
