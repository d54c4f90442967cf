"""Exception hierarchy for tailprob.

Contains:
- TailProbError: Base class for all library errors
- DomainError: Argument outside an operation's domain
- InvariantViolationError: A structural invariant failed at a given index
"""


class TailProbError(Exception):
    """Base class for tailprob errors."""

    pass


class DomainError(TailProbError, ValueError):
    """Raised when an argument is outside the operation's domain."""

    pass


class InvariantViolationError(TailProbError):
    """Raised when a sequence invariant fails.

    The offending position is kept in ``index`` so callers can report it.
    """

    def __init__(self, message: str, index: int) -> None:
        super().__init__(message)
        self.index = index
