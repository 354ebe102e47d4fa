"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """An argument is outside the domain an operation accepts."""


class PreconditionError(ValueError):
    """An operation was called on a value that does not meet its hypotheses."""


class TheoremViolation(Exception):
    """A computed object contradicts a proved statement.

    Deliberately not a ``ValueError``: callers should never swallow it as
    ordinary bad input. Seeing one means either a bug or a counterexample.
    """
