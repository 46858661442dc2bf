"""Shared exception types."""


class TrivialCaseError(ValueError):
    """Raised when p = 2 is requested; only odd characteristic is supported."""


class ContradictionError(RuntimeError):
    """A computation contradicts a proved statement.

    Raised when an exact check that must succeed for every valid input fails
    (e.g. a transformation unit that is not a root of unity, or a flat
    sequence with no power-map identification).  Signals an internal bug,
    never a property of the input.
    """
