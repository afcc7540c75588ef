"""Exception hierarchy shared by every module."""


class CritPairsError(Exception):
    """Base class for all library errors."""


class InvalidGroupError(CritPairsError, ValueError):
    pass


class DomainError(CritPairsError, ValueError):
    """An element or subset does not belong to the group it is used with."""


class PreconditionError(CritPairsError, ValueError):
    pass


class BudgetExceededError(CritPairsError, RuntimeError):
    pass


class ParseError(CritPairsError, ValueError):
    pass


class InternalContradictionError(CritPairsError, RuntimeError):
    """A search that a theorem guarantees to succeed came back empty.

    Raising this always indicates a bug in this package, never bad input.
    """
