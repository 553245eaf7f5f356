"""Exception types shared across the package."""


class SymbalgError(Exception):
    """Base class for package errors."""


class UnsupportedFieldError(SymbalgError):
    """Operation is not defined for this field construction."""


class FieldMismatchError(SymbalgError):
    """Operands belong to different fields or hosts."""


class PreconditionError(SymbalgError):
    """A documented precondition of an operation was violated."""


class BudgetExhaustedError(SymbalgError):
    """A bounded search ran out of budget without deciding."""


class HypothesisGateError(SymbalgError):
    """The field does not declare a hypothesis (d, u, or I3q=0) the operation needs."""


class ParseError(SymbalgError):
    """Input text failed to parse; carries position information."""

    def __init__(self, message, pos=None):
        super().__init__(message if pos is None else f"{message} (at column {pos + 1})")
        self.pos = pos
