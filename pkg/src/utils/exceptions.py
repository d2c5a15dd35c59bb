"""Custom exceptions for the lab."""


class LabException(Exception):
    """Base exception for all lab errors."""

    exit_code = 1

    def __init__(self, message: str, details: dict = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class UsageError(LabException):
    """Raised for unknown commands, families or malformed arguments."""
    exit_code = 64


class DomainError(LabException):
    """Raised when an operation is called outside its domain."""
    pass


class FamilyError(DomainError):
    """Raised when an operation is applied to a graph of the wrong family."""
    pass


class PreconditionError(DomainError):
    """Raised when inputs violate a documented precondition."""
    pass


class VertexRangeError(DomainError):
    """Raised for vertex ids outside the graph."""
    pass


class ContractError(DomainError):
    """Raised for partial or out-of-range vertex assignments."""
    pass


class InvariantViolation(LabException):
    """Raised when a structural fact that must hold is observed to fail."""
    pass


class SizeLimitError(LabException):
    """Raised when a graph would exceed the generation cap."""
    exit_code = 2


class BudgetError(LabException):
    """Raised when a computation budget cannot cover the requested work."""
    exit_code = 2


class EnumerationError(LabException):
    """Raised when cycle enumeration exceeds its cap."""
    exit_code = 2
