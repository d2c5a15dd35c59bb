"""Utility functions and helpers."""

from .logger import setup_logger
from .exceptions import (
    LabException,
    UsageError,
    DomainError,
    FamilyError,
    PreconditionError,
    VertexRangeError,
    ContractError,
    InvariantViolation,
    SizeLimitError,
    BudgetError,
    EnumerationError,
)
from .exact import INFINITE, Infinite, ExactValue, exact_ratio, format_exact

__all__ = [
    "setup_logger",
    "LabException",
    "UsageError",
    "DomainError",
    "FamilyError",
    "PreconditionError",
    "VertexRangeError",
    "ContractError",
    "InvariantViolation",
    "SizeLimitError",
    "BudgetError",
    "EnumerationError",
    "INFINITE",
    "Infinite",
    "ExactValue",
    "exact_ratio",
    "format_exact",
]
