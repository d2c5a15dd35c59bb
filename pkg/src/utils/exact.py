"""
Exact values for metric data.

Distances and ratios are ``fractions.Fraction``; an unbounded distortion is
the ``INFINITE`` singleton, which compares above every finite value.
"""

from fractions import Fraction
from functools import total_ordering
from typing import Union


@total_ordering
class Infinite:
    """Positive infinity for exact comparisons."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other) -> bool:
        return isinstance(other, Infinite)

    def __lt__(self, other) -> bool:
        return False

    def __gt__(self, other) -> bool:
        return not isinstance(other, Infinite)

    def __hash__(self) -> int:
        return hash("INFINITE")

    def __mul__(self, other) -> "Infinite":
        return self

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return "INFINITE"


INFINITE = Infinite()

ExactValue = Union[Fraction, Infinite]


def exact_ratio(numerator: int, denominator: int) -> ExactValue:
    """Ratio of two nonnegative integers, INFINITE when the denominator is 0."""
    if denominator == 0:
        return INFINITE
    return Fraction(numerator, denominator)


def parse_exact(text: str) -> Fraction:
    """Parse "3", "1/4" or "0.25" into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"Not an exact number: {text!r}")


def format_exact(value: ExactValue) -> str:
    """Render an exact value as "n", "n/d" or "INFINITE"."""
    if isinstance(value, Infinite):
        return "INFINITE"
    return str(value)
