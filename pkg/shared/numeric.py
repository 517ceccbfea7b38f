"""
Coefficient handling shared by all modules.

Coefficients are plain Python reals: int and Fraction are exact, float is
approximate. Exact values stay exact through every operation here.
"""
import numbers
from fractions import Fraction
from typing import Union

import numpy as np

from config import get_tolerance

Real = Union[int, float, Fraction]


def coerce_real(value) -> Real:
    """
    Convert a numeric input to int, Fraction or float.

    Args:
        value: Python or numpy number (sympy rationals are accepted too)

    Returns:
        Normalized real coefficient

    Raises:
        TypeError: If value is not a real number
    """
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, float):
        return value
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, numbers.Rational):
        return normalize_exact(Fraction(int(value.numerator), int(value.denominator)))
    # sympy numbers expose is_Rational / p / q rather than numbers.Rational
    if getattr(value, "is_Rational", False):
        return normalize_exact(Fraction(int(value.p), int(value.q)))
    if isinstance(value, numbers.Real):
        return float(value)
    raise TypeError(f"Expected a real coefficient, got {type(value).__name__}")


def is_exact(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def normalize_exact(value: Real) -> Real:
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def is_negligible(value: Real, epsilon: float | None = None) -> bool:
    """
    Whether a coefficient counts as zero.

    Exact values are zero only when they equal 0; floats are compared against
    the prune epsilon.
    """
    if is_exact(value):
        return value == 0
    if epsilon is None:
        epsilon = get_tolerance("prune_epsilon")
    return abs(value) <= epsilon


def divide(value: Real, divisor: int) -> Real:
    """Divide by an integer, keeping exact inputs exact."""
    if is_exact(value):
        return normalize_exact(Fraction(value) / divisor)
    return value / divisor
