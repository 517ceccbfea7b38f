"""
Small dense linear algebra on row-major matrices of Python reals.

Exact matrices (int / Fraction entries) are handled exactly: cofactor
expansion for small orders, sympy elimination beyond. Float matrices go
through numpy (LU with partial pivoting).
"""
import logging
from typing import Sequence

import numpy as np
import sympy

from config import get_limit, get_tolerance
from shared.errors import DegenerateMetricError, ShapeError
from shared.numeric import Real, coerce_real, is_exact, normalize_exact

logger = logging.getLogger(__name__)

Matrix = tuple[tuple[Real, ...], ...]


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    """Coerce a nested sequence (or numpy array) to a tuple-of-tuples matrix."""
    return tuple(tuple(coerce_real(x) for x in row) for row in rows)


def is_exact_matrix(rows: Sequence[Sequence]) -> bool:
    return all(is_exact(x) for row in rows for x in row)


def as_float_array(rows: Sequence[Sequence]) -> np.ndarray:
    return np.array([[float(x) for x in row] for row in rows], dtype=float).reshape(len(rows), -1)


def _to_sympy_matrix(rows: Sequence[Sequence]) -> sympy.Matrix:
    def convert(x):
        x = coerce_real(x)
        if isinstance(x, int):
            return sympy.Integer(x)
        return sympy.Rational(x.numerator, x.denominator)

    return sympy.Matrix([[convert(x) for x in row] for row in rows])


def _require_square(rows: Sequence[Sequence]) -> int:
    size = len(rows)
    if any(len(row) != size for row in rows):
        raise ShapeError(f"Expected a square matrix, got {size} rows of lengths {[len(r) for r in rows]}")
    return size


def _cofactor_det(rows: Sequence[Sequence]) -> Real:
    size = len(rows)
    if size == 0:
        return 1
    if size == 1:
        return rows[0][0]
    if size == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for col in range(size):
        entry = rows[0][col]
        if entry == 0:
            continue
        minor = [row[:col] + row[col + 1:] for row in rows[1:]]
        sign = -1 if col % 2 else 1
        total += sign * entry * _cofactor_det(minor)
    return total


def determinant(rows: Sequence[Sequence]) -> Real:
    """
    Determinant of a square matrix of reals.

    Orders up to the cofactor limit use direct cofactor expansion (exact for
    exact entries); larger orders use sympy for exact entries and numpy LU
    otherwise.
    """
    size = _require_square(rows)
    if size <= get_limit("cofactor_max_order"):
        return normalize_exact(_cofactor_det([tuple(r) for r in rows]))
    if is_exact_matrix(rows):
        return coerce_real(_to_sympy_matrix(rows).det())
    return float(np.linalg.det(as_float_array(rows)))


def degeneracy_ratio(rows: Sequence[Sequence]) -> float:
    """
    |det| divided by the product of row norms (0 = singular, 1 = orthogonal rows).
    """
    array = as_float_array(rows)
    norms = np.linalg.norm(array, axis=1)
    if np.any(norms == 0):
        return 0.0
    return float(abs(np.linalg.det(array)) / np.prod(norms))


def invert(rows: Sequence[Sequence]) -> Matrix:
    """
    Inverse of a non-degenerate square matrix.

    Raises:
        DegenerateMetricError: If the matrix is singular or numerically so
    """
    size = _require_square(rows)
    if is_exact_matrix(rows):
        if determinant(rows) == 0:
            raise DegenerateMetricError("Matrix is singular (determinant 0)")
        inverse = _to_sympy_matrix(rows).inv()
        return tuple(tuple(coerce_real(inverse[i, j]) for j in range(size)) for i in range(size))
    ratio = degeneracy_ratio(rows)
    if ratio < get_tolerance("degeneracy"):
        raise DegenerateMetricError(f"Matrix is numerically singular (relative determinant {ratio:.3e})")
    if ratio < 1e-6:
        logger.warning("Inverting a nearly degenerate %dx%d matrix (relative determinant %.3e)", size, size, ratio)
    inverse = np.linalg.inv(as_float_array(rows))
    return as_matrix(inverse)


def matmul(left: Sequence[Sequence], right: Sequence[Sequence]) -> Matrix:
    inner = len(right)
    cols = len(right[0]) if inner else 0
    return tuple(
        tuple(normalize_exact(sum((row[k] * right[k][j] for k in range(inner)), 0)) for j in range(cols))
        for row in left
    )


def transpose(rows: Sequence[Sequence]) -> Matrix:
    return tuple(zip(*rows)) if rows else ()


def identity(size: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(size)) for i in range(size))


def is_positive_definite(rows: Sequence[Sequence]) -> bool:
    """Cholesky attempt on the float image of a symmetric matrix."""
    try:
        np.linalg.cholesky(as_float_array(rows))
    except np.linalg.LinAlgError:
        return False
    return True
