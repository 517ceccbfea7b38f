"""
Deformation of euclidean products into metric products through the metric
operator g and its outermorphism.
"""
import logging
from typing import Optional, Sequence, Union

import numpy as np

from config import get_tolerance
from contraction import left_contract, right_contract
from graded_core import Multivector, linear_combination
from metric import Algebra, MetricTensor, make_algebra, scalar_product
from shared.errors import (
    DimensionError,
    InvalidEuclideanStructureError,
    InvariantViolationError,
)
from shared.linalg import Matrix, as_matrix, invert, is_positive_definite, matmul
from shared.numeric import Real
from .models import LinearOperator, MetricOperator

logger = logging.getLogger(__name__)

MetricLike = Union[Algebra, MetricTensor, Sequence[Sequence[Real]]]


def _as_algebra(value: MetricLike) -> Algebra:
    return value if isinstance(value, Algebra) else make_algebra(value)


def _unit(dim: int, k: int) -> Multivector:
    return Multivector._trusted(dim, {(k,): 1})


def _column_matrix(images: Sequence[Multivector], dim: int) -> Matrix:
    return tuple(tuple(images[j].coefficient((i,)) for j in range(dim)) for i in range(1, dim + 1))


def _close(a: Real, b: Real, exact: bool) -> bool:
    if exact:
        return a == b
    return abs(a - b) <= get_tolerance("deformation_check") * max(1.0, abs(a), abs(b))


def make_metric_operator(GE: Optional[MetricLike], G: MetricLike) -> MetricOperator:
    """
    Metric operator g(v) = (v ._G e_k) e^k_E.

    Args:
        GE: Euclidean structure (positive definite); None means the identity
        G: Target metric

    Raises:
        DimensionError: If the two metrics differ in dimension
        InvalidEuclideanStructureError: If GE is not positive definite
        InvariantViolationError: If v ._G w = g(v) ._E w fails on the basis
    """
    metric = _as_algebra(G)
    euclidean = _as_algebra(MetricTensor.euclidean(metric.dim) if GE is None else GE)
    if euclidean.dim != metric.dim:
        raise DimensionError(f"Dimension mismatch: euclidean dim {euclidean.dim}, metric dim {metric.dim}")
    if not is_positive_definite(euclidean.metric.matrix):
        raise InvalidEuclideanStructureError("Euclidean structure must be positive definite")
    n = metric.dim
    images = [
        linear_combination(n, [(metric.G(j, k), euclidean.reciprocal_vector(k)) for k in range(1, n + 1)])
        for j in range(1, n + 1)
    ]
    operator = MetricOperator(matrix=_column_matrix(images, n), euclidean=euclidean, metric=metric)
    exact = euclidean.exact and metric.exact
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            deformed = scalar_product(euclidean, images[i - 1], _unit(n, j))
            if not _close(deformed, metric.G(i, j), exact):
                raise InvariantViolationError(
                    f"Metric operator check failed: g(e_{i}).e_{j} = {deformed}, expected {metric.G(i, j)}"
                )
    logger.debug("Built dim-%d metric operator", n)
    return operator


def inverse_operator(m: MetricOperator) -> LinearOperator:
    """
    g^-1(v) = G^{jk} (v ._E e_j) e_k.
    """
    n = m.dim
    images = []
    for a in range(1, n + 1):
        v = _unit(n, a)
        pairings = [scalar_product(m.euclidean, v, _unit(n, j)) for j in range(1, n + 1)]
        images.append(linear_combination(
            n,
            [(m.metric.G_inv(j, k) * pairings[j - 1], _unit(n, k)) for j in range(1, n + 1) for k in range(1, n + 1)],
        ))
    return LinearOperator(matrix=_column_matrix(images, n))


def inverse_matrix(m: MetricOperator) -> LinearOperator:
    """g^-1 by inverting the operator matrix directly."""
    return LinearOperator(matrix=invert(m.matrix))


def outermorphism(m: LinearOperator, X: Multivector) -> Multivector:
    """Outermorphism of g (or any linear operator) applied to X."""
    return m.outermorphism(X)


def deformed_scalar_product(m: MetricOperator, X: Multivector, Y: Multivector) -> Real:
    """X ._G Y computed as g(X) ._E Y."""
    return scalar_product(m.euclidean, m.outermorphism(X), Y)


def deformed_left_contract(m: MetricOperator, X: Multivector, Y: Multivector) -> Multivector:
    """X _|_G Y computed as g(X) _|_E Y."""
    return left_contract(m.euclidean, m.outermorphism(X), Y)


def deformed_right_contract(m: MetricOperator, X: Multivector, Y: Multivector) -> Multivector:
    """X |__G Y computed as X |__E g(Y)."""
    return right_contract(m.euclidean, X, m.outermorphism(Y))


def deformed_contractions(m: MetricOperator, X: Multivector, Y: Multivector) -> tuple[Multivector, Multivector]:
    """(g(X) _|_E Y, X |__E g(Y))"""
    return deformed_left_contract(m, X, Y), deformed_right_contract(m, X, Y)


def operator_from_scalar_products(GE: MetricLike, G: MetricLike) -> LinearOperator:
    """
    Recover g from its defining property alone: solve G_E^T M = G for the
    matrix M whose columns are g(e_j).
    """
    euclidean = _as_algebra(GE)
    metric = _as_algebra(G)
    if euclidean.dim != metric.dim:
        raise DimensionError(f"Dimension mismatch: euclidean dim {euclidean.dim}, metric dim {metric.dim}")
    if euclidean.exact and metric.exact:
        return LinearOperator(matrix=matmul(euclidean.inv_metric, metric.metric.matrix))
    solution = np.linalg.solve(
        np.array(euclidean.metric.matrix, dtype=float).T,
        np.array(metric.metric.matrix, dtype=float),
    )
    return LinearOperator(matrix=as_matrix(solution))


def is_adjoint_symmetric(m: MetricOperator) -> bool:
    """g(v) ._E w == v ._E g(w) on every pair of basis vectors."""
    n = m.dim
    exact = m.euclidean.exact and m.metric.exact
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            left = scalar_product(m.euclidean, m.apply(_unit(n, i)), _unit(n, j))
            right = scalar_product(m.euclidean, _unit(n, i), m.apply(_unit(n, j)))
            if not _close(left, right, exact):
                return False
    return True
