"""
Algebra construction and the scalar product of multivectors.
"""
import logging
from typing import Sequence, Union

from config import get_tolerance
from graded_core import (
    BladeIndex,
    Multivector,
    iter_blades,
    validate_grade,
)
from shared.errors import DimensionError, GradeError, InvariantViolationError, ShapeError
from shared.linalg import Matrix, determinant, invert
from shared.numeric import Real, normalize_exact
from .algebra import Algebra
from .models import MetricTensor

logger = logging.getLogger(__name__)

ComponentTable = dict[BladeIndex, Real]


def _check_reciprocal(G: Matrix, inv: Matrix, exact: bool) -> None:
    n = len(G)
    tol = get_tolerance("reciprocal_check")
    for k in range(n):
        for j in range(n):
            value = sum(inv[k][s] * G[s][j] for s in range(n))
            expected = 1 if j == k else 0
            bad = (value != expected) if exact else abs(value - expected) > tol
            if bad:
                raise InvariantViolationError(
                    f"Reciprocal basis check failed: e^{k + 1}.e_{j + 1} = {value}, expected {expected}"
                )


def make_algebra(g: Union[MetricTensor, Sequence[Sequence[Real]]]) -> Algebra:
    """
    Build the algebra of a metric.

    Args:
        g: MetricTensor, or a raw matrix validated through MetricTensor.from_matrix

    Returns:
        Algebra with inv_metric and reciprocal basis e^k = G^{ks} e_s

    Raises:
        InvalidMetricError: If the matrix is asymmetric or malformed
        DegenerateMetricError: If the matrix is singular
        InvariantViolationError: If e^k . e_j = delta^k_j fails after inversion
    """
    if not isinstance(g, MetricTensor):
        g = MetricTensor.from_matrix(g)
    else:
        g.validate_structure()
    n = g.dim
    exact = g.is_exact()
    inv = invert(g.matrix)
    _check_reciprocal(g.matrix, inv, exact)
    reciprocal = tuple(
        Multivector._trusted(n, {(s + 1,): inv[k][s] for s in range(n)})
        for k in range(n)
    )
    logger.debug("Built %s algebra of dimension %d", "exact" if exact else "float", n)
    return Algebra(dim=n, metric=g, inv_metric=inv, reciprocal=reciprocal, exact=exact)


def check_dims(A: Algebra, *values: Multivector) -> None:
    for X in values:
        if X.dim != A.dim:
            raise DimensionError(f"Dimension mismatch: algebra has dim {A.dim}, multivector has dim {X.dim}")


def scalar_product(A: Algebra, X: Multivector, Y: Multivector) -> Real:
    """
    Scalar product X . Y = sum_k <X>_k . <Y>_k.

    Blades pair through the Gram determinant e_I . e_J = det[G_{i_a j_b}];
    the grade-0 parts multiply as reals and different grades contribute 0.

    Raises:
        DimensionError: If dims differ
    """
    check_dims(A, X, Y)
    total = 0
    for left, a in X.terms.items():
        for right, b in Y.terms.items():
            if len(left) != len(right):
                continue
            gram = A.blade_scalar_product(left, right)
            if gram:
                total += a * b * gram
    return normalize_exact(total)


def require_grade(X: Multivector, k: int) -> None:
    validate_grade(X.dim, k)
    if not X.is_homogeneous(k):
        raise GradeError(f"Expected a pure grade-{k} multivector, got grades {X.grades().grades}")


def contravariant_components(A: Algebra, X: Multivector, k: int) -> ComponentTable:
    """
    X^{j1...jk} = X . (e^{j1} ^ ... ^ e^{jk}) for every increasing index tuple.

    Raises:
        GradeError: If X is not purely of grade k
    """
    check_dims(A, X)
    require_grade(X, k)
    return {J: scalar_product(A, X, A.reciprocal_blade(J)) for J in iter_blades(A.dim, k)}


def covariant_components(A: Algebra, X: Multivector, k: int) -> ComponentTable:
    """X_{j1...jk} = X . (e_{j1} ^ ... ^ e_{jk})."""
    check_dims(A, X)
    require_grade(X, k)
    return {
        J: normalize_exact(sum((c * A.blade_scalar_product(I, J) for I, c in X.terms.items()), 0))
        for J in iter_blades(A.dim, k)
    }


def lower_components(A: Algebra, table: ComponentTable, k: int) -> ComponentTable:
    """
    Lower a contravariant table: X_J = sum_I det[G_{j_a i_b}] X^I over increasing I.
    """
    validate_grade(A.dim, k)
    return {
        J: normalize_exact(sum((A.blade_scalar_product(J, I) * table.get(I, 0) for I in iter_blades(A.dim, k)), 0))
        for J in iter_blades(A.dim, k)
    }


def simple_scalar_product(A: Algebra, vs: Sequence[Multivector], ws: Sequence[Multivector]) -> Real:
    """
    (v1 ^ ... ^ vk) . (w1 ^ ... ^ wk) = det[v_a . w_b] from the factors.

    Raises:
        ShapeError: If the factor lists differ in length
        GradeError: If a factor is not a vector
    """
    if len(vs) != len(ws):
        raise ShapeError(f"Factor lists differ in length: {len(vs)} vs {len(ws)}")
    for v in list(vs) + list(ws):
        check_dims(A, v)
        require_grade(v, 1)
    return determinant([[scalar_product(A, v, w) for w in ws] for v in vs])


def blade_gram_matrix(A: Algebra) -> Matrix:
    """2^n x 2^n matrix of e_I . e_J over the canonical blade order."""
    blades = list(iter_blades(A.dim))
    return tuple(tuple(A.blade_scalar_product(I, J) for J in blades) for I in blades)


def expand_vector(A: Algebra, v: Multivector) -> tuple[tuple[Real, ...], tuple[Real, ...]]:
    """
    Both reciprocal expansions of a vector.

    Returns:
        (contravariant, covariant) with v = sum_k (v.e^k) e_k = sum_k (v.e_k) e^k
    """
    check_dims(A, v)
    require_grade(v, 1)
    contravariant = tuple(scalar_product(A, v, A.reciprocal_vector(k)) for k in range(1, A.dim + 1))
    covariant = tuple(
        scalar_product(A, v, Multivector._trusted(A.dim, {(k,): 1})) for k in range(1, A.dim + 1)
    )
    return contravariant, covariant
