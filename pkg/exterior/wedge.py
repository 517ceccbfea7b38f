"""
Blade-level exterior product and the exterior power of a linear map.
"""
from typing import Optional, Sequence

from graded_core import Multivector, merge_sign, scalar
from shared.errors import DimensionError, ShapeError
from shared.numeric import Real, coerce_real


def wedge(X: Multivector, Y: Multivector) -> Multivector:
    """
    Exterior product X ^ Y.

    Bilinear extension of e_I ^ e_J = 0 when I and J share an index, else
    sign(merge) e_{sort(I u J)}. Results accumulate before pruning so that
    cancellations such as (e1 + e2) ^ (e1 + e2) give the canonical zero.

    Raises:
        DimensionError: If dims differ
    """
    if X.dim != Y.dim:
        raise DimensionError(f"Dimension mismatch: {X.dim} vs {Y.dim}")
    acc: dict = {}
    for left, a in X.terms.items():
        for right, b in Y.terms.items():
            sign, blade = merge_sign(left, right)
            if not sign:
                continue
            acc[blade] = acc.get(blade, 0) + sign * a * b
    return Multivector._trusted(X.dim, acc)


def wedge_all(*factors: Multivector, dim: Optional[int] = None) -> Multivector:
    """
    Left fold of wedge over the factors.

    The empty product is the scalar 1, which needs dim.
    """
    if not factors:
        if dim is None:
            raise DimensionError("wedge_all() of no factors needs dim")
        return scalar(dim, 1)
    result = factors[0]
    for factor in factors[1:]:
        result = wedge(result, factor)
    return result


def _column_vector(matrix: Sequence[Sequence[Real]], column: int, dim: int) -> Multivector:
    return Multivector._trusted(dim, {(row + 1,): coerce_real(matrix[row][column]) for row in range(dim)})


def outermorphism_matrix(matrix: Sequence[Sequence[Real]], X: Multivector) -> Multivector:
    """
    Apply the exterior power of a linear map to X.

    Args:
        matrix: n x n matrix of the map; column j holds the image of e_j
        X: Multivector of dim n

    Returns:
        The multivector with scalars fixed and each blade e_{i1}^...^e_{ik}
        sent to f(e_{i1})^...^f(e_{ik}), extended linearly
    """
    dim = X.dim
    if len(matrix) != dim or any(len(row) != dim for row in matrix):
        raise ShapeError(f"Expected a {dim}x{dim} matrix")
    images = [_column_vector(matrix, j, dim) for j in range(dim)]
    acc: dict = {}
    for blade, coeff in X.terms.items():
        image = wedge_all(*(images[i - 1] for i in blade), dim=dim)
        for target, value in image.terms.items():
            acc[target] = acc.get(target, 0) + coeff * value
    return Multivector._trusted(dim, acc)
