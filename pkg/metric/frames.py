"""
Arbitrary frames: reciprocal frames and change of basis.
"""
import logging
from typing import Sequence

from exterior import outermorphism_matrix
from graded_core import Multivector, linear_combination
from shared.errors import ShapeError
from shared.linalg import Matrix, as_matrix, invert, matmul, transpose
from .algebra import Algebra
from .models import MetricTensor
from .scalar import check_dims, make_algebra, require_grade, scalar_product

logger = logging.getLogger(__name__)


def reciprocal_frame(A: Algebra, frame: Sequence[Multivector]) -> tuple[Multivector, ...]:
    """
    Reciprocal vectors f^a of a frame f_1..f_n, with f^a . f_b = delta^a_b.

    f^a = sum_b (M^{-1})_{ab} f_b where M_ab = f_a . f_b.

    Raises:
        ShapeError: If the frame does not have n vectors
        DegenerateMetricError: If the frame is linearly dependent
    """
    if len(frame) != A.dim:
        raise ShapeError(f"Frame needs {A.dim} vectors, got {len(frame)}")
    for f in frame:
        check_dims(A, f)
        require_grade(f, 1)
    gram = [[scalar_product(A, f, g) for g in frame] for f in frame]
    inv = invert(gram)
    return tuple(
        linear_combination(A.dim, [(inv[a][b], frame[b]) for b in range(A.dim)])
        for a in range(A.dim)
    )


def frame_vectors(S: Sequence[Sequence]) -> tuple[Multivector, ...]:
    """The columns of S as vectors: f_j = sum_i S_ij e_i."""
    n = len(S)
    return tuple(Multivector(n, {(i + 1,): S[i][j] for i in range(n)}) for j in range(n))


def _check_square(S: Sequence[Sequence], dim: int) -> Matrix:
    rows = as_matrix(S)
    if len(rows) != dim or any(len(row) != dim for row in rows):
        raise ShapeError(f"Expected a {dim}x{dim} basis matrix")
    return rows


def change_basis(A: Algebra, S: Sequence[Sequence]) -> Algebra:
    """
    Algebra of the same metric expressed in the basis f_j = sum_i S_ij e_i.

    The new metric is S^T G S.

    Raises:
        DegenerateMetricError: If S is singular
    """
    rows = _check_square(S, A.dim)
    invert(rows)
    G = matmul(matmul(transpose(rows), A.metric.matrix), rows)
    logger.debug("Changed basis of dim-%d algebra", A.dim)
    return make_algebra(MetricTensor.from_matrix(G))


def to_frame(S: Sequence[Sequence], X: Multivector) -> Multivector:
    """Components of X in the basis given by the columns of S (outermorphism of S^-1)."""
    rows = _check_square(S, X.dim)
    return outermorphism_matrix(invert(rows), X)


def from_frame(S: Sequence[Sequence], X: Multivector) -> Multivector:
    """Standard-basis components of X given in the basis of S's columns."""
    return outermorphism_matrix(_check_square(S, X.dim), X)
