from typing import Any, List, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from config import get_tolerance
from graded_core import validate_dim
from shared.errors import DegenerateMetricError, InvalidMetricError
from shared.linalg import as_matrix, degeneracy_ratio, determinant, identity, is_exact_matrix
from shared.numeric import Real


class MetricTensor(BaseModel):
    """
    Symmetric non-degenerate bilinear form on the n-dimensional space.

    Entries G_jk = G(e_j, e_k) are stored row-major as Python reals. Build
    instances through from_matrix / euclidean / diagonal, which run the
    structure checks.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    dim: int = Field(..., ge=1, description="Ambient dimension n")

    matrix: Tuple[Tuple[Any, ...], ...] = Field(
        ...,
        description="n x n matrix of G_jk as int, Fraction or float entries"
    )

    @field_validator("matrix", mode="before")
    @classmethod
    def coerce_entries(cls, value: Any) -> Tuple[Tuple[Real, ...], ...]:
        return as_matrix(value)

    def validate_structure(self) -> "MetricTensor":
        """
        Raises:
            InvalidMetricError: If the matrix is not n x n or not symmetric
            DegenerateMetricError: If the matrix is singular
        """
        n = self.dim
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise InvalidMetricError(f"Metric must be a {n}x{n} matrix")
        exact = self.is_exact()
        tol = get_tolerance("symmetry")
        for j in range(n):
            for k in range(j + 1, n):
                a, b = self.matrix[j][k], self.matrix[k][j]
                if (a != b) if exact else abs(a - b) > tol:
                    raise InvalidMetricError(f"Metric is not symmetric: G[{j + 1}][{k + 1}]={a}, G[{k + 1}][{j + 1}]={b}")
        if exact:
            if determinant(self.matrix) == 0:
                raise DegenerateMetricError("Metric is degenerate (determinant 0)")
        else:
            ratio = degeneracy_ratio(self.matrix)
            if ratio < get_tolerance("degeneracy"):
                raise DegenerateMetricError(f"Metric is numerically degenerate (relative determinant {ratio:.3e})")
        return self

    def is_exact(self) -> bool:
        return is_exact_matrix(self.matrix)

    def entry(self, j: int, k: int) -> Real:
        """G_jk for 1-based indices."""
        return self.matrix[j - 1][k - 1]

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[Real]]) -> "MetricTensor":
        try:
            rows = as_matrix(matrix)
        except TypeError as e:
            raise InvalidMetricError(f"Metric entries must be real numbers: {e}") from e
        if not rows:
            raise InvalidMetricError("Metric matrix is empty")
        validate_dim(len(rows))
        return cls(dim=len(rows), matrix=rows).validate_structure()

    @classmethod
    def euclidean(cls, dim: int) -> "MetricTensor":
        validate_dim(dim)
        return cls.from_matrix(identity(dim))

    @classmethod
    def diagonal(cls, entries: Sequence[Real]) -> "MetricTensor":
        n = len(entries)
        return cls.from_matrix([[entries[j] if j == k else 0 for k in range(n)] for j in range(n)])


class MetricFile(BaseModel):
    """
    Metric file read by the gacalc --metric file:PATH option.
    Example: {"dim": 2, "matrix": [[1, 0], [0, -1]]}
    """
    dim: int = Field(..., ge=1, description="Ambient dimension n")

    matrix: List[List[Union[int, float]]] = Field(
        ...,
        description="Row-major n x n metric matrix G_jk"
    )

    def to_metric(self) -> MetricTensor:
        if len(self.matrix) != self.dim:
            raise InvalidMetricError(f"Metric file declares dim {self.dim} but has {len(self.matrix)} rows")
        return MetricTensor.from_matrix(self.matrix)
