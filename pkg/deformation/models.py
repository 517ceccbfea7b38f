from dataclasses import dataclass

from exterior import outermorphism_matrix
from graded_core import Multivector
from metric import Algebra, require_grade
from shared.errors import DimensionError
from shared.linalg import Matrix


@dataclass(frozen=True, eq=False)
class LinearOperator:
    """
    Linear map of the n-dimensional space.

    matrix[i][j] is the e_i component of the image of e_j.
    """
    matrix: Matrix

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def apply(self, v: Multivector) -> Multivector:
        """Image of a vector."""
        require_grade(v, 1)
        return self.outermorphism(v)

    def outermorphism(self, X: Multivector) -> Multivector:
        """Exterior power of the map applied to X (scalars fixed, grades preserved)."""
        if X.dim != self.dim:
            raise DimensionError(f"Dimension mismatch: operator has dim {self.dim}, multivector has dim {X.dim}")
        return outermorphism_matrix(self.matrix, X)


@dataclass(frozen=True, eq=False)
class MetricOperator(LinearOperator):
    """
    Metric operator g relating a metric G to a euclidean structure G_E:

        v ._G w = g(v) ._E w

    g is symmetric with respect to G_E and invertible.
    """
    euclidean: Algebra
    metric: Algebra
