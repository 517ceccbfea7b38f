"""
Exception hierarchy shared by every module.

Each class carries the exit code the gacalc command reports for it and an
optional byte offset into the expression that triggered it.
"""
from typing import Optional

from config import get_exit_code


class GeometricAlgebraError(Exception):
    """Base class for all kernel and calculator errors"""

    exit_kind = "invariant"

    def __init__(self, message: str, offset: Optional[int] = None):
        super().__init__(message)
        self.message = message
        self.offset = offset

    @property
    def exit_code(self) -> int:
        return get_exit_code(self.exit_kind)

    def with_offset(self, offset: int) -> "GeometricAlgebraError":
        """Attach an expression location unless one is already set."""
        if self.offset is None:
            self.offset = offset
        return self

    def __str__(self) -> str:
        if self.offset is None:
            return self.message
        return f"{self.message} (at offset {self.offset})"


class DimensionError(GeometricAlgebraError, ValueError):
    """Dimension out of range, dimension mismatch or basis index out of range"""
    exit_kind = "dimension"


class GradeError(GeometricAlgebraError, ValueError):
    """Grade out of range, or mixed-grade input where one grade is required"""
    exit_kind = "dimension"


class DegenerateBladeError(GeometricAlgebraError, ValueError):
    """A blade name repeats an index (v ^ v = 0 is not a blade)"""
    exit_kind = "dimension"


class RankError(GeometricAlgebraError, ValueError):
    """Tensor rank exceeds the ambient dimension"""
    exit_kind = "dimension"


class ShapeError(GeometricAlgebraError, ValueError):
    """Index lists or arrays with incompatible shapes"""
    exit_kind = "dimension"


class MetricError(GeometricAlgebraError, ValueError):
    """Base class for metric construction failures"""
    exit_kind = "dimension"


class InvalidMetricError(MetricError):
    """Malformed or asymmetric metric matrix"""


class DegenerateMetricError(MetricError):
    """Singular metric matrix"""


class InvalidEuclideanStructureError(MetricError):
    """Euclidean structure that is not positive definite"""


class InvariantViolationError(GeometricAlgebraError):
    """Internal consistency check failed"""
    exit_kind = "invariant"


class ExpressionSyntaxError(GeometricAlgebraError):
    """Calculator expression could not be parsed"""
    exit_kind = "syntax"


class UnknownSymbolError(ExpressionSyntaxError):
    """Identifier that is neither a basis vector nor a known function"""
