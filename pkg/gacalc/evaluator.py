"""
Evaluation of expression trees against an algebra.

Scalar-product nodes produce reals; every other node produces a multivector,
and reals met inside larger expressions are promoted to grade 0.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Union

from clifford_product import geometric_product
from contraction import left_contract, reversion, right_contract
from deformation import (
    MetricOperator,
    deformed_left_contract,
    deformed_right_contract,
    deformed_scalar_product,
    make_metric_operator,
)
from exterior import wedge
from graded_core import Multivector, basis_blade, grade_part, scalar
from metric import Algebra, make_algebra, parse_metric_spec, scalar_product
from shared.errors import GeometricAlgebraError
from shared.numeric import Real
from .models import BasisVector, BinaryOp, CalculatorSettings, Expression, GradeSelect, NumberLiteral, UnaryOp

logger = logging.getLogger(__name__)

Value = Union[Multivector, Real]


@dataclass(frozen=True)
class EvaluationContext:
    """Algebra of one invocation, with the metric operator when deforming"""
    algebra: Algebra
    operator: Optional[MetricOperator] = None

    @property
    def dim(self) -> int:
        return self.algebra.dim


def build_context(settings: CalculatorSettings) -> EvaluationContext:
    """
    Build the algebra (and metric operator for --deform) named by the settings.

    Raises:
        DimensionError, MetricError: Bad dimension or metric specification
    """
    algebra = make_algebra(parse_metric_spec(settings.metric, settings.dim))
    operator = make_metric_operator(None, algebra) if settings.deform else None
    logger.debug("Context: dim=%d metric=%s deform=%s", settings.dim, settings.metric, settings.deform)
    return EvaluationContext(algebra=algebra, operator=operator)


def _promote(dim: int, value: Value) -> Multivector:
    return value if isinstance(value, Multivector) else scalar(dim, value)


def _binary(context: EvaluationContext, op: str, left: Multivector, right: Multivector) -> Value:
    A, m = context.algebra, context.operator
    if op == "add":
        return left + right
    if op == "sub":
        return left - right
    if op == "wedge":
        return wedge(left, right)
    if op == "geom":
        return geometric_product(A, left, right)
    if op == "dot":
        return scalar_product(A, left, right) if m is None else deformed_scalar_product(m, left, right)
    if op == "lcont":
        return left_contract(A, left, right) if m is None else deformed_left_contract(m, left, right)
    if op == "rcont":
        return right_contract(A, left, right) if m is None else deformed_right_contract(m, left, right)
    raise ValueError(f"Unknown operator {op!r}")


def evaluate(context: EvaluationContext, node: Expression) -> Value:
    """
    Evaluate an expression tree.

    Returns:
        A real for a top-level scalar product, otherwise a Multivector

    Raises:
        GeometricAlgebraError: Kernel errors, with the offset of the failing node
    """
    n = context.dim
    try:
        if isinstance(node, NumberLiteral):
            return scalar(n, node.value())
        if isinstance(node, BasisVector):
            return basis_blade(n, [node.index])
        if isinstance(node, UnaryOp):
            operand = _promote(n, evaluate(context, node.operand))
            return -operand if node.op == "neg" else reversion(operand)
        if isinstance(node, GradeSelect):
            operand = _promote(n, evaluate(context, node.operand))
            try:
                return grade_part(operand, node.grade)
            except GeometricAlgebraError as e:
                raise e.with_offset(node.grade_offset)
        if isinstance(node, BinaryOp):
            left = _promote(n, evaluate(context, node.left))
            right = _promote(n, evaluate(context, node.right))
            return _binary(context, node.op, left, right)
    except GeometricAlgebraError as e:
        raise e.with_offset(node.offset)
    raise TypeError(f"Not an expression node: {type(node).__name__}")
