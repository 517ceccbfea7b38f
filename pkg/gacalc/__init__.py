"""
gacalc: expression calculator over the multivector kernel.

Workflow:
    PARSE → EVALUATE → RENDER, with failures routed to REPORT_ERROR
"""
from .evaluator import EvaluationContext, build_context, evaluate
from .formatter import format_multivector, format_number, format_result, format_scalar
from .graph import create_calculator_workflow, run_expression
from .models import (
    BasisVector,
    BinaryOp,
    CalculatorSettings,
    Expression,
    FormattedMultivector,
    FormattedScalar,
    FormattedTerm,
    GradeSelect,
    NumberLiteral,
    UnaryOp,
)
from .nodes import describe_error
from .parser import parse, tokenize
from .state import EvaluationState, create_initial_state

__all__ = [
    "EvaluationContext",
    "build_context",
    "evaluate",

    "format_multivector",
    "format_number",
    "format_result",
    "format_scalar",

    "create_calculator_workflow",
    "run_expression",

    "BasisVector",
    "BinaryOp",
    "CalculatorSettings",
    "Expression",
    "FormattedMultivector",
    "FormattedScalar",
    "FormattedTerm",
    "GradeSelect",
    "NumberLiteral",
    "UnaryOp",

    "describe_error",
    "parse",
    "tokenize",

    "EvaluationState",
    "create_initial_state",
]
