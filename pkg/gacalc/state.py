from typing import Any, Optional, TypedDict

from .evaluator import EvaluationContext


class EvaluationState(TypedDict):
    """
    State passed between the calculator nodes for one expression.
    Uses TypedDict for LangGraph compatibility.
    """

    source: str
    """Expression text as given - never modified"""

    context: EvaluationContext
    """Algebra (and metric operator) shared by every expression of the invocation"""

    output_mode: str
    """Result format: "text" | "json" """

    expression: Optional[Any]
    """Parsed expression tree"""

    value: Optional[Any]
    """Multivector, or a real for a top-level scalar product"""

    output: Optional[str]
    """Rendered result line"""

    error: Optional[Exception]
    """First GeometricAlgebraError raised by any node"""

    error_message: Optional[str]
    """One-line description of error, with its offset"""

    exit_code: int
    """0 on success, else the error's exit code"""

    current_step: str
    """Name of current/last executed node"""


def create_initial_state(source: str, context: EvaluationContext, output_mode: str = "text") -> EvaluationState:
    """
    Create the initial state for one expression.

    Args:
        source: Expression text
        context: Evaluation context built from the invocation settings
        output_mode: "text" or "json"
    """
    return EvaluationState(
        source=source,
        context=context,
        output_mode=output_mode,

        expression=None,
        value=None,
        output=None,

        error=None,
        error_message=None,
        exit_code=0,

        current_step="initialized",
    )
