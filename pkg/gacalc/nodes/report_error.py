from typing import Dict

from shared.errors import GeometricAlgebraError
from ..state import EvaluationState

ERROR_LABELS = {
    "syntax": "Syntax error",
    "dimension": "Dimension error",
    "invariant": "Invariant violation",
}


def describe_error(error: GeometricAlgebraError) -> str:
    """One-line description, e.g. "Syntax error at offset 3: Operator '^' is missing its right operand"."""
    label = ERROR_LABELS.get(error.exit_kind, "Error")
    if error.offset is None:
        return f"{label}: {error.message}"
    return f"{label} at offset {error.offset}: {error.message}"


def report_error_node(state: EvaluationState) -> Dict:
    """
    REPORT_ERROR_NODE: turn the recorded error into a message and exit code.
    """
    error = state["error"]
    return {
        "error_message": describe_error(error),
        "exit_code": error.exit_code,
        "current_step": "report_error",
    }
