import logging
from typing import Dict

from shared.errors import ExpressionSyntaxError, GeometricAlgebraError
from ..evaluator import evaluate
from ..state import EvaluationState

logger = logging.getLogger(__name__)


def evaluate_node(state: EvaluationState) -> Dict:
    """EVALUATE_NODE: expression tree -> value, through the kernel modules."""
    try:
        value = evaluate(state["context"], state["expression"])
    except GeometricAlgebraError as e:
        logger.debug("Evaluation failed: %s", e)
        return {"error": e, "current_step": "evaluate"}
    except RecursionError:
        return {"error": ExpressionSyntaxError("Expression nested too deeply", offset=0), "current_step": "evaluate"}
    return {"value": value, "current_step": "evaluate"}
