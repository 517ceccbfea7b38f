import logging
from typing import Dict

from shared.errors import GeometricAlgebraError
from ..parser import parse
from ..state import EvaluationState

logger = logging.getLogger(__name__)


def parse_node(state: EvaluationState) -> Dict:
    """
    PARSE_NODE: source text -> expression tree.

    Returns:
        Updates with the expression, or with the error on failure
    """
    try:
        expression = parse(state["source"], state["context"].dim)
    except GeometricAlgebraError as e:
        logger.debug("Parse failed: %s", e)
        return {"error": e, "current_step": "parse"}
    return {"expression": expression, "current_step": "parse"}
