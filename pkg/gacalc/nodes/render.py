from typing import Dict

from ..formatter import format_result
from ..state import EvaluationState


def render_node(state: EvaluationState) -> Dict:
    output = format_result(state["context"].dim, state["value"], state["output_mode"])
    return {"output": output, "exit_code": 0, "current_step": "render"}
