from functools import lru_cache

from langgraph.graph import END, StateGraph

from .evaluator import EvaluationContext
from .nodes import evaluate_node, parse_node, render_node, report_error_node
from .state import EvaluationState, create_initial_state


def route_after_parse(state: EvaluationState) -> str:
    """
    Route after PARSE_NODE.

    Returns:
        "report_error" if parsing failed
        "evaluate" otherwise
    """
    return "report_error" if state.get("error") is not None else "evaluate"


def route_after_evaluate(state: EvaluationState) -> str:
    return "report_error" if state.get("error") is not None else "render"


@lru_cache(maxsize=1)
def create_calculator_workflow():
    """
    Create the calculator workflow graph.

    Workflow:
    START → PARSE → EVALUATE → RENDER → END
               ↓         ↓
            REPORT_ERROR → END

    Returns:
        Compiled LangGraph workflow
    """
    workflow = StateGraph(EvaluationState)

    workflow.add_node("parse", parse_node)
    workflow.add_node("evaluate", evaluate_node)
    workflow.add_node("render", render_node)
    workflow.add_node("report_error", report_error_node)

    workflow.set_entry_point("parse")

    workflow.add_conditional_edges(
        "parse",
        route_after_parse,
        {
            "evaluate": "evaluate",
            "report_error": "report_error"
        }
    )

    workflow.add_conditional_edges(
        "evaluate",
        route_after_evaluate,
        {
            "render": "render",
            "report_error": "report_error"
        }
    )

    workflow.add_edge("render", END)
    workflow.add_edge("report_error", END)

    return workflow.compile()


def run_expression(source: str, context: EvaluationContext, output_mode: str = "text") -> EvaluationState:
    """
    Parse, evaluate and render one expression.

    Args:
        source: Expression text
        context: Evaluation context of the invocation
        output_mode: "text" or "json"

    Returns:
        Final state; "output" is set on success, "error_message" and
        "exit_code" on failure
    """
    initial_state = create_initial_state(source, context, output_mode)
    return create_calculator_workflow().invoke(initial_state)
