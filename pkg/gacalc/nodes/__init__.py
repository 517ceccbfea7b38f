from .parse import parse_node
from .evaluate import evaluate_node
from .render import render_node
from .report_error import describe_error, report_error_node

__all__ = [
    'parse_node',
    'evaluate_node',
    'render_node',
    'report_error_node',
    'describe_error',
]
