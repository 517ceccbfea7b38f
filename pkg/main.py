"""
gacalc command-line entry point
Evaluates multivector expressions under a configured metric
"""

from dotenv import load_dotenv
load_dotenv()

import argparse
import logging
import sys
from typing import Optional, Sequence

from config import get_exit_code, get_logging_config
from gacalc import CalculatorSettings, build_context, describe_error, run_expression
from shared.errors import GeometricAlgebraError

logger = logging.getLogger("gacalc")


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gacalc",
        description="Evaluate an exterior / contraction / geometric-product expression.",
    )
    parser.add_argument("--dim", type=int, required=True, help="Ambient dimension n")
    parser.add_argument(
        "--metric",
        default="euclidean",
        help="euclidean | diag:a,b,... | file:PATH (JSON {\"dim\": n, \"matrix\": [[...]]})",
    )
    parser.add_argument("--json", action="store_true", help="Print results as JSON")
    parser.add_argument(
        "--deform",
        action="store_true",
        help="Compute scalar products and contractions through the metric operator",
    )
    parser.add_argument("--verbose", action="store_true", help="Debug logging on stderr")
    parser.add_argument("expression", nargs="?", help="Expression; omit to read one per line from stdin")
    return parser


def configure_logging(verbose: bool) -> None:
    settings = get_logging_config()
    logging.basicConfig(
        level=logging.DEBUG if verbose else settings["level"],
        format=settings["format"],
        stream=sys.stderr,
        force=True,
    )


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run gacalc.

    With an expression argument the result goes to stdout and failures to
    stderr. Without one, each stdin line produces exactly one stdout line
    (the result, "error: ..." or blank for a blank line) and the highest
    failing exit code is returned.

    Returns:
        0 success, 1 syntax error, 2 dimension/metric error, 3 invariant violation
    """
    args = build_arg_parser().parse_args(argv)
    configure_logging(args.verbose)

    settings = CalculatorSettings(
        dim=args.dim,
        metric=args.metric,
        output_mode="json" if args.json else "text",
        deform=args.deform,
    )

    try:
        context = build_context(settings)
    except GeometricAlgebraError as e:
        print(f"❌ {describe_error(e)}", file=sys.stderr)
        return e.exit_code

    if args.expression is not None:
        try:
            state = run_expression(args.expression, context, settings.output_mode)
        except Exception as e:
            logger.exception("Unexpected failure")
            print(f"❌ Internal error: {e}", file=sys.stderr)
            return get_exit_code("invariant")
        if state["exit_code"] != get_exit_code("success"):
            print(f"❌ {state['error_message']}", file=sys.stderr)
            return state["exit_code"]
        print(state["output"])
        return get_exit_code("success")

    worst = get_exit_code("success")
    for line_number, line in enumerate(sys.stdin, start=1):
        source = line.rstrip("\r\n")
        if not source.strip():
            print()
            continue
        try:
            state = run_expression(source, context, settings.output_mode)
        except Exception as e:
            logger.exception("Line %d: unexpected failure", line_number)
            print(f"error: Internal error: {e}")
            worst = max(worst, get_exit_code("invariant"))
            continue
        if state["exit_code"] != get_exit_code("success"):
            logger.warning("Line %d failed: %s", line_number, state["error_message"])
            print(f"error: {state['error_message']}")
            worst = max(worst, state["exit_code"])
        else:
            print(state["output"])
    return worst


if __name__ == "__main__":
    sys.exit(cli_main())
