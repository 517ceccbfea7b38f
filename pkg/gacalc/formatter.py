"""
Text and JSON rendering of results.

Text output lists terms by grade, then lexicographic blade, and uses the
expression grammar so that it parses back to the same value:

    1 + 2*e1 - 3*e1^e2
"""
from fractions import Fraction
from typing import Literal, Union

import numpy as np

from config import get_limit
from graded_core import BladeIndex, Multivector
from shared.numeric import Real
from .models import FormattedMultivector, FormattedScalar, FormattedTerm

OutputMode = Literal["text", "json"]


def format_number(value: Real) -> str:
    """
    Positional form. Exact integral values print without a decimal point;
    anything else is rounded to the configured significant digits.
    """
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return np.format_float_positional(
        float(value),
        precision=get_limit("significant_digits"),
        unique=False,
        fractional=False,
        trim="-",
    )


def _json_number(value: Real) -> float:
    # same rounding as the text form
    return float(format_number(value))


def blade_name(blade: BladeIndex) -> str:
    return "^".join(f"e{i}" for i in blade)


def _term_text(blade: BladeIndex, magnitude: Real) -> str:
    text = format_number(magnitude)
    if not blade:
        return text
    if text == "1":
        return blade_name(blade)
    return f"{text}*{blade_name(blade)}"


def format_text(X: Multivector) -> str:
    parts: list[str] = []
    for blade, coeff in X.items():
        negative = coeff < 0
        text = _term_text(blade, -coeff if negative else coeff)
        if not parts:
            parts.append(f"-{text}" if negative else text)
        else:
            parts.append(f"- {text}" if negative else f"+ {text}")
    return " ".join(parts) if parts else "0"


def format_multivector(X: Multivector, mode: OutputMode = "text") -> str:
    """
    Render a multivector.

    Args:
        X: Value to render
        mode: "text" for the expression form, "json" for
            {"dim": n, "terms": [{"blade": [...], "coeff": c}, ...]}
    """
    if mode == "json":
        record = FormattedMultivector(
            dim=X.dim,
            terms=[FormattedTerm(blade=list(blade), coeff=_json_number(coeff)) for blade, coeff in X.items()],
        )
        return record.model_dump_json()
    return format_text(X)


def format_scalar(dim: int, value: Real, mode: OutputMode = "text") -> str:
    if mode == "json":
        return FormattedScalar(dim=dim, scalar=_json_number(value)).model_dump_json()
    return format_number(value)


def format_result(dim: int, value: Union[Multivector, Real], mode: OutputMode = "text") -> str:
    if isinstance(value, Multivector):
        return format_multivector(value, mode)
    return format_scalar(dim, value, mode)
