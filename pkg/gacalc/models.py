from fractions import Fraction
from typing import Annotated, List, Literal, Union

from pydantic import BaseModel, ConfigDict, Field

from shared.numeric import Real, normalize_exact


# =============================================================================
# EXPRESSION TREE
# =============================================================================

class ExpressionNode(BaseModel):
    """Common fields of every expression node"""
    model_config = ConfigDict(frozen=True)

    offset: int = Field(..., ge=0, description="Byte offset of the node's first token in the source")


class NumberLiteral(ExpressionNode):
    """Decimal literal, read exactly"""
    kind: Literal["number"] = "number"
    text: str = Field(..., description="Literal as written (e.g., '2', '0.25')")

    def value(self) -> Real:
        return normalize_exact(Fraction(self.text))


class BasisVector(ExpressionNode):
    """Basis vector e_k"""
    kind: Literal["basis"] = "basis"
    index: int = Field(..., ge=1, description="1-based basis index")


class UnaryOp(ExpressionNode):
    """Negation or reversion"""
    kind: Literal["unary"] = "unary"
    op: Literal["neg", "rev"] = Field(..., description="'neg' for '-', 'rev' for '~'")
    operand: "Expression"


class GradeSelect(ExpressionNode):
    """grade(expr, k)"""
    kind: Literal["grade"] = "grade"
    operand: "Expression"
    grade: int = Field(..., ge=0, description="Grade to keep")
    grade_offset: int = Field(..., ge=0, description="Byte offset of the grade argument")


class BinaryOp(ExpressionNode):
    """Binary operator node; offset points at the operator token"""
    kind: Literal["binary"] = "binary"
    op: Literal["add", "sub", "dot", "lcont", "rcont", "wedge", "geom"] = Field(
        ...,
        description="add '+', sub '-', dot '.', lcont '<<', rcont '>>', wedge '^', geom '*'"
    )
    left: "Expression"
    right: "Expression"


Expression = Annotated[
    Union[NumberLiteral, BasisVector, UnaryOp, GradeSelect, BinaryOp],
    Field(discriminator="kind"),
]

UnaryOp.model_rebuild()
GradeSelect.model_rebuild()
BinaryOp.model_rebuild()


# =============================================================================
# JSON OUTPUT RECORDS
# =============================================================================

class FormattedTerm(BaseModel):
    """One blade term of a result"""
    blade: List[int] = Field(..., description="Canonical blade index, [] for the scalar part")
    coeff: float = Field(..., description="Coefficient")


class FormattedMultivector(BaseModel):
    """Multivector result, terms ordered by grade then blade"""
    dim: int
    terms: List[FormattedTerm]


class FormattedScalar(BaseModel):
    """Result of a top-level scalar product"""
    dim: int
    scalar: float


# =============================================================================
# SETTINGS
# =============================================================================

class CalculatorSettings(BaseModel):
    """
    Options of one gacalc invocation.
    """
    dim: int = Field(..., description="Ambient dimension n")

    metric: str = Field(
        default="euclidean",
        description="'euclidean', 'diag:a,b,...' or 'file:PATH'"
    )

    output_mode: Literal["text", "json"] = Field(
        default="text",
        description="Result format"
    )

    deform: bool = Field(
        default=False,
        description="Compute scalar products and contractions through the metric operator"
    )
