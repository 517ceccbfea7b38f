"""
Pratt parser for calculator expressions.

Grammar, loosest binding first (all binary operators left-associative):

    +  -        addition, subtraction
    .           scalar product
    <<  >>      left, right contraction
    ^           exterior product
    *           geometric product
    -  ~        unary negation, reversion
    grade(expr, k), ( expr ), decimal literals, e1..en

Offsets reported in errors and stored on nodes are UTF-8 byte offsets.
"""
import logging
import re
from dataclasses import dataclass
from typing import Optional

from graded_core import validate_dim
from shared.errors import DimensionError, ExpressionSyntaxError, GradeError, UnknownSymbolError
from .models import BasisVector, BinaryOp, Expression, GradeSelect, NumberLiteral, UnaryOp

logger = logging.getLogger(__name__)

BINARY_OPERATORS = {
    "+": ("add", 10),
    "-": ("sub", 10),
    ".": ("dot", 20),
    "<<": ("lcont", 30),
    ">>": ("rcont", 30),
    "^": ("wedge", 40),
    "*": ("geom", 50),
}

PREFIX_OPERATORS = {"-": "neg", "~": "rev"}
PREFIX_BINDING = 60

_TOKEN = re.compile(
    r"(?P<space>\s+)"
    r"|(?P<number>\d+(?:\.\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op><<|>>|[-+.^*~(),])"
)
_BASIS = re.compile(r"e(\d+)")


@dataclass(frozen=True)
class Token:
    kind: str          # "number", "name", "op" or "end"
    text: str
    offset: int        # byte offset


def tokenize(src: str) -> list[Token]:
    """
    Split source text into tokens, ending with an "end" token.

    Raises:
        ExpressionSyntaxError: On an unexpected character or a number run into a name
    """
    tokens: list[Token] = []
    pos = 0
    byte_pos = 0
    while pos < len(src):
        match = _TOKEN.match(src, pos)
        if match is None:
            raise ExpressionSyntaxError(f"Unexpected character {src[pos]!r}", offset=byte_pos)
        kind = match.lastgroup
        text = match.group()
        if kind == "number" and match.end() < len(src) and (src[match.end()].isalnum() or src[match.end()] == "_"):
            raise ExpressionSyntaxError(
                f"Invalid numeric literal {text + src[match.end()]!r}... (use '*' between a number and a name)",
                offset=byte_pos,
            )
        if kind == "number" and match.end() < len(src) and src[match.end()] == ".":
            tail = src[match.end() + 1:match.end() + 2]
            if tail.isdigit():
                raise ExpressionSyntaxError(f"Invalid numeric literal starting {text!r}", offset=byte_pos)
        if kind != "space":
            tokens.append(Token(kind, text, byte_pos))
        pos = match.end()
        byte_pos += len(text.encode("utf-8"))
    tokens.append(Token("end", "", byte_pos))
    return tokens


class Parser:
    """
    Single-use parser over one source string.

    Args:
        src: Expression text
        dim: Basis indices above dim raise DimensionError (None skips the check)
    """

    def __init__(self, src: str, dim: Optional[int] = None):
        self.tokens = tokenize(src)
        self.pos = 0
        self.dim = dim

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        if token.kind != "end":
            self.pos += 1
        return token

    def expect(self, text: str) -> Token:
        token = self.current
        if token.kind != "op" or token.text != text:
            found = "end of input" if token.kind == "end" else repr(token.text)
            raise ExpressionSyntaxError(f"Expected {text!r}, found {found}", offset=token.offset)
        return self.advance()

    def starts_operand(self, token: Token) -> bool:
        if token.kind in ("number", "name"):
            return True
        return token.kind == "op" and (token.text == "(" or token.text in PREFIX_OPERATORS)

    def parse(self) -> Expression:
        expression = self.parse_expression(0)
        if self.current.kind != "end":
            raise ExpressionSyntaxError(f"Unexpected {self.current.text!r}", offset=self.current.offset)
        return expression

    def parse_expression(self, min_binding: int) -> Expression:
        left = self.parse_prefix()
        while True:
            token = self.current
            if token.kind != "op" or token.text not in BINARY_OPERATORS:
                return left
            op, binding = BINARY_OPERATORS[token.text]
            if binding <= min_binding:
                return left
            self.advance()
            right = self.parse_operand_of(token, binding)
            left = BinaryOp(offset=token.offset, op=op, left=left, right=right)

    def parse_operand_of(self, operator: Token, binding: int) -> Expression:
        """Right operand of an operator; a missing operand is reported at the operator."""
        if not self.starts_operand(self.current):
            raise ExpressionSyntaxError(f"Operator {operator.text!r} is missing its right operand", offset=operator.offset)
        return self.parse_expression(binding)

    def parse_prefix(self) -> Expression:
        token = self.current
        if token.kind == "op" and token.text in PREFIX_OPERATORS:
            self.advance()
            operand = self.parse_operand_of(token, PREFIX_BINDING)
            return UnaryOp(offset=token.offset, op=PREFIX_OPERATORS[token.text], operand=operand)
        if token.kind == "number":
            self.advance()
            return NumberLiteral(offset=token.offset, text=token.text)
        if token.kind == "name":
            return self.parse_name()
        if token.kind == "op" and token.text == "(":
            self.advance()
            inner = self.parse_expression(0)
            self.expect(")")
            return inner
        if token.kind == "end":
            raise ExpressionSyntaxError("Unexpected end of input", offset=token.offset)
        raise ExpressionSyntaxError(f"Unexpected {token.text!r}", offset=token.offset)

    def parse_name(self) -> Expression:
        token = self.advance()
        basis = _BASIS.fullmatch(token.text)
        if basis:
            index = int(basis.group(1))
            if index < 1:
                raise DimensionError("Basis indices start at 1", offset=token.offset)
            if self.dim is not None and index > self.dim:
                raise DimensionError(f"Basis vector {token.text} exceeds dimension {self.dim}", offset=token.offset)
            return BasisVector(offset=token.offset, index=index)
        if token.text == "grade":
            return self.parse_grade(token)
        raise UnknownSymbolError(f"Unknown symbol {token.text!r}", offset=token.offset)

    def parse_grade(self, name: Token) -> GradeSelect:
        self.expect("(")
        operand = self.parse_expression(0)
        self.expect(",")
        grade_token = self.current
        if grade_token.kind != "number" or not grade_token.text.isdigit():
            raise ExpressionSyntaxError("grade() needs a non-negative integer grade", offset=grade_token.offset)
        self.advance()
        self.expect(")")
        grade = int(grade_token.text)
        if self.dim is not None and grade > self.dim:
            raise GradeError(f"Grade {grade} exceeds dimension {self.dim}", offset=grade_token.offset)
        return GradeSelect(offset=name.offset, operand=operand, grade=grade, grade_offset=grade_token.offset)


def parse(src: str, dim: Optional[int] = None) -> Expression:
    """
    Parse an expression.

    Args:
        src: Expression text
        dim: Configured dimension; basis indices and grades above it are rejected

    Returns:
        Expression tree

    Raises:
        ExpressionSyntaxError: Malformed or too deeply nested input (offset set)
        UnknownSymbolError: Identifier other than e<k> or grade
        DimensionError: Basis index beyond dim
        GradeError: Grade argument beyond dim
    """
    if dim is not None:
        validate_dim(dim)
    try:
        expression = Parser(src, dim).parse()
    except RecursionError:
        raise ExpressionSyntaxError("Expression nested too deeply", offset=0) from None
    logger.debug("Parsed %r", src)
    return expression
