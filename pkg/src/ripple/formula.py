"""Cell formulas: a small arithmetic language with a recursive-descent parser.

Grammar::

    formula := sum EOF
    sum     := product (("+" | "-") product)*
    product := unary (("*" | "/") unary)*
    unary   := "-" unary | atom
    atom    := NUMBER | NAME | "(" sum ")"
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
import re

from ripple.errors import evaluation_error, syntax_error

CELL_NAME = re.compile(r"[A-Za-z][A-Za-z0-9]*")

_TOKEN = re.compile(
    r"(?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<op>[-+*/()])"
)

_PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2}


@dataclass(frozen=True, slots=True)
class Num:
    value: float

    def __str__(self) -> str:
        return format_number(self.value)


@dataclass(frozen=True, slots=True)
class CellRef:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Unary:
    operand: Formula

    def __str__(self) -> str:
        inner = str(self.operand)
        if isinstance(self.operand, Binary):
            inner = f"({inner})"
        return f"-{inner}"


@dataclass(frozen=True, slots=True)
class Binary:
    op: str
    left: Formula
    right: Formula

    def __str__(self) -> str:
        precedence = _PRECEDENCE[self.op]
        left, right = str(self.left), str(self.right)
        if isinstance(self.left, Binary) and _PRECEDENCE[self.left.op] < precedence:
            left = f"({left})"
        if isinstance(self.right, Binary) and _PRECEDENCE[self.right.op] <= precedence:
            right = f"({right})"
        return f"{left} {self.op} {right}"


Formula = Num | CellRef | Unary | Binary


def format_number(value: float, precision: int = 12) -> str:
    if value != value or value in (float("inf"), float("-inf")):
        return str(value)
    if float(value).is_integer() and abs(value) < 1e16:
        return str(int(value))
    return format(value, f".{precision}g")


@dataclass(slots=True)
class _Token:
    kind: str
    text: str
    column: int


def tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    position = 0
    while True:
        while position < len(text) and text[position].isspace():
            position += 1
        if position >= len(text):
            break
        match = _TOKEN.match(text, position)
        if match is None:
            raise syntax_error(
                f"Unexpected character {text[position]!r} at column {position + 1}.",
                "Formulas may use numbers, cell names, + - * / and parentheses.",
            )
        kind = match.lastgroup or "op"
        tokens.append(_Token(kind=kind, text=match.group(), column=position + 1))
        position = match.end()
    tokens.append(_Token(kind="end", text="", column=len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self._tokens = tokenize(text)
        self._index = 0

    @property
    def current(self) -> _Token:
        return self._tokens[self._index]

    def advance(self) -> _Token:
        token = self.current
        self._index += 1
        return token

    def expect(self, text: str) -> None:
        if self.current.text != text:
            self.fail(f"expected {text!r}")
        self.advance()

    def fail(self, reason: str) -> None:
        token = self.current
        found = "end of input" if token.kind == "end" else repr(token.text)
        raise syntax_error(
            f"Syntax error at column {token.column}: {reason}, found {found}.",
            "Check operators and parentheses, for example `n1 + n2 * 3`.",
        )

    def formula(self) -> Formula:
        tree = self.sum()
        if self.current.kind != "end":
            self.fail("expected an operator")
        return tree

    def sum(self) -> Formula:
        tree = self.product()
        while self.current.text in ("+", "-"):
            op = self.advance().text
            tree = Binary(op, tree, self.product())
        return tree

    def product(self) -> Formula:
        tree = self.unary()
        while self.current.text in ("*", "/"):
            op = self.advance().text
            tree = Binary(op, tree, self.unary())
        return tree

    def unary(self) -> Formula:
        if self.current.text == "-":
            self.advance()
            return Unary(self.unary())
        return self.atom()

    def atom(self) -> Formula:
        token = self.current
        if token.kind == "number":
            self.advance()
            return Num(float(token.text))
        if token.kind == "name":
            self.advance()
            return CellRef(token.text)
        if token.text == "(":
            self.advance()
            tree = self.sum()
            self.expect(")")
            return tree
        self.fail("expected a number, a cell name or '('")
        raise AssertionError("unreachable")


def parse_formula(text: str) -> Formula:
    return _Parser(text).formula()


def references(formula: Formula) -> set[str]:
    match formula:
        case CellRef(name):
            return {name}
        case Unary(operand):
            return references(operand)
        case Binary(_, left, right):
            return references(left) | references(right)
        case _:
            return set()


def evaluate(formula: Formula, resolve: Callable[[str], float]) -> float:
    match formula:
        case Num(value):
            return value
        case CellRef(name):
            return resolve(name)
        case Unary(operand):
            return -evaluate(operand, resolve)
        case Binary(op, left, right):
            lhs = evaluate(left, resolve)
            rhs = evaluate(right, resolve)
            return apply_operator(op, lhs, rhs)
    raise TypeError(f"not a formula: {formula!r}")


def apply_operator(op: str, lhs: float, rhs: float) -> float:
    if op == "+":
        return lhs + rhs
    if op == "-":
        return lhs - rhs
    if op == "*":
        return lhs * rhs
    if rhs == 0:
        raise evaluation_error(
            "Division by zero.",
            "Change the divisor so it cannot evaluate to 0.",
        )
    return lhs / rhs
