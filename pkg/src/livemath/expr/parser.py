"""Recursive-descent parser for OCR'd textbook math.

The grammar covers what math OCR produces on algebra/trig/geometry/calculus
pages: decimal literals, single-letter variables, implicit multiplication by
adjacency (`6x`, `1.55192 t`), `+ - * /`, right-associative `^`, `{...}` and
`(...)` grouping, `\\sqrt{}`, `\\sum_{i=1}^{n}`, subscripts (`a_i`, `a_{i}`),
`\\sin \\cos \\tan \\ln`, `|...|` absolute value, relations `= < > \\leq \\geq`
and chained equalities.

Conventions (deterministic, documented here because LaTeX itself is looser):
  * multi-letter runs are products of single letters (`ab` is a*b);
  * implicit multiplication has the same precedence as explicit `*` and `/`
    and is left-associative, so `1/2x` is `(1/2)*x`;
  * an unbraced exponent or subscript takes the whole next atom (`x^23` is
    x^(23)); `2^3^2` nests to the right;
  * a summation body absorbs one multiplicative term: `\\sum i + 1` is
    `(\\sum i) + 1` while `\\sum 2 i` sums `2*i`;
  * an unbraced function argument is one power-level atom: `\\sin x^2` is
    sin(x^2), `\\sin 2 x` is sin(2)*x — write braces to override.

Parentheses and braces group only; they leave no node behind (the enclosed
node's span widens to include them).
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction

from ..errors import LatexSyntaxError
from . import lexer
from .lexer import Token, tokenize
from .nodes import (
    BinaryOp,
    Expr,
    Function,
    Indexed,
    Literal,
    Neg,
    Relation,
    RelationChain,
    Span,
    Summation,
    Variable,
)


def parse_latex(src: str) -> Expr:
    """Parse normalized LaTeX into an expression tree with source spans.

    Raises LatexSyntaxError (with character offset) for unsupported commands,
    unbalanced braces, or truncated input; callers degrade such formulas to
    display-only regions.
    """
    return _Parser(src).parse()


def _spanned(node: Expr, start: int, end: int) -> Expr:
    return dataclasses.replace(node, span=Span(start, end))


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = tokenize(src)
        self.pos = 0
        self.pipe_depth = 0

    # --- token helpers ---

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, value: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind != kind or (value is not None and tok.value != value):
            want = value if value is not None else kind
            raise LatexSyntaxError(f"expected {want!r}", tok.start)
        return self.next()

    def at_sym(self, *values: str) -> bool:
        tok = self.peek()
        return tok.kind == lexer.SYM and tok.value in values

    # --- entry ---

    def parse(self) -> Expr:
        e = self.parse_relation()
        tok = self.peek()
        if tok.kind != lexer.END:
            raise LatexSyntaxError("unexpected trailing input", tok.start)
        return e

    def parse_relation(self) -> Expr:
        parts = [self.parse_additive()]
        ops: list[str] = []
        while self.peek().kind == lexer.RELOP:
            ops.append(self.next().value)
            parts.append(self.parse_additive())
        if not ops:
            return parts[0]
        start = _start_of(parts[0])
        end = _end_of(parts[-1])
        if len(parts) == 2:
            return Relation(ops[0], parts[0], parts[1], span=Span(start, end))
        if any(op != "=" for op in ops):
            bad = next(i for i, op in enumerate(ops) if op != "=")
            raise LatexSyntaxError("chained relations must all be '='", _end_of(parts[bad]))
        return RelationChain(tuple(parts), span=Span(start, end))

    def parse_additive(self) -> Expr:
        node = self.parse_term()
        while self.at_sym("+", "-"):
            op = self.next().value
            right = self.parse_term()
            node = BinaryOp(op, node, right, span=Span(_start_of(node), _end_of(right)))
        return node

    def parse_term(self) -> Expr:
        node = self.parse_unary()
        while True:
            tok = self.peek()
            if tok.kind == lexer.TIMES or (tok.kind == lexer.SYM and tok.value in "*/"):
                op = "*" if tok.kind == lexer.TIMES or tok.value == "*" else "/"
                self.next()
                right = self.parse_unary()
            elif self.starts_operand(tok):
                right = self.parse_unary()
                op = "*"
            else:
                return node
            node = BinaryOp(op, node, right, span=Span(_start_of(node), _end_of(right)))

    def starts_operand(self, tok: Token) -> bool:
        if tok.kind in (lexer.NUMBER, lexer.LETTER, lexer.FUNC, lexer.SUM, lexer.LPIPE):
            return True
        if tok.kind == lexer.SYM and tok.value in "({":
            return True
        if tok.kind == lexer.PIPE:
            return self.pipe_depth == 0
        return False

    def parse_unary(self) -> Expr:
        tok = self.peek()
        if tok.kind == lexer.SYM and tok.value == "-":
            self.next()
            operand = self.parse_unary()
            return Neg(operand, span=Span(tok.start, _end_of(operand)))
        if tok.kind == lexer.SYM and tok.value == "+":
            self.next()
            return self.parse_unary()
        return self.parse_power()

    def parse_power(self) -> Expr:
        base = self.parse_atom()
        if self.at_sym("^"):
            self.next()
            exponent = self.parse_exponent()
            return BinaryOp("^", base, exponent, span=Span(_start_of(base), _end_of(exponent)))
        return base

    def parse_exponent(self) -> Expr:
        operand = self.parse_atom()
        if self.at_sym("^"):
            self.next()
            inner = self.parse_exponent()
            return BinaryOp("^", operand, inner, span=Span(_start_of(operand), _end_of(inner)))
        return operand

    def parse_atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == lexer.NUMBER:
            self.next()
            return Literal(_decimal_fraction(tok.value), span=Span(tok.start, tok.end))
        if tok.kind == lexer.LETTER:
            self.next()
            if self.at_sym("_"):
                self.next()
                sub = self.parse_group_or_atom()
                return Indexed(tok.value, sub, span=Span(tok.start, _end_of(sub)))
            return Variable(tok.value, span=Span(tok.start, tok.end))
        if tok.kind == lexer.SYM and tok.value in "({":
            closing = ")" if tok.value == "(" else "}"
            self.next()
            inner = self.parse_additive()
            close = self.expect(lexer.SYM, closing)
            return _spanned(inner, tok.start, close.end)
        if tok.kind == lexer.PIPE and self.pipe_depth == 0:
            self.next()
            self.pipe_depth += 1
            inner = self.parse_additive()
            self.pipe_depth -= 1
            close = self.expect(lexer.PIPE)
            return Function("abs", (inner,), span=Span(tok.start, close.end))
        if tok.kind == lexer.LPIPE:
            self.next()
            inner = self.parse_additive()
            close = self.expect(lexer.RPIPE)
            return Function("abs", (inner,), span=Span(tok.start, close.end))
        if tok.kind == lexer.FUNC:
            self.next()
            arg = self.parse_group_or_atom()
            return Function(tok.value, (arg,), span=Span(tok.start, _end_of(arg)))
        if tok.kind == lexer.SUM:
            return self.parse_summation()
        raise LatexSyntaxError("expected a value, variable, or group", tok.start)

    def parse_group_or_atom(self) -> Expr:
        """A braced expression or a single power-level atom."""
        tok = self.peek()
        if tok.kind == lexer.SYM and tok.value == "{":
            self.next()
            inner = self.parse_additive()
            close = self.expect(lexer.SYM, "}")
            return _spanned(inner, tok.start, close.end)
        return self.parse_atom()

    def parse_summation(self) -> Expr:
        head = self.expect(lexer.SUM)
        index: str | None = None
        lower: Expr | None = None
        upper: Expr | None = None
        for _ in range(2):
            if self.at_sym("_") and lower is None:
                self.next()
                self.expect(lexer.SYM, "{")
                idx = self.expect(lexer.LETTER)
                self.expect(lexer.RELOP, "=")
                lower = self.parse_additive()
                self.expect(lexer.SYM, "}")
                index = idx.value
            elif self.at_sym("^") and upper is None:
                self.next()
                upper = self.parse_group_or_atom()
        if index is None or lower is None:
            raise LatexSyntaxError("summation needs a _{i=...} lower bound", head.start)
        if upper is None:
            raise LatexSyntaxError("summation needs a ^{...} upper bound", head.start)
        body = self.parse_term()
        return Summation(index, lower, upper, body, span=Span(head.start, _end_of(body)))


def _decimal_fraction(text: str) -> Fraction:
    if "." not in text:
        return Fraction(int(text))
    whole, frac = text.split(".")
    scale = 10 ** len(frac)
    return Fraction(int(whole or "0") * scale + int(frac), scale)


def _start_of(e: Expr) -> int:
    return e.span.start if e.span else 0


def _end_of(e: Expr) -> int:
    return e.span.end if e.span else 0
