"""Canonical LaTeX emission; parse(render(e)) is structurally equal to e.

The round trip is the contract that keeps overlay text honest: whatever the
renderer writes, the parser reads back as the same tree. Exponents, subscripts
and function arguments are always braced; parentheses are inserted from
precedence plus two extra rules the grammar forces:

  * a summation body greedily absorbs the following multiplicative term, so a
    summation appearing as a non-final factor (or power base) is wrapped;
  * a negated right factor would lex as subtraction (`x -2`), so it is wrapped.
"""

from __future__ import annotations

from fractions import Fraction

from .nodes import (
    BinaryOp,
    Expr,
    Function,
    Indexed,
    Literal,
    Neg,
    Relation,
    RelationChain,
    Summation,
    Variable,
)

_REL = 0
_ADD = 1
_MUL = 2
_UNARY = 3
_POW = 4
_ATOM = 5

_REL_TOKENS = {"=": "=", "<": "<", ">": ">", "<=": "\\leq", ">=": "\\geq"}


def render_latex(e: Expr) -> str:
    return _render(e)


def precedence(e: Expr) -> int:
    if isinstance(e, (Relation, RelationChain)):
        return _REL
    if isinstance(e, BinaryOp):
        return {"+": _ADD, "-": _ADD, "*": _MUL, "/": _MUL, "^": _POW}[e.op]
    if isinstance(e, (Neg, Summation)):
        return _UNARY
    return _ATOM


def _absorbing_tail(e: Expr) -> bool:
    """True when the rendering of `e` ends in a summation body, which would
    swallow any factor rendered after it."""
    if isinstance(e, Summation):
        return True
    if isinstance(e, Neg):
        return _absorbing_tail(e.operand)
    if isinstance(e, BinaryOp) and e.op in "+-*/":
        return _absorbing_tail(e.right)
    return False


def literal_text(value: Fraction) -> str:
    """Exact decimal when one exists, else a p/q quotient."""
    if value.denominator == 1:
        return str(value.numerator)
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{value.numerator}/{value.denominator}"
    k = max(twos, fives)
    scaled = value.numerator * 10**k // value.denominator
    digits = str(scaled).rjust(k + 1, "0")
    return f"{digits[:-k]}.{digits[-k:]}"


def _paren(s: str) -> str:
    return f"({s})"


def _render(e: Expr) -> str:
    if isinstance(e, Literal):
        return literal_text(e.value)
    if isinstance(e, Variable):
        return e.name
    if isinstance(e, Indexed):
        return f"{e.base}_{{{_render(e.subscript)}}}"
    if isinstance(e, Neg):
        inner = _render(e.operand)
        if precedence(e.operand) < _UNARY:
            inner = _paren(inner)
        return f"-{inner}"
    if isinstance(e, Function):
        if e.name == "abs":
            inner = _render(e.arg)
            if _contains_abs(e.arg):
                return f"\\left|{inner}\\right|"
            return f"|{inner}|"
        return f"\\{e.name}{{{_render(e.arg)}}}"
    if isinstance(e, Summation):
        body = _render(e.body)
        if precedence(e.body) < _MUL:
            body = _paren(body)
        return f"\\sum_{{{e.index}={_render(e.lower)}}}^{{{_render(e.upper)}}} {body}"
    if isinstance(e, BinaryOp):
        return _render_binary(e)
    if isinstance(e, Relation):
        return f"{_rel_side(e.left)} {_REL_TOKENS[e.op]} {_rel_side(e.right)}"
    if isinstance(e, RelationChain):
        return " = ".join(_rel_side(p) for p in e.parts)
    raise TypeError(f"not an expression node: {e!r}")


def _rel_side(e: Expr) -> str:
    s = _render(e)
    return _paren(s) if precedence(e) == _REL else s


def _render_binary(e: BinaryOp) -> str:
    if e.op in "+-":
        left = _render(e.left)
        if precedence(e.left) < _ADD:
            left = _paren(left)
        right = _render(e.right)
        if precedence(e.right) <= _ADD:
            right = _paren(right)
        return f"{left} {e.op} {right}"
    if e.op in "*/":
        left = _render(e.left)
        if precedence(e.left) < _MUL or _absorbing_tail(e.left):
            left = _paren(left)
        right = _render(e.right)
        if precedence(e.right) <= _MUL or isinstance(e.right, Neg):
            right = _paren(right)
        if e.op == "/":
            return f"{left}/{right}"
        if right[0].isdigit() or right[0] == ".":
            return f"{left} \\cdot {right}"
        return f"{left} {right}"
    # '^': brace the exponent, parenthesize any non-atomic base
    base = _render(e.left)
    if precedence(e.left) < _ATOM:
        base = _paren(base)
    return f"{base}^{{{_render(e.right)}}}"


def _contains_abs(e: Expr) -> bool:
    from .nodes import walk

    return any(isinstance(n, Function) and n.name == "abs" for n in walk(e))
