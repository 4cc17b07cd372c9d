"""Value-preserving simplification: constant folding, identity removal, and
like-term combining for single-variable polynomial shapes."""

from __future__ import annotations

from fractions import Fraction

from ..errors import DomainError
from ..expr import (
    BinaryOp,
    Expr,
    Function,
    Literal,
    Neg,
    Relation,
    RelationChain,
    Summation,
    Indexed,
    literal,
    render_latex,
)
from .exact import NotRationalError, rational_eval

_MAX_ROUNDS = 10


def simplify(e: Expr) -> Expr:
    """Rewrite to a simpler, value-identical tree; returns the input when no
    rule applies. Never raises: trees that defeat every rule pass through."""
    for _ in range(_MAX_ROUNDS):
        out = _simplify_once(e)
        if out == e:
            return out
        e = out
    return e


def _simplify_once(e: Expr) -> Expr:
    if isinstance(e, Relation):
        return Relation(e.op, _simplify_once(e.left), _simplify_once(e.right), span=e.span)
    if isinstance(e, RelationChain):
        return RelationChain(tuple(_simplify_once(p) for p in e.parts), span=e.span)
    if isinstance(e, (Literal,)) or not isinstance(
        e, (Neg, BinaryOp, Function, Summation, Indexed)
    ):
        return e

    # children first
    if isinstance(e, Neg):
        e = Neg(_simplify_once(e.operand), span=e.span)
    elif isinstance(e, BinaryOp):
        e = BinaryOp(e.op, _simplify_once(e.left), _simplify_once(e.right), span=e.span)
    elif isinstance(e, Function):
        e = Function(e.name, tuple(_simplify_once(a) for a in e.args), span=e.span)
    elif isinstance(e, Summation):
        e = Summation(
            e.index,
            _simplify_once(e.lower),
            _simplify_once(e.upper),
            _simplify_once(e.body),
            span=e.span,
        )
    elif isinstance(e, Indexed):
        e = Indexed(e.base, _simplify_once(e.subscript), span=e.span)

    folded = _fold_constant(e)
    if folded is not None:
        return folded
    e = _local_rules(e)
    if isinstance(e, BinaryOp) and e.op in "+-":
        combined = _combine_terms(e)
        if combined is not None:
            return combined
    return e


def _fold_constant(e: Expr) -> Expr | None:
    """Exact-fold all-constant subtrees whose value is rational."""
    if isinstance(e, Literal) or not isinstance(e, (Neg, BinaryOp, Function)):
        return None
    if not _constant_leaves_only(e):
        return None
    try:
        return literal(rational_eval(e))
    except (NotRationalError, DomainError):
        return None


def _constant_leaves_only(e: Expr) -> bool:
    if isinstance(e, Literal):
        return True
    if isinstance(e, Neg):
        return _constant_leaves_only(e.operand)
    if isinstance(e, BinaryOp):
        return _constant_leaves_only(e.left) and _constant_leaves_only(e.right)
    if isinstance(e, Function):
        return all(_constant_leaves_only(a) for a in e.args)
    return False


def _is_zero(e: Expr) -> bool:
    return isinstance(e, Literal) and e.value == 0


def _is_one(e: Expr) -> bool:
    return isinstance(e, Literal) and e.value == 1


def _local_rules(e: Expr) -> Expr:
    if isinstance(e, Neg) and isinstance(e.operand, Neg):
        return e.operand.operand
    if isinstance(e, Neg) and _is_zero(e.operand):
        return e.operand
    if not isinstance(e, BinaryOp):
        return e
    left, right = e.left, e.right
    if e.op == "+":
        if _is_zero(left):
            return right
        if _is_zero(right):
            return left
    elif e.op == "-":
        if _is_zero(right):
            return left
        if _is_zero(left):
            return Neg(right)
    elif e.op == "*":
        if _is_zero(left) or _is_zero(right):
            return Literal(Fraction(0))
        if _is_one(left):
            return right
        if _is_one(right):
            return left
    elif e.op == "/":
        if _is_one(right):
            return left
        if _is_zero(left) and not _is_zero(right):
            return Literal(Fraction(0))
    elif e.op == "^":
        if _is_one(right):
            return left
        if _is_zero(right):
            return Literal(Fraction(1))
    return e


def _combine_terms(e: BinaryOp) -> Expr | None:
    """Collect like terms across a +/- chain; None when nothing combines."""
    terms = _flatten_additive(e, Fraction(1))
    buckets: dict[str | None, Fraction] = {}
    shapes: dict[str | None, Expr | None] = {}
    order: list[str | None] = []
    for coeff, shape in terms:
        key = None if shape is None else render_latex(shape)
        if key not in buckets:
            buckets[key] = Fraction(0)
            shapes[key] = shape
            order.append(key)
        buckets[key] += coeff
    if len(order) == len(terms):
        return None
    rebuilt: Expr | None = None
    for key in order:
        coeff = buckets[key]
        if coeff == 0:
            continue
        term = _rebuild_term(abs(coeff), shapes[key])
        if rebuilt is None:
            rebuilt = Neg(term) if coeff < 0 else term
        else:
            rebuilt = BinaryOp("-" if coeff < 0 else "+", rebuilt, term)
    return rebuilt if rebuilt is not None else Literal(Fraction(0))


def _flatten_additive(e: Expr, sign: Fraction) -> list[tuple[Fraction, Expr | None]]:
    if isinstance(e, BinaryOp) and e.op in "+-":
        right_sign = -sign if e.op == "-" else sign
        return _flatten_additive(e.left, sign) + _flatten_additive(e.right, right_sign)
    if isinstance(e, Neg):
        return _flatten_additive(e.operand, -sign)
    coeff, shape = _split_coefficient(e)
    return [(sign * coeff, shape)]


def _split_coefficient(e: Expr) -> tuple[Fraction, Expr | None]:
    """Factor a term into (rational coefficient, residual shape or None)."""
    if isinstance(e, Literal):
        return e.value, None
    if isinstance(e, Neg):
        coeff, shape = _split_coefficient(e.operand)
        return -coeff, shape
    if isinstance(e, BinaryOp) and e.op == "*":
        lc, ls = _split_coefficient(e.left)
        rc, rs = _split_coefficient(e.right)
        if ls is None:
            return lc * rc, rs
        if rs is None:
            return lc * rc, ls
        return lc * rc, BinaryOp("*", ls, rs)
    if isinstance(e, BinaryOp) and e.op == "/" and isinstance(e.right, Literal) and e.right.value != 0:
        coeff, shape = _split_coefficient(e.left)
        return coeff / e.right.value, shape
    return Fraction(1), e


def _rebuild_term(coeff: Fraction, shape: Expr | None) -> Expr:
    if shape is None:
        return literal(coeff)
    if coeff == 1:
        return shape
    return BinaryOp("*", literal(coeff), shape)
