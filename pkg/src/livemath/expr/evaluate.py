"""Numeric evaluation and structural transforms over expression trees."""

from __future__ import annotations

import math

from ..errors import DomainError, UnboundVariableError
from .nodes import (
    BinaryOp,
    Environment,
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


def evaluate(e: Expr, env: Environment) -> float:
    """Evaluate to an IEEE double under `env`.

    Raises UnboundVariableError for free variables missing from `env` and
    DomainError for division by zero, sqrt/ln outside their domain,
    non-integer or inverted summation bounds, relations, and overflow.
    """
    if isinstance(e, Literal):
        return float(e.value)
    if isinstance(e, Variable):
        if e.name not in env:
            raise UnboundVariableError(e.name)
        return float(env[e.name])
    if isinstance(e, Neg):
        return -evaluate(e.operand, env)
    if isinstance(e, BinaryOp):
        left = evaluate(e.left, env)
        right = evaluate(e.right, env)
        try:
            if e.op == "+":
                return left + right
            if e.op == "-":
                return left - right
            if e.op == "*":
                return left * right
            if e.op == "/":
                if right == 0.0:
                    raise DomainError("division by zero")
                return left / right
            if e.op == "^":
                if left < 0.0 and right != int(right):
                    raise DomainError("negative base with fractional exponent")
                return left**right
        except OverflowError as exc:
            raise DomainError("overflow") from exc
        except ZeroDivisionError as exc:
            raise DomainError("division by zero") from exc
        raise ValueError(f"unknown operator {e.op!r}")
    if isinstance(e, Function):
        arg = evaluate(e.arg, env)
        if e.name == "sqrt":
            if arg < 0.0:
                raise DomainError("square root of a negative number")
            return math.sqrt(arg)
        if e.name == "sin":
            return math.sin(arg)
        if e.name == "cos":
            return math.cos(arg)
        if e.name == "tan":
            return math.tan(arg)
        if e.name == "ln":
            if arg <= 0.0:
                raise DomainError("logarithm of a non-positive number")
            return math.log(arg)
        if e.name == "abs":
            return abs(arg)
        raise ValueError(f"unknown function {e.name!r}")
    if isinstance(e, Summation):
        lo = _integer_bound(evaluate(e.lower, env), "lower")
        hi = _integer_bound(evaluate(e.upper, env), "upper")
        if lo > hi + 1:
            raise DomainError(f"summation bounds inverted: {lo} > {hi} + 1")
        total = 0.0
        inner = dict(env)
        for k in range(lo, hi + 1):
            inner[e.index] = float(k)
            total += evaluate(e.body, inner)
        return total
    if isinstance(e, Indexed):
        k = _integer_bound(evaluate(e.subscript, env), "subscript")
        name = f"{e.base}_{k}"
        if name not in env:
            raise UnboundVariableError(name)
        return float(env[name])
    if isinstance(e, (Relation, RelationChain)):
        raise DomainError("relations are not numeric")
    raise TypeError(f"not an expression node: {e!r}")


def _integer_bound(value: float, what: str) -> int:
    nearest = round(value)
    if abs(value - nearest) > 1e-9:
        raise DomainError(f"{what} bound {value} is not an integer")
    return int(nearest)


def substitute(e: Expr, name: str, replacement: Expr) -> Expr:
    """Replace every free occurrence of Variable(name); the input is unchanged.

    Summation indices shadow: occurrences of the index inside the body are
    bound and never substituted (the bounds live in the enclosing scope and
    are substituted normally). An indexed family's base is renamed only when
    the replacement is itself a variable.
    """
    if isinstance(e, Variable):
        return replacement if e.name == name else e
    if isinstance(e, Literal):
        return e
    if isinstance(e, Neg):
        return Neg(substitute(e.operand, name, replacement), span=e.span)
    if isinstance(e, BinaryOp):
        return BinaryOp(
            e.op,
            substitute(e.left, name, replacement),
            substitute(e.right, name, replacement),
            span=e.span,
        )
    if isinstance(e, Function):
        return Function(e.name, tuple(substitute(a, name, replacement) for a in e.args), span=e.span)
    if isinstance(e, Summation):
        lower = substitute(e.lower, name, replacement)
        upper = substitute(e.upper, name, replacement)
        body = e.body if e.index == name else substitute(e.body, name, replacement)
        return Summation(e.index, lower, upper, body, span=e.span)
    if isinstance(e, Indexed):
        base = e.base
        if e.base == name and isinstance(replacement, Variable):
            base = replacement.name
        return Indexed(base, substitute(e.subscript, name, replacement), span=e.span)
    if isinstance(e, Relation):
        return Relation(
            e.op,
            substitute(e.left, name, replacement),
            substitute(e.right, name, replacement),
            span=e.span,
        )
    if isinstance(e, RelationChain):
        return RelationChain(tuple(substitute(p, name, replacement) for p in e.parts), span=e.span)
    raise TypeError(f"not an expression node: {e!r}")


def substitute_all(e: Expr, values: dict[str, Expr]) -> Expr:
    for name, replacement in values.items():
        e = substitute(e, name, replacement)
    return e


def free_variables(e: Expr) -> set[str]:
    """Unbound variable names; summation indices are excluded, an indexed
    family contributes its base name."""
    if isinstance(e, Variable):
        return {e.name}
    if isinstance(e, Literal):
        return set()
    if isinstance(e, Neg):
        return free_variables(e.operand)
    if isinstance(e, BinaryOp):
        return free_variables(e.left) | free_variables(e.right)
    if isinstance(e, Function):
        out: set[str] = set()
        for a in e.args:
            out |= free_variables(a)
        return out
    if isinstance(e, Summation):
        return (
            free_variables(e.lower)
            | free_variables(e.upper)
            | (free_variables(e.body) - {e.index})
        )
    if isinstance(e, Indexed):
        return {e.base} | free_variables(e.subscript)
    if isinstance(e, Relation):
        return free_variables(e.left) | free_variables(e.right)
    if isinstance(e, RelationChain):
        out = set()
        for p in e.parts:
            out |= free_variables(p)
        return out
    raise TypeError(f"not an expression node: {e!r}")


def relation_holds(rel: Relation | RelationChain, env: Environment, tol: float = 1e-9) -> bool:
    """Truth of a relation under `env`; equalities compare within `tol`."""
    if isinstance(rel, RelationChain):
        return all(relation_holds(r, env, tol) for r in rel.pairwise())
    left = evaluate(rel.left, env)
    right = evaluate(rel.right, env)
    if rel.op == "=":
        return abs(left - right) <= tol
    if rel.op == "<":
        return left < right
    if rel.op == ">":
        return left > right
    if rel.op == "<=":
        return left <= right
    if rel.op == ">=":
        return left >= right
    raise ValueError(f"unknown relation operator {rel.op!r}")
