"""Exact rational evaluation, used wherever step traces promise exactness."""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import DomainError, LivemathError, UnboundVariableError
from ..expr import (
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

RationalEnv = dict[str, Fraction]


class NotRationalError(LivemathError):
    """The expression has no exact rational value (trig, irrational root, ...)."""


def rational_eval(e: Expr, env: RationalEnv | None = None) -> Fraction:
    """Evaluate to an exact Fraction; floats never enter the computation.

    Raises NotRationalError when exactness is impossible (transcendental
    functions, non-square square roots, fractional exponents) and DomainError
    for division by zero or bad summation bounds.
    """
    env = env or {}
    if isinstance(e, Literal):
        return e.value
    if isinstance(e, Variable):
        if e.name not in env:
            raise UnboundVariableError(e.name)
        return env[e.name]
    if isinstance(e, Neg):
        return -rational_eval(e.operand, env)
    if isinstance(e, BinaryOp):
        left = rational_eval(e.left, env)
        right = rational_eval(e.right, env)
        if e.op == "+":
            return left + right
        if e.op == "-":
            return left - right
        if e.op == "*":
            return left * right
        if e.op == "/":
            if right == 0:
                raise DomainError("division by zero")
            return left / right
        if e.op == "^":
            if right.denominator != 1:
                raise NotRationalError("fractional exponent")
            k = right.numerator
            if left == 0 and k < 0:
                raise DomainError("division by zero")
            # refuse exact powers whose digit count would explode
            bits = left.numerator.bit_length() + left.denominator.bit_length()
            if abs(k) > 512 or bits * abs(k) > 100_000:
                raise NotRationalError("exponent too large for exact arithmetic")
            return left**k
        raise ValueError(f"unknown operator {e.op!r}")
    if isinstance(e, Function):
        if e.name == "abs":
            return abs(rational_eval(e.arg, env))
        if e.name == "sqrt":
            arg = rational_eval(e.arg, env)
            if arg < 0:
                raise DomainError("square root of a negative number")
            root = _rational_sqrt(arg)
            if root is None:
                raise NotRationalError("square root is irrational")
            return root
        raise NotRationalError(f"{e.name} has no rational value")
    if isinstance(e, Summation):
        lo = rational_eval(e.lower, env)
        hi = rational_eval(e.upper, env)
        if lo.denominator != 1 or hi.denominator != 1:
            raise DomainError("summation bounds must be integers")
        if lo > hi + 1:
            raise DomainError("summation bounds inverted")
        total = Fraction(0)
        inner = dict(env)
        for k in range(int(lo), int(hi) + 1):
            inner[e.index] = Fraction(k)
            total += rational_eval(e.body, inner)
        return total
    if isinstance(e, Indexed):
        sub = rational_eval(e.subscript, env)
        if sub.denominator != 1:
            raise DomainError("subscript must be an integer")
        name = f"{e.base}_{int(sub)}"
        if name not in env:
            raise UnboundVariableError(name)
        return env[name]
    if isinstance(e, (Relation, RelationChain)):
        raise DomainError("relations are not numeric")
    raise TypeError(f"not an expression node: {e!r}")


def _rational_sqrt(value: Fraction) -> Fraction | None:
    num = math.isqrt(value.numerator)
    den = math.isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None
