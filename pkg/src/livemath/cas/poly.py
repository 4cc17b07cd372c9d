"""Exact dense-polynomial extraction in one target variable.

Coefficients are Fractions; any constant subtree must be rational-evaluable
(after the caller substitutes concrete values for other variables), which is
exactly the class the step-trace features promise to solve.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import LivemathError, UnboundVariableError
from ..expr import BinaryOp, Expr, Function, Indexed, Literal, Neg, Summation, Variable, free_variables
from .exact import NotRationalError, RationalEnv, rational_eval


class NotPolynomialError(LivemathError):
    """Expression is not a rational-coefficient polynomial in the target."""


Poly = list[Fraction]  # poly[k] is the coefficient of target**k


def poly_coefficients(e: Expr, target: str, max_degree: int, env: RationalEnv | None = None) -> Poly:
    """Dense coefficients [c0, c1, ...] of `e` as a polynomial in `target`.

    Raises NotPolynomialError when the tree is not polynomial in the target
    (or exceeds `max_degree`), including when a constant subtree has no exact
    rational value.
    """
    env = env or {}
    poly = _extract(e, target, env)
    if len(poly) > max_degree + 1:
        raise NotPolynomialError(f"degree {len(poly) - 1} exceeds {max_degree}")
    return _trim(poly)


def degree(poly: Poly) -> int:
    for k in range(len(poly) - 1, -1, -1):
        if poly[k] != 0:
            return k
    return 0


def _trim(poly: Poly) -> Poly:
    while len(poly) > 1 and poly[-1] == 0:
        poly = poly[:-1]
    return poly


def _const(value: Fraction) -> Poly:
    return [value]


def _extract(e: Expr, target: str, env: RationalEnv) -> Poly:
    if target not in free_variables(e):
        try:
            return _const(rational_eval(e, env))
        except (NotRationalError, UnboundVariableError) as exc:
            raise NotPolynomialError(str(exc)) from exc
    if isinstance(e, Variable):
        return [Fraction(0), Fraction(1)]
    if isinstance(e, Neg):
        return [-c for c in _extract(e.operand, target, env)]
    if isinstance(e, BinaryOp):
        if e.op in "+-":
            left = _extract(e.left, target, env)
            right = _extract(e.right, target, env)
            n = max(len(left), len(right))
            left += [Fraction(0)] * (n - len(left))
            right += [Fraction(0)] * (n - len(right))
            sign = 1 if e.op == "+" else -1
            return [a + sign * b for a, b in zip(left, right)]
        if e.op == "*":
            return _mul(_extract(e.left, target, env), _extract(e.right, target, env))
        if e.op == "/":
            denom = _extract(e.right, target, env)
            if len(denom) > 1:
                raise NotPolynomialError("target in a denominator")
            if denom[0] == 0:
                raise NotPolynomialError("division by zero")
            return [c / denom[0] for c in _extract(e.left, target, env)]
        if e.op == "^":
            exp = _extract(e.right, target, env)
            if len(exp) > 1:
                raise NotPolynomialError("target in an exponent")
            k = exp[0]
            if k.denominator != 1 or k < 0:
                raise NotPolynomialError("exponent must be a nonnegative integer")
            base = _extract(e.left, target, env)
            out = _const(Fraction(1))
            for _ in range(int(k)):
                out = _mul(out, base)
            return out
        raise ValueError(f"unknown operator {e.op!r}")
    if isinstance(e, (Function, Summation, Indexed)):
        raise NotPolynomialError(f"target under {type(e).__name__}")
    raise NotPolynomialError(f"unsupported node {type(e).__name__}")


def _mul(a: Poly, b: Poly) -> Poly:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return out
