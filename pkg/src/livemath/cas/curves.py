"""Curve sampling for plot overlays: explicit y = f(x) graphs and circles."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import DomainError, NotPlottableError, UnboundVariableError
from ..expr import (
    BinaryOp,
    Environment,
    Expr,
    Function,
    Literal,
    Relation,
    RelationChain,
    Variable,
    evaluate,
    free_variables,
    substitute,
)
from .poly import NotPolynomialError, poly_coefficients

DEFAULT_SAMPLES = 257


@dataclass(frozen=True)
class Polyline:
    """World-unit vertex chain; closed polylines repeat no endpoint."""

    points: tuple[tuple[float, float], ...]
    closed: bool = False


def plot_relation(e: Expr) -> Relation:
    """The relation a formula contributes to a plot; a chain a = b = c plots
    its outermost pair (first = last)."""
    if isinstance(e, Relation):
        return e
    if isinstance(e, RelationChain):
        return Relation("=", e.parts[0], e.parts[-1])
    raise NotPlottableError("only relations can be plotted")


def sample_curve(
    rel: Relation,
    env: Environment,
    x_range: tuple[float, float],
    n: int = DEFAULT_SAMPLES,
    x: str = "x",
    y: str = "y",
) -> list[Polyline]:
    """Sample a relation into world-unit polylines.

    Explicit graphs (a lone `y` on one side) get `n` uniform x samples;
    points where the function is undefined split the result into segments.
    Circles (x-h)^2 + (y-k)^2 = r^2 are sampled parametrically as one closed
    polyline. Anything else raises NotPlottableError.
    """
    if rel.op != "=":
        raise NotPlottableError("only equalities are plottable")
    if n < 2:
        raise ValueError("need at least 2 samples")
    bound = _substitute_env(rel, env, keep={x, y})

    circle = _match_circle(bound, x, y)
    if circle is not None:
        h, k, r = circle
        points = []
        for i in range(n):
            theta = 2.0 * math.pi * i / n
            points.append((h + r * math.cos(theta), k + r * math.sin(theta)))
        return [Polyline(tuple(points), closed=True)]

    f = _explicit_side(bound, x, y)
    if f is None:
        raise NotPlottableError(f"relation is neither explicit in {y} nor a circle")

    lo, hi = x_range
    if not (hi > lo):
        raise ValueError("empty x range")
    segments: list[list[tuple[float, float]]] = []
    current: list[tuple[float, float]] = []
    for i in range(n):
        xv = lo + (hi - lo) * i / (n - 1)
        try:
            yv = evaluate(f, {x: xv})
        except (DomainError, UnboundVariableError):
            yv = math.nan
        if math.isfinite(yv):
            current.append((xv, yv))
        elif current:
            segments.append(current)
            current = []
    if current:
        segments.append(current)
    polylines = [Polyline(tuple(seg)) for seg in segments if len(seg) >= 2]
    if not polylines:
        raise NotPlottableError("no finite samples in range")
    return polylines


def _substitute_env(rel: Relation, env: Environment, keep: set[str]) -> Relation:
    out: Expr = rel
    for name, value in sorted(env.items()):
        if name in keep:
            continue
        out = substitute(out, name, Literal(Fraction(value)))
    assert isinstance(out, Relation)
    return out


def _explicit_side(rel: Relation, x: str, y: str) -> Expr | None:
    for side, other in ((rel.left, rel.right), (rel.right, rel.left)):
        if isinstance(side, Variable) and side.name == y:
            extra = free_variables(other) - {x}
            if not extra:
                return other
    return None


def _match_circle(rel: Relation, x: str, y: str) -> tuple[float, float, float] | None:
    """Recognize (x-h)^2 + (y-k)^2 = c (and sqrt(...) = c); returns (h, k, r)."""
    for lhs, rhs in ((rel.left, rel.right), (rel.right, rel.left)):
        if free_variables(rhs):
            continue
        try:
            c = evaluate(rhs, {})
        except (DomainError, UnboundVariableError):
            continue
        body = lhs
        if isinstance(body, Function) and body.name == "sqrt":
            body = body.arg
            if c < 0:
                raise NotPlottableError("sqrt of squared distances cannot be negative")
            c = c * c
        centers = _sum_of_two_squares(body, x, y)
        if centers is None:
            continue
        if c < 0:
            raise NotPlottableError("negative squared radius: no real points")
        return centers[0], centers[1], math.sqrt(c)
    return None


def _sum_of_two_squares(e: Expr, x: str, y: str) -> tuple[float, float] | None:
    if not (isinstance(e, BinaryOp) and e.op == "+"):
        return None
    h = _square_center(e.left, x)
    k = _square_center(e.right, y)
    if h is not None and k is not None:
        return h, k
    h = _square_center(e.right, x)
    k = _square_center(e.left, y)
    if h is not None and k is not None:
        return h, k
    return None


def _square_center(e: Expr, var: str) -> float | None:
    """For (var - h)^2 shapes (unit leading coefficient), the center h."""
    if not (isinstance(e, BinaryOp) and e.op == "^"):
        return None
    if not (isinstance(e.right, Literal) and e.right.value == 2):
        return None
    if free_variables(e.left) != {var}:
        return None
    try:
        poly = poly_coefficients(e.left, var, 1)
    except NotPolynomialError:
        return None
    if len(poly) != 2 or abs(poly[1]) != 1:
        return None
    return float(-poly[0] / poly[1])
