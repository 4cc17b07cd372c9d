"""Shared test apparatus: the formula corpus and a random expression generator."""

from __future__ import annotations

import random
from fractions import Fraction

from livemath.expr import (
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

# 30 formulas: everything shown in the augmentation walkthrough and feature
# figures, padded with synthetic coverage of the supported grammar.
CORPUS = [
    "y = (x + 3)^{2} + 1",
    "y = x^2 + 6x + 10 = (x + 3)^2 + 1",
    "y = (x + a)^{n} + b",
    "(x + a)^2 + b",
    "\\sqrt{(x - h)^2 + (y - k)^2} = r^2",
    "a^2 + b^2 = c^2",
    "\\sum_{i=1}^{20} i",
    "\\sum_{i=1}^{n} a_i",
    "\\sum_{i=1}^{n} a_{i}",
    "1.55192 t - 2734.55 > 400",
    "x^2 - 7x + 10 = 0",
    "(x - 5)(x - 2) = 0",
    "y = \\sin{x}",
    "y = \\cos{x} + 1",
    "y = \\tan{x}",
    "y = \\sqrt{x}",
    "y = \\ln{x}",
    "y = |x - 2|",
    "(x - h)^2 + (y - k)^2 = r^2",
    "y = 1/x",
    "y = 2 x^3 - x + 0.5",
    "c^2 = a^2 + b^2 - 2 a b \\cos{t}",
    "x \\leq 5",
    "t \\geq 2019.79",
    "y < 3 x + 2",
    "\\sum_{k=1}^{10} k^2",
    "y = (x - 1)(x + 1)",
    "v = 4/3 \\cdot 3.14159 r^3",
    "y = -x^2 + 4",
    "s = 0.5 a t^2 + v t + h",
]

_VARS = "abchknrtxy"
_FUNCS = ("sqrt", "sin", "cos", "tan", "ln", "abs")


def random_literal(rng: random.Random) -> Literal:
    if rng.random() < 0.5:
        return Literal(Fraction(rng.randint(0, 99)))
    return Literal(Fraction(rng.randint(0, 9999), 10 ** rng.randint(1, 3)))


def random_expr(rng: random.Random, depth: int = 6) -> Expr:
    """Random tree of the supported node kinds, depth-bounded; literals are
    nonnegative terminating decimals so rendering is exact."""
    if depth <= 0:
        return random_literal(rng) if rng.random() < 0.5 else Variable(rng.choice(_VARS))
    kind = rng.randrange(10)
    if kind == 0:
        return random_literal(rng)
    if kind == 1:
        return Variable(rng.choice(_VARS))
    if kind == 2:
        return Neg(random_expr(rng, depth - 1))
    if kind <= 6:
        op = rng.choice("+-*/^")
        return BinaryOp(op, random_expr(rng, depth - 1), random_expr(rng, depth - 1))
    if kind == 7:
        return Function(rng.choice(_FUNCS), (random_expr(rng, depth - 1),))
    if kind == 8:
        return Indexed(rng.choice(_VARS), random_expr(rng, depth - 1))
    index = rng.choice("ijk")
    # small concrete bounds keep evaluation-based properties cheap: nested
    # sums over wide ranges would blow up iterated evaluation
    return Summation(
        index,
        Literal(Fraction(rng.randint(0, 5))),
        _small_bound(rng),
        random_expr(rng, depth - 1),
    )


def _small_bound(rng: random.Random) -> Expr:
    if rng.random() < 0.3:
        return Variable(rng.choice("nm"))
    return Literal(Fraction(rng.randint(0, 12)))


def random_top_level(rng: random.Random, depth: int = 6) -> Expr:
    """Like random_expr but sometimes relational, as parsed formulas are."""
    roll = rng.random()
    if roll < 0.2:
        op = rng.choice(["=", "<", ">", "<=", ">="])
        return Relation(op, random_expr(rng, depth - 1), random_expr(rng, depth - 1))
    if roll < 0.3:
        n = rng.randint(3, 4)
        return RelationChain(tuple(random_expr(rng, depth - 1) for _ in range(n)))
    return random_expr(rng, depth)
