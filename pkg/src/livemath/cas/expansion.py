"""Concrete-example expansion of summations: 1 + 2 + ... + 20."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import DomainError, NonIntegerBoundError, UnboundVariableError
from ..expr import Environment, Expr, Literal, Summation, evaluate, render_latex, substitute
from .exact import NotRationalError, rational_eval
from .simplify import simplify

# expansions longer than this show 2 leading terms, an ellipsis, and the last
ELLIPSIS_THRESHOLD = 6
_LEADING_TERMS = 2


@dataclass(frozen=True)
class ExampleExpansion:
    source: Summation
    rendered: str
    term_count: int | None  # None when the upper bound stays symbolic
    exact_value: Fraction | None  # exact total for concrete integer arithmetic
    value: float | None  # float total whenever fully evaluable
    elided: bool


def expand_summation(s: Summation, env: Environment | None = None) -> ExampleExpansion:
    """Spell out leading and trailing terms of a summation.

    A symbolic upper bound yields the `a_1 + a_2 + \\cdots + a_n` shape;
    concrete bounds with more than 6 terms elide the middle. Raises
    NonIntegerBoundError when a bound evaluates to a non-integer.
    """
    env = env or {}
    rational_env = {name: Fraction(v) for name, v in env.items()}

    lower = _concrete_bound(s.lower, rational_env, "lower")
    if lower is None:
        raise NonIntegerBoundError("lower bound must be a concrete integer")
    upper = _concrete_bound(s.upper, rational_env, "upper", allow_symbolic=True)

    if upper is None:
        terms = [_term_text(s, k) for k in range(lower, lower + _LEADING_TERMS)]
        final = render_latex(simplify(substitute(s.body, s.index, s.upper)))
        rendered = " + ".join(terms) + " + \\cdots + " + final
        return ExampleExpansion(s, rendered, None, None, None, elided=True)

    count = upper - lower + 1
    if count < 0:
        raise DomainError("summation bounds inverted")
    if count == 0:
        return ExampleExpansion(s, "0", 0, Fraction(0), 0.0, elided=False)

    if count <= ELLIPSIS_THRESHOLD:
        rendered = " + ".join(_term_text(s, k) for k in range(lower, upper + 1))
        elided = False
    else:
        leading = [_term_text(s, k) for k in range(lower, lower + _LEADING_TERMS)]
        rendered = " + ".join(leading) + " + \\cdots + " + _term_text(s, upper)
        elided = True

    exact: Fraction | None
    try:
        exact = rational_eval(s, rational_env)
    except (NotRationalError, UnboundVariableError):
        exact = None
    value: float | None
    if exact is not None:
        value = float(exact)
    else:
        try:
            value = evaluate(s, env)
        except UnboundVariableError:
            value = None
    return ExampleExpansion(s, rendered, count, exact, value, elided=elided)


def _term_text(s: Summation, k: int) -> str:
    return render_latex(simplify(substitute(s.body, s.index, Literal(Fraction(k)))))


def _concrete_bound(e: Expr, env, what: str, allow_symbolic: bool = False) -> int | None:
    try:
        v = rational_eval(e, env)
    except (UnboundVariableError, NotRationalError):
        if allow_symbolic:
            return None
        raise NonIntegerBoundError(f"{what} bound is not concrete")
    if v.denominator != 1:
        raise NonIntegerBoundError(f"{what} bound {v} is not an integer")
    return int(v)
