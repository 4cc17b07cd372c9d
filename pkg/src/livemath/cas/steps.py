"""Step-by-step solving traces for linear relations and rational quadratics.

Each step carries the full relation after one algebraic rule; arithmetic is
exact (Fractions) so worked answers match the textbook's. Traces open with
the given relation (rule None) and close with a Solution step.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import NotLinearError, NotQuadraticError, TargetAbsentError
from ..expr import (
    BinaryOp,
    Expr,
    Function,
    Literal,
    Neg,
    Relation,
    Variable,
    evaluate,
    free_variables,
    literal,
    relation_holds,
    render_latex,
)
from .exact import RationalEnv, _rational_sqrt
from .poly import NotPolynomialError, Poly, poly_coefficients

ADD_BOTH_SIDES = "AddBothSides"
SUBTRACT_BOTH_SIDES = "SubtractBothSides"
DIVIDE_BOTH_SIDES = "DivideBothSides"
MULTIPLY_BOTH_SIDES = "MultiplyBothSides"
COMBINE_LIKE_TERMS = "CombineLikeTerms"
FACTOR = "Factor"
ZERO_PRODUCT = "ZeroProduct"
SOLUTION = "Solution"

_FLIP = {"<": ">", ">": "<", "<=": ">=", ">=": "<="}


@dataclass(frozen=True)
class Step:
    relation: Relation
    rule: str | None  # None on the opening statement of the given relation
    operand: Expr | None
    narration: str
    solutions: tuple[Expr, ...] | None = None  # enumerated roots on Solution steps


@dataclass(frozen=True)
class StepTrace:
    target: str
    steps: tuple[Step, ...]
    exact_bound: Fraction | None = None  # isolated-side value for linear solves

    @property
    def final(self) -> Step:
        return self.steps[-1]


def step_membership(step: Step, target: str, value: float, tol: float = 1e-9) -> bool:
    """Whether `value` satisfies the step's solution set; Solution steps with
    enumerated roots compare against each root."""
    if step.solutions is not None:
        return any(abs(value - evaluate(root, {})) <= tol for root in step.solutions)
    return relation_holds(step.relation, {target: value}, tol)


def solve_linear_steps(rel: Relation, target: str, env: RationalEnv | None = None) -> StepTrace:
    """Isolate `target` in a degree-1 relation, one rule per step.

    Dividing or multiplying by a negative flips the inequality. Raises
    TargetAbsentError / NotLinearError outside the supported class.
    """
    if not isinstance(rel, Relation):
        raise NotLinearError(target, "chained relations are not solvable")
    if target not in free_variables(rel):
        raise TargetAbsentError(target)
    try:
        lhs = _pad(poly_coefficients(rel.left, target, 1, env))
        rhs = _pad(poly_coefficients(rel.right, target, 1, env))
    except NotPolynomialError as exc:
        raise NotLinearError(target, str(exc)) from exc

    steps = [Step(rel, None, None, "given")]
    op = rel.op
    a = lhs[1] - rhs[1]
    if a == 0:
        raise NotLinearError(target, "target cancels out")

    # put the target on the left only
    if rhs[1] != 0:
        move = _term(abs(rhs[1]), target)
        rule, word = (
            (SUBTRACT_BOTH_SIDES, "subtract") if rhs[1] > 0 else (ADD_BOTH_SIDES, "add")
        )
        lhs = [lhs[0], a]
        rhs = [rhs[0], Fraction(0)]
        steps.append(
            Step(
                _linear_relation(lhs, op, rhs, target),
                rule,
                move,
                f"{word} {render_latex(move)} on both sides",
            )
        )
    elif _linear_relation(lhs, op, rhs, target) != rel and not (
        lhs[0] == 0 and lhs[1] == 1
    ):
        steps.append(
            Step(
                _linear_relation(lhs, op, rhs, target),
                COMBINE_LIKE_TERMS,
                None,
                "combine like terms",
            )
        )

    # move the constant to the right
    if lhs[0] != 0:
        shift = lhs[0]
        rhs = [rhs[0] - shift, Fraction(0)]
        lhs = [Fraction(0), a]
        if shift > 0:
            rule, word = SUBTRACT_BOTH_SIDES, "subtract"
            operand = literal(shift)
        else:
            rule, word = ADD_BOTH_SIDES, "add"
            operand = literal(-shift)
        steps.append(
            Step(
                _linear_relation(lhs, op, rhs, target),
                rule,
                operand,
                f"{word} {render_latex(operand)} on both sides",
            )
        )

    bound = rhs[0] / a
    if a != 1:
        flipped = a < 0 and op in _FLIP
        if a < 0:
            op = _FLIP.get(op, op)
        if abs(a.numerator) == 1 and a.denominator > 1:
            factor = Fraction(a.denominator, a.numerator)
            rule = MULTIPLY_BOTH_SIDES
            operand = literal(factor)
            verb = f"multiply both sides by {render_latex(operand)}"
        else:
            rule = DIVIDE_BOTH_SIDES
            operand = literal(a)
            verb = f"divide both sides by {render_latex(operand)}"
        if flipped:
            verb += " (flipping the inequality)"
        rhs_expr = _bound_expr(rhs[0], a)
        final_rel = Relation(op, Variable(target), rhs_expr)
        steps.append(Step(final_rel, rule, operand, verb))
    else:
        final_rel = Relation(op, Variable(target), literal(bound))

    solutions = (literal(bound),) if op == "=" else None
    steps.append(
        Step(
            final_rel,
            SOLUTION,
            None,
            f"{target} {_op_text(op)} {float(bound):.10g}",
            solutions=solutions,
        )
    )
    return StepTrace(target, tuple(steps), exact_bound=bound)


def factor_quadratic_steps(rel: Relation, target: str, env: RationalEnv | None = None) -> StepTrace:
    """Solve `quadratic = 0` by factoring when rational roots exist, else by
    the quadratic formula with the exact discriminant shown."""
    if not isinstance(rel, Relation):
        raise NotQuadraticError(target, "chained relations are not solvable")
    if rel.op != "=":
        raise NotQuadraticError(target, "only equalities are factorable")
    if target not in free_variables(rel):
        raise TargetAbsentError(target)
    diff = BinaryOp("-", rel.left, rel.right)
    try:
        poly = poly_coefficients(diff, target, 2, env)
    except NotPolynomialError as exc:
        raise NotQuadraticError(target, str(exc)) from exc
    if len(poly) != 3 or poly[2] == 0:
        raise NotQuadraticError(target, "degree is not 2")

    steps = [Step(rel, None, None, "given")]
    if not _is_zero_literal(rel.right):
        steps.append(
            Step(
                Relation("=", _poly_expr(poly, target), Literal(Fraction(0))),
                SUBTRACT_BOTH_SIDES,
                rel.right,
                f"move {render_latex(rel.right)} to the left side",
            )
        )
    elif Relation("=", _poly_expr(poly, target), Literal(Fraction(0))) != rel:
        steps.append(
            Step(
                Relation("=", _poly_expr(poly, target), Literal(Fraction(0))),
                COMBINE_LIKE_TERMS,
                None,
                "combine like terms",
            )
        )

    if poly[2] != 1:
        divisor = poly[2]
        poly = [c / divisor for c in poly]
        steps.append(
            Step(
                Relation("=", _poly_expr(poly, target), Literal(Fraction(0))),
                DIVIDE_BOTH_SIDES,
                literal(divisor),
                f"divide both sides by {render_latex(literal(divisor))}",
            )
        )

    b, c = poly[1], poly[0]
    disc = b * b - 4 * c
    root = _rational_sqrt(disc) if disc >= 0 else None

    if disc < 0:
        steps.append(
            Step(
                steps[-1].relation,
                SOLUTION,
                literal(disc),
                f"discriminant {render_latex(literal(disc))} is negative: no real solutions",
                solutions=(),
            )
        )
        return StepTrace(target, tuple(steps))

    if root is not None:
        r1, r2 = sorted(((-b - root) / 2, (-b + root) / 2))
        if r1 == r2:
            factored = Relation(
                "=", BinaryOp("^", _factor_expr(target, r1), literal(2)), Literal(Fraction(0))
            )
            if factored != steps[-1].relation:
                steps.append(Step(factored, FACTOR, None, "factor the perfect square"))
            steps.append(
                Step(
                    Relation("=", Variable(target), literal(r1)),
                    SOLUTION,
                    None,
                    f"{target} = {float(r1):.10g} (double root, multiplicity 2)",
                    solutions=(literal(r1),),
                )
            )
        else:
            factored = Relation(
                "=",
                BinaryOp("*", _factor_expr(target, r2), _factor_expr(target, r1)),
                Literal(Fraction(0)),
            )
            steps.append(Step(factored, FACTOR, None, "factor the quadratic"))
            steps.append(
                Step(
                    factored,
                    ZERO_PRODUCT,
                    None,
                    f"a product is zero exactly when a factor is zero: "
                    f"{render_latex(_factor_expr(target, r2))} = 0 or "
                    f"{render_latex(_factor_expr(target, r1))} = 0",
                )
            )
            steps.append(
                Step(
                    Relation("=", Variable(target), literal(r1)),
                    SOLUTION,
                    None,
                    f"{target} = {float(r1):.10g}, {float(r2):.10g}",
                    solutions=(literal(r1), literal(r2)),
                )
            )
        return StepTrace(target, tuple(steps))

    # irrational real roots: quadratic formula with the discriminant shown
    sqrt_disc = Function("sqrt", (literal(disc),))
    lo = BinaryOp("/", BinaryOp("-", literal(-b), sqrt_disc), literal(2))
    hi = BinaryOp("/", BinaryOp("+", literal(-b), sqrt_disc), literal(2))
    steps.append(
        Step(
            Relation("=", Variable(target), hi),
            SOLUTION,
            literal(disc),
            f"quadratic formula with discriminant {render_latex(literal(disc))}: "
            f"{target} = ({render_latex(literal(-b))} ± \\sqrt{{{render_latex(literal(disc))}}})/2",
            solutions=(lo, hi),
        )
    )
    return StepTrace(target, tuple(steps))


# --- expression rebuilding helpers ---


def _pad(poly: Poly) -> list[Fraction]:
    out = list(poly) + [Fraction(0)] * (2 - len(poly))
    return out[:2]


def _term(coeff: Fraction, target: str) -> Expr:
    if coeff == 1:
        return Variable(target)
    if coeff == -1:
        return Neg(Variable(target))
    return BinaryOp("*", literal(coeff), Variable(target))


def _linear_side(const: Fraction, coeff: Fraction, target: str) -> Expr:
    if coeff == 0:
        return literal(const)
    head = _term(coeff, target)
    if const == 0:
        return head
    if const > 0:
        return BinaryOp("+", head, literal(const))
    return BinaryOp("-", head, literal(-const))


def _linear_relation(lhs: list[Fraction], op: str, rhs: list[Fraction], target: str) -> Relation:
    return Relation(op, _linear_side(lhs[0], lhs[1], target), _linear_side(rhs[0], rhs[1], target))


def _bound_expr(numerator: Fraction, denominator: Fraction) -> Expr:
    value = numerator / denominator
    if _terminating(value):
        return literal(value)
    return BinaryOp("/", literal(numerator), literal(denominator))


def _terminating(value: Fraction) -> bool:
    den = value.denominator
    for p in (2, 5):
        while den % p == 0:
            den //= p
    return den == 1


def _factor_expr(target: str, root: Fraction) -> Expr:
    if root == 0:
        return Variable(target)
    if root > 0:
        return BinaryOp("-", Variable(target), literal(root))
    return BinaryOp("+", Variable(target), literal(-root))


def _poly_expr(poly: Poly, target: str) -> Expr:
    """Descending-power textbook form, e.g. x^{2} - 7 x + 10."""
    parts: list[tuple[Fraction, int]] = [
        (coeff, k) for k, coeff in sorted(enumerate(poly), reverse=True) if coeff != 0
    ]
    if not parts:
        return Literal(Fraction(0))
    expr: Expr | None = None
    for coeff, k in parts:
        term = _power_term(abs(coeff), k, target)
        if expr is None:
            expr = Neg(term) if coeff < 0 else term
        else:
            expr = BinaryOp("-" if coeff < 0 else "+", expr, term)
    return expr


def _power_term(coeff: Fraction, k: int, target: str) -> Expr:
    if k == 0:
        return literal(coeff)
    base: Expr = Variable(target)
    if k > 1:
        base = BinaryOp("^", base, literal(k))
    if coeff == 1:
        return base
    return BinaryOp("*", literal(coeff), base)


def _is_zero_literal(e: Expr) -> bool:
    return isinstance(e, Literal) and e.value == 0


def _op_text(op: str) -> str:
    return {"=": "=", "<": "<", ">": ">", "<=": "≤", ">=": "≥"}[op]
