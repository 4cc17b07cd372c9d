import random
from fractions import Fraction

import pytest

from livemath.cas import (
    SOLUTION,
    factor_quadratic_steps,
    solve_linear_steps,
    step_membership,
)
from livemath.errors import NotLinearError, NotQuadraticError, TargetAbsentError
from livemath.expr import evaluate, parse_latex, render_latex


def _exact_bound_oracle(a: str, b: str) -> Fraction:
    return Fraction(a) / Fraction(b)


def test_inequality_trace_matches_worked_example():
    trace = solve_linear_steps(parse_latex("1.55192 t - 2734.55 > 400"), "t")
    rendered = [render_latex(s.relation) for s in trace.steps]
    assert rendered[0] == "1.55192 t - 2734.55 > 400"
    assert "1.55192 t > 3134.55" in rendered
    assert rendered[-1] == "t > 3134.55/1.55192"
    assert trace.final.rule == SOLUTION
    # exact-rational oracle, compared to 10 significant digits
    oracle = _exact_bound_oracle("3134.55", "1.55192")
    assert trace.exact_bound == oracle
    assert f"{float(trace.exact_bound):.10g}" == f"{float(oracle):.10g}"


def test_trivial_single_step():
    trace = solve_linear_steps(parse_latex("x + 0 = 5"), "x")
    assert len(trace.steps) == 2  # given, then the solution
    assert render_latex(trace.final.relation) == "x = 5"


def test_negative_divisor_flips():
    trace = solve_linear_steps(parse_latex("-2x > 4"), "x")
    assert render_latex(trace.final.relation) == "x < -2"
    # sign-check oracle per the direction-flip contract
    assert step_membership(trace.final, "x", -3.0)
    assert not step_membership(trace.final, "x", 0.0)


def test_target_on_both_sides():
    trace = solve_linear_steps(parse_latex("3x + 1 = x + 9"), "x")
    assert render_latex(trace.final.relation) == "x = 4"


def test_reciprocal_coefficient_multiplies():
    trace = solve_linear_steps(parse_latex("0.5 x = 3"), "x")
    rules = [s.rule for s in trace.steps]
    assert "MultiplyBothSides" in rules
    assert render_latex(trace.final.relation) == "x = 6"


def test_linear_errors():
    with pytest.raises(TargetAbsentError):
        solve_linear_steps(parse_latex("a + 1 = 2"), "x")
    with pytest.raises(NotLinearError):
        solve_linear_steps(parse_latex("x^2 = 4"), "x")
    with pytest.raises(NotLinearError):
        solve_linear_steps(parse_latex("\\sin{x} = 0"), "x")
    with pytest.raises(NotLinearError):
        solve_linear_steps(parse_latex("x + 1 = x + 1"), "x")


def test_quadratic_factoring_exact():
    trace = factor_quadratic_steps(parse_latex("x^2 - 7x + 10 = 0"), "x")
    rendered = [render_latex(s.relation) for s in trace.steps]
    assert "(x - 5) (x - 2) = 0" in rendered
    roots = sorted(evaluate(r, {}) for r in trace.final.solutions)
    assert roots == [2.0, 5.0]


def test_double_root_reported_once():
    trace = factor_quadratic_steps(parse_latex("x^2 = 0"), "x")
    assert [evaluate(r, {}) for r in trace.final.solutions] == [0.0]
    assert "multiplicity 2" in trace.final.narration


def test_no_real_solutions_shows_discriminant():
    trace = factor_quadratic_steps(parse_latex("x^2 + 1 = 0"), "x")
    assert trace.final.solutions == ()
    assert "-4" in trace.final.narration
    # oracle: b^2 - 4ac for x^2 + 1 = 0
    assert Fraction(0) ** 2 - 4 * Fraction(1) * Fraction(1) == Fraction(-4)


def test_irrational_roots_satisfy_equation():
    trace = factor_quadratic_steps(parse_latex("x^2 - 2 = 0"), "x")
    assert len(trace.final.solutions) == 2
    for root in trace.final.solutions:
        value = evaluate(root, {})
        assert abs(value * value - 2) <= 1e-9


def test_non_monic_with_rhs():
    trace = factor_quadratic_steps(parse_latex("2 x^2 = 14 x - 20"), "x")
    roots = sorted(evaluate(r, {}) for r in trace.final.solutions)
    assert roots == [2.0, 5.0]


def test_quadratic_errors():
    with pytest.raises(NotQuadraticError):
        factor_quadratic_steps(parse_latex("x^3 = 0"), "x")
    with pytest.raises(NotQuadraticError):
        factor_quadratic_steps(parse_latex("x + 1 = 0"), "x")
    with pytest.raises(NotQuadraticError):
        factor_quadratic_steps(parse_latex("x^2 > 0"), "x")


def _assert_sound(trace, target):
    """Step soundness: consecutive steps keep the same solution set on a
    64-point sample of the target's axis."""
    rng = random.Random(hash(render_latex(trace.steps[0].relation)) & 0xFFFF)
    samples = [rng.uniform(-1e3, 1e3) for _ in range(60)]
    # include the announced solutions so equalities are actually exercised
    for step in trace.steps:
        for root in step.solutions or ():
            samples.append(evaluate(root, {}))
    samples = samples[:64]
    for before, after in zip(trace.steps, trace.steps[1:]):
        for v in samples:
            assert step_membership(before, target, v) == step_membership(after, target, v), (
                render_latex(before.relation),
                render_latex(after.relation),
                v,
            )


@pytest.mark.parametrize(
    "latex,target",
    [
        ("1.55192 t - 2734.55 > 400", "t"),
        ("-2x > 4", "x"),
        ("3x + 1 = x + 9", "x"),
        ("0.5 x = 3", "x"),
        ("7 - 2x \\leq 1", "x"),
        ("x + 0 = 5", "x"),
    ],
)
def test_linear_step_soundness(latex, target):
    _assert_sound(solve_linear_steps(parse_latex(latex), target), target)


@pytest.mark.parametrize(
    "latex",
    [
        "x^2 - 7x + 10 = 0",
        "x^2 = 0",
        "x^2 + 1 = 0",
        "x^2 - 2 = 0",
        "2 x^2 = 14 x - 20",
        "x^2 + 3x = 10",
    ],
)
def test_quadratic_step_soundness(latex):
    _assert_sound(factor_quadratic_steps(parse_latex(latex), "x"), "x")


def test_quadratic_roots_satisfy_original():
    rng = random.Random(7)
    for _ in range(50):
        a = rng.choice([1, 2, 3, -1])
        r1, r2 = rng.randint(-9, 9), rng.randint(-9, 9)
        latex = f"{a} x^2 - {a * (r1 + r2)} x + {a * r1 * r2} = 0"
        rel = parse_latex(latex)
        trace = factor_quadratic_steps(rel, "x")
        for root in trace.final.solutions:
            x = evaluate(root, {})
            lhs = evaluate(rel.left, {"x": x})
            rhs = evaluate(rel.right, {"x": x})
            assert abs(lhs - rhs) <= 1e-9
