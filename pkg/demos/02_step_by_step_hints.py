"""
Step-by-step solving traces
===========================

Hints break a relation down one algebraic rule at a time, with exact
rational arithmetic so worked answers match the textbook's.
"""

from livemath.cas import factor_quadratic_steps, solve_linear_steps
from livemath.expr import parse_latex, render_latex


def show(trace):
    for step in trace.steps:
        rule = step.rule or "Given"
        print(f"  {rule:>18}: {render_latex(step.relation):<34} ({step.narration})")
    print()


# A linear inequality: note the exact quotient in the final bound, and the
# ten-significant-digit decimal in the narration.
print("solve 1.55192 t - 2734.55 > 400 for t:")
trace = solve_linear_steps(parse_latex("1.55192 t - 2734.55 > 400"), "t")
show(trace)
print("exact bound as a fraction:", trace.exact_bound)

# Dividing by a negative flips the inequality.
print("\nsolve -2x > 4 for x:")
show(solve_linear_steps(parse_latex("-2x > 4"), "x"))

# A factorable quadratic: factor, zero-product, roots in ascending order.
print("solve x^2 - 7x + 10 = 0:")
show(factor_quadratic_steps(parse_latex("x^2 - 7x + 10 = 0"), "x"))

# No rational roots: the quadratic formula runs with the discriminant shown.
print("solve x^2 - 2 = 0 (irrational roots):")
show(factor_quadratic_steps(parse_latex("x^2 - 2 = 0"), "x"))

# No real roots at all: the negative discriminant is reported, not hidden.
print("solve x^2 + 1 = 0:")
show(factor_quadratic_steps(parse_latex("x^2 + 1 = 0"), "x"))
