"""
Parsing textbook LaTeX into live expressions
============================================

The expression core reads the LaTeX subset that math OCR produces and gives
back a tree you can render, evaluate, and transform.
"""

from livemath.expr import (
    evaluate,
    free_variables,
    literal,
    parse_latex,
    render_latex,
    substitute,
)

# The walkthrough page presents a chained equation: three expressions
# asserted equal at once.
chain = parse_latex("y = x^2 + 6x + 10 = (x + 3)^2 + 1")
print("parsed a", type(chain).__name__, "with", len(chain.parts), "parts")
print("canonical form:", render_latex(chain))

# Evaluation is plain IEEE arithmetic over an environment.
vertex_form = parse_latex("(x + 3)^2 + 1")
print("value at the vertex x=-3:", evaluate(vertex_form, {"x": -3}))

# Summations evaluate by iterated addition; indices are properly bound.
gauss = parse_latex("\\sum_{i=1}^{20} i")
print("sum 1..20 =", evaluate(gauss, {}))
print("free variables of sum a_i:", free_variables(parse_latex("\\sum_{i=1}^{n} a_i")))

# Substitution is how dynamic values flow into formulas: replace a symbol,
# get a new tree, render it for display.
family = parse_latex("(x + a)^2 + b")
shifted = substitute(substitute(family, "a", literal(5)), "b", literal(4))
print("with a=5, b=4:", render_latex(shifted))

# The round-trip law: whatever the renderer writes, the parser reads back
# as the same tree.
assert parse_latex(render_latex(chain)) == chain
print("round trip holds")
