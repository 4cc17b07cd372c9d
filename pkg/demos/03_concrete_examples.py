"""
Concrete examples for abstract operators
========================================

Summations expand into explicit terms: short ones fully, long ones with an
ellipsis, symbolic bounds into the a_1 + a_2 + ... + a_n shape.
"""

from livemath.cas import expand_summation
from livemath.expr import parse_latex

for latex, env in [
    ("\\sum_{i=1}^{20} i", None),
    ("\\sum_{i=1}^{n} a_i", None),
    ("\\sum_{i=1}^{3} i^2", None),
    ("\\sum_{i=1}^{n} i", {"n": 12.0}),
]:
    expansion = expand_summation(parse_latex(latex), env)
    value = "" if expansion.exact_value is None else f"  =  {expansion.exact_value}"
    print(f"{latex:<28} ->  {expansion.rendered}{value}")

# Exactness scales: the expansion value is integer arithmetic, not floats.
big = expand_summation(parse_latex("\\sum_{i=1}^{10000} i"))
print("\nsum 1..10000 =", big.exact_value, "(exact), rendered as:", big.rendered)
