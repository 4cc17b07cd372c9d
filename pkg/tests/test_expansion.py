import random
from fractions import Fraction

import pytest

from livemath.cas import expand_summation, rational_eval
from livemath.errors import NonIntegerBoundError
from livemath.expr import parse_latex


def test_sum_to_twenty():
    ex = expand_summation(parse_latex("\\sum_{i=1}^{20} i"))
    assert ex.rendered == "1 + 2 + \\cdots + 20"
    assert ex.exact_value == 210
    assert ex.elided


def test_symbolic_upper_bound():
    ex = expand_summation(parse_latex("\\sum_{i=1}^{n} a_i"))
    assert ex.rendered == "a_{1} + a_{2} + \\cdots + a_{n}"
    assert ex.term_count is None
    ex2 = expand_summation(parse_latex("\\sum_{i=1}^{n} i"))
    assert ex2.rendered == "1 + 2 + \\cdots + n"


def test_short_expansion_is_full():
    ex = expand_summation(parse_latex("\\sum_{i=1}^{3} i^2"))
    assert ex.rendered == "1 + 4 + 9"
    assert not ex.elided
    assert ex.exact_value == 14


def test_six_term_threshold():
    assert not expand_summation(parse_latex("\\sum_{i=1}^{6} i")).elided
    assert expand_summation(parse_latex("\\sum_{i=1}^{7} i")).elided


def test_env_resolves_upper_bound():
    ex = expand_summation(parse_latex("\\sum_{i=1}^{n} i"), {"n": 20.0})
    assert ex.rendered == "1 + 2 + \\cdots + 20"
    assert ex.exact_value == 210


def test_non_integer_bound():
    with pytest.raises(NonIntegerBoundError):
        expand_summation(parse_latex("\\sum_{i=1}^{n} i"), {"n": 2.5})


def test_empty_sum():
    ex = expand_summation(parse_latex("\\sum_{i=1}^{0} i"))
    assert ex.exact_value == 0
    assert ex.term_count == 0


def test_500_random_expansions_match_iteration():
    """Expansion value equals direct iterated evaluation, exactly."""
    rng = random.Random(424242)
    bodies = ["i", "i^2", "2i + 1", "i(i + 1)", "i^3 - i", "3", "i/2"]
    for _ in range(500):
        lo = rng.randint(-20, 20)
        hi = lo + rng.randint(-1, 40)
        body = rng.choice(bodies)
        s = parse_latex(f"\\sum_{{i={lo}}}^{{{hi}}} ({body})")
        ex = expand_summation(s)
        oracle = sum(
            (rational_eval(parse_latex(body), {"i": Fraction(k)}) for k in range(lo, hi + 1)),
            Fraction(0),
        )
        assert ex.exact_value == oracle


def test_large_bound_exact():
    ex = expand_summation(parse_latex("\\sum_{i=1}^{10000} i"))
    assert ex.exact_value == 10000 * 10001 // 2
