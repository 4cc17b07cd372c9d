from hypothesis import given
from hypothesis import strategies as st

from livemath.expr import normalize_ocr


def test_newline_and_space_repair():
    assert normalize_ocr("y = (x + 3)^{2}\n + 1") == "y = (x + 3)^{2} + 1"


def test_empty():
    assert normalize_ocr("") == ""


def test_trim_only():
    assert normalize_ocr("  a^2+b^2=c^2  ") == "a^2+b^2=c^2"


@given(st.text())
def test_idempotent(s):
    once = normalize_ocr(s)
    assert normalize_ocr(once) == once


@given(st.text())
def test_preserves_non_whitespace(s):
    out = normalize_ocr(s)
    assert [c for c in out if not c.isspace()] == [c for c in s if not c.isspace()]
