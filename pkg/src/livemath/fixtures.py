"""The walkthrough fixture: a synthetic quadratic-equation page.

Reproduces the authoring demo page shape — a chained equation, the bindable
form `y = (x + 3)^{2} + 1`, and a plotted parabola with axes — as a complete
ingestion bundle. Axes are one pixel thick and 360 px long so the detected
frame lands on exact integers: the default calibration then gives 36 px per
world unit, the visible x range is exactly [-7.5, 2.5], and the 257-point
sample grid (step 10/256) hits integer world x values bit-exactly.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .vision import save_grayscale
from .vision.synthetic import SyntheticFigureSpec, generate_synthetic_figure

WALKTHROUGH_CHAIN = "y = x^2 + 6x + 10 = (x + 3)^2 + 1"
WALKTHROUGH_EQUATION = "y = (x + 3)^{2} + 1"
WALKTHROUGH_INEQUALITY = "1.55192 t - 2734.55 > 400"
WALKTHROUGH_SUMMATION = "\\sum_{i=1}^{20} i"

_CHAIN_TOKENS = ["y", "=", "x2", "+", "6x", "+", "10", "=", "(x", "+", "3)2", "+", "1"]
_EQUATION_TOKENS = ["y", "=", "(x", "+", "3)2", "+", "1"]
_INEQUALITY_TOKENS = ["1.55192", "t", "-", "2734.55", ">", "400"]
_SUMMATION_TOKENS = ["sumi=1", "20", "i"]

_CHAR_W = 9
_GAP = 7


def walkthrough_figure_spec() -> SyntheticFigureSpec:
    return SyntheticFigureSpec(
        equation="y = (x + 3)^2 + 1",
        curve_range=(-5.5, -0.5),
        width=800,
        height=600,
        origin=(370, 400),
        unit=36.0,
        x_axis_px=(100, 460),
        y_axis_px=(85, 400),
        thickness=1,
    )


def build_walkthrough_bundle(target_dir: str | Path) -> Path:
    """Write the four bundle files (words, formulas, boxes, image) into
    `target_dir` and return it."""
    target = Path(target_dir)
    target.mkdir(parents=True, exist_ok=True)

    image, _ = generate_synthetic_figure(walkthrough_figure_spec(), seed=7)

    words: list[dict] = []
    chain_box = _layout_words(image, _CHAIN_TOKENS, x=90, y=33, words=words)
    equation_box = _layout_words(image, _EQUATION_TOKENS, x=90, y=73, words=words)
    inequality_box = _layout_words(image, _INEQUALITY_TOKENS, x=90, y=440, words=words)
    summation_box = _layout_words(image, _SUMMATION_TOKENS, x=90, y=490, words=words)

    (target / "words.json").write_text(json.dumps(words, indent=1), encoding="utf-8")
    (target / "formulas.tex.json").write_text(
        json.dumps(
            [
                WALKTHROUGH_CHAIN,
                WALKTHROUGH_EQUATION,
                WALKTHROUGH_INEQUALITY,
                WALKTHROUGH_SUMMATION,
            ],
            indent=1,
        ),
        encoding="utf-8",
    )
    (target / "formula_boxes.json").write_text(
        json.dumps([chain_box, equation_box, inequality_box, summation_box], indent=1),
        encoding="utf-8",
    )
    save_grayscale(image, target / "page.png")
    return target


def _layout_words(image: np.ndarray, tokens: list[str], x: int, y: int, words: list[dict]) -> list[int]:
    """Place token boxes left to right, stamping glyph-sized ink blobs that
    the contour length filter will discard."""
    cursor = x
    height = 18
    for token in tokens:
        width = _CHAR_W * len(token)
        words.append({"text": token, "box": [cursor, y, width, height], "conf": 0.93})
        for i in range(len(token)):
            col = cursor + i * _CHAR_W + 1
            image[y + 3 : y + 15, col : col + 6] = 0
        cursor += width + _GAP
    total = cursor - _GAP - x
    return [x - 4, y - 3, total + 8, height + 6]
