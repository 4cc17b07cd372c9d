"""Seeded synthetic plot pages with exact ground truth.

These stand in for a scanned-textbook corpus: every image carries its true
axis frame, coordinate map, and per-stroke masks, so extraction accuracy can
be scored without hand labeling.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from ..cas import plot_relation, sample_curve
from ..expr import parse_latex
from ..geometry import Segment
from .mapping import CoordMap

_INK = 0
_GRID_INK = 90  # below the default binarize threshold, so gridlines compete
_PAPER = 255


@dataclass(frozen=True)
class SyntheticFigureSpec:
    equation: str                       # concrete relation, e.g. "y = (x - 3)^2 + 1"
    curve_range: tuple[float, float]    # world x extent of the drawn stroke
    width: int = 640
    height: int = 480
    origin: tuple[int, int] = (80, 420)
    unit: float = 40.0
    x_axis_px: tuple[int, int] = (50, 610)  # column extent
    y_axis_px: tuple[int, int] = (40, 420)  # row extent
    glyph_count: int = 0
    gridline_count: int = 0
    thickness: int = 2


@dataclass(frozen=True)
class SyntheticGroundTruth:
    x_axis: Segment
    y_axis: Segment
    origin: tuple[float, float]
    coord_map: CoordMap
    curve_mask: np.ndarray = field(repr=False)
    glyph_mask: np.ndarray = field(repr=False)
    grid_mask: np.ndarray = field(repr=False)


def generate_synthetic_figure(
    spec: SyntheticFigureSpec, seed: int = 0
) -> tuple[np.ndarray, SyntheticGroundTruth]:
    """Render the figure spec deterministically; same seed, identical bytes.

    The curve is kept clear of the axes (the generator raises when a layout
    would merge strokes into one component, which would invalidate the ground
    truth); glyph noise is rejection-placed with a 3 px clearance.
    """
    rng = np.random.RandomState(seed)
    h, w, t = spec.height, spec.width, spec.thickness
    canvas = np.full((h, w), _PAPER, dtype=np.uint8)
    ox, oy = spec.origin

    # axes
    x0, x1 = spec.x_axis_px
    y0, y1 = spec.y_axis_px
    if not (x0 <= ox <= x1 and y0 <= oy <= y1):
        raise ValueError("origin must lie on both axes")
    canvas[oy : oy + t, x0 : x1 + 1] = _INK
    canvas[y0 : y1 + 1, ox : ox + t] = _INK
    axis_mask = canvas == _INK
    protected = _dilate(axis_mask, 2)

    coord_map = CoordMap((float(ox), float(oy)), spec.unit, spec.unit)

    # curve
    curve_mask = np.zeros_like(axis_mask)
    rel = plot_relation(parse_latex(spec.equation))
    samples = max(257, 2 * (x1 - x0))
    for polyline in sample_curve(rel, {}, spec.curve_range, n=samples):
        pixel_pts = [coord_map.world_to_pixel(px, py) for px, py in polyline.points]
        pairs = list(zip(pixel_pts, pixel_pts[1:]))
        if polyline.closed:
            pairs.append((pixel_pts[-1], pixel_pts[0]))
        for (ax, ay), (bx, by) in pairs:
            _draw_segment(curve_mask, ax, ay, bx, by, t)
    if not curve_mask.any():
        raise ValueError("curve stroke is empty; check curve_range")
    rows, cols = np.nonzero(curve_mask)
    if rows.min() < 1 or rows.max() >= h - 1 or cols.min() < 1 or cols.max() >= w - 1:
        raise ValueError("curve leaves the canvas; shrink curve_range")
    if (protected & _dilate(curve_mask, 1)).any():
        raise ValueError("curve touches the axes; adjust the spec placement")
    canvas[curve_mask] = _INK

    # gridlines: strictly shorter than the axes (<= length / 1.6) with a gap
    grid_mask = np.zeros_like(axis_mask)
    if spec.gridline_count:
        glen = int(min(x1 - x0, y1 - y0) / 1.6)
        for k in range(1, spec.gridline_count + 1):
            col = int(round(ox + k * spec.unit))
            if col + 1 >= x1 - 2:
                break
            top = max(y0 + 2, oy - 4 - glen)
            grid_mask[top : oy - 3, col] = True
        for k in range(1, spec.gridline_count + 1):
            row = int(round(oy - k * spec.unit))
            if row <= y0 + 2:
                break
            grid_mask[row, ox + t + 3 : min(ox + t + 3 + glen, x1 - 2)] = True
        grid_mask &= ~_dilate(axis_mask, 2)
        canvas[grid_mask] = _GRID_INK

    # glyph noise: small text-sized blobs with clearance from every stroke
    glyph_mask = np.zeros_like(axis_mask)
    occupied = _dilate(canvas < 128, 3)
    placed = 0
    attempts = 0
    while placed < spec.glyph_count and attempts < spec.glyph_count * 60:
        attempts += 1
        gh, gw = int(rng.randint(5, 9)), int(rng.randint(3, 7))
        r = int(rng.randint(1, h - gh - 1))
        c = int(rng.randint(1, w - gw - 1))
        if occupied[r : r + gh, c : c + gw].any():
            continue
        pattern = rng.rand(gh, gw) < 0.5
        if pattern.sum() < 4:
            continue
        glyph_mask[r : r + gh, c : c + gw] |= pattern
        occupied[max(0, r - 3) : r + gh + 3, max(0, c - 3) : c + gw + 3] = True
        placed += 1
    canvas[glyph_mask] = _INK

    truth = SyntheticGroundTruth(
        x_axis=Segment(float(x0), float(oy), float(x1), float(oy)),
        y_axis=Segment(float(ox), float(y0), float(ox), float(y1)),
        origin=(float(ox), float(oy)),
        coord_map=coord_map,
        curve_mask=curve_mask,
        glyph_mask=glyph_mask,
        grid_mask=grid_mask,
    )
    return canvas, truth


def accuracy_corpus() -> list[tuple[SyntheticFigureSpec, int]]:
    """The 50-image evaluation corpus: 25 clean, 25 with glyph noise
    (10-40 glyphs, about half also carrying gridlines)."""
    equations = [
        ("y = (x - 3)^2 + 1", (1.2, 4.8)),
        ("y = 0.5 x + 1", (0.5, 6.0)),
        ("y = \\sin{x} + 2.5", (0.5, 6.5)),
        ("y = \\sqrt{x} + 0.8", (0.4, 6.0)),
        ("y = 0.1 (x - 3)^3 + 2.5", (0.8, 5.2)),
        ("y = 4/x", (0.9, 6.0)),
        ("y = 2 \\cos{x} + 3.2", (0.5, 6.3)),
        ("y = (x - 2.5)^2 + 0.7", (1.0, 4.0)),
        ("y = 0.3 x + 2", (0.4, 6.2)),
        ("y = \\sqrt{x + 1} + 1.2", (0.3, 5.8)),
    ]
    layout = np.random.RandomState(20240901)
    corpus: list[tuple[SyntheticFigureSpec, int]] = []
    for i in range(50):
        eq, rng_range = equations[i % len(equations)]
        unit = float(layout.choice([38.0, 42.0, 46.0, 50.0]))
        ox = int(layout.randint(70, 110))
        oy = int(layout.randint(400, 440))
        spec = SyntheticFigureSpec(
            equation=eq,
            curve_range=rng_range,
            origin=(ox, oy),
            unit=unit,
            x_axis_px=(ox - int(layout.randint(10, 30)), 610),
            y_axis_px=(40, oy + int(layout.randint(0, 18))),
            glyph_count=0 if i < 25 else int(10 + layout.randint(0, 31)),
            gridline_count=0 if i < 25 else (3 if i % 2 else 0),
        )
        corpus.append((spec, 1000 + i))
    return corpus


def _dilate(mask: np.ndarray, radius: int) -> np.ndarray:
    from scipy import ndimage

    if radius <= 0:
        return mask.copy()
    size = 2 * radius + 1
    return ndimage.binary_dilation(mask, structure=np.ones((size, size), dtype=bool))


def _draw_segment(mask: np.ndarray, ax: float, ay: float, bx: float, by: float, thickness: int) -> None:
    """Stamp a thick line by dense sampling (deterministic, no AA)."""
    h, w = mask.shape
    steps = int(max(abs(bx - ax), abs(by - ay)) * 2) + 1
    for s in range(steps + 1):
        f = s / steps
        x = ax + (bx - ax) * f
        y = ay + (by - ay) * f
        c = int(round(x))
        r = int(round(y))
        r2 = min(max(r, 0), h - 1)
        c2 = min(max(c, 0), w - 1)
        mask[r2 : r2 + thickness, c2 : c2 + thickness] = True
