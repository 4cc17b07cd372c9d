"""Border following over 8-connected ink components.

Components come from a standard two-pass labeling; each component's outer
boundary is traced with Moore neighbor tracing, giving an ordered pixel
polyline whose consecutive points are 8-connected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy import ndimage

from ..geometry import Rect
from .bitmap import Bitmap

# clockwise from north, (dr, dc)
_DIRS = ((-1, 0), (-1, 1), (0, 1), (1, 1), (1, 0), (1, -1), (0, -1), (-1, -1))
_DIR_INDEX = {d: i for i, d in enumerate(_DIRS)}
_EIGHT = np.ones((3, 3), dtype=int)


@dataclass(frozen=True)
class Contour:
    """Ordered boundary polyline in pixel (x, y) coordinates."""

    points: tuple[tuple[int, int], ...]
    closed: bool = True

    @cached_property
    def arc_length(self) -> float:
        pts = self.points
        if len(pts) < 2:
            return 0.0
        pairs = list(zip(pts, pts[1:]))
        if self.closed:
            pairs.append((pts[-1], pts[0]))
        return sum(math.hypot(x2 - x1, y2 - y1) for (x1, y1), (x2, y2) in pairs)

    @cached_property
    def bbox(self) -> Rect:
        xs = [p[0] for p in self.points]
        ys = [p[1] for p in self.points]
        return Rect(min(xs), min(ys), max(xs) - min(xs), max(ys) - min(ys))


def extract_contours(bitmap: Bitmap) -> list[Contour]:
    """One outer contour per 8-connected ink component, top-left first."""
    labels, _ = ndimage.label(bitmap.ink, structure=_EIGHT)
    contours = []
    for i, sl in enumerate(ndimage.find_objects(labels)):
        if sl is None:
            continue
        mask = labels[sl] == (i + 1)
        points = _moore_trace(mask)
        offset_r, offset_c = sl[0].start, sl[1].start
        pixel_points = tuple((int(c + offset_c), int(r + offset_r)) for r, c in points)
        contours.append(Contour(pixel_points))
    contours.sort(key=lambda c: (c.points[0][1], c.points[0][0]))
    return contours


def filter_text_contours(contours: list[Contour], min_len: float = 80.0) -> list[Contour]:
    """Drop glyph-sized contours; keep arc length >= min_len exactly."""
    if min_len <= 0:
        raise ValueError("min_len must be positive")
    return [c for c in contours if c.arc_length >= min_len]


def _moore_trace(mask: np.ndarray) -> list[tuple[int, int]]:
    """Outer boundary of one component as (row, col) points.

    Walks clockwise keeping background on the left of the scan; terminates
    when a (pixel, backtrack) state repeats, which covers out-and-back
    boundaries of one-pixel-wide strokes as well as plain rings.
    """
    rows, cols = np.nonzero(mask)
    start = (int(rows[0]), int(cols[0]))  # topmost, then leftmost
    h, w = mask.shape

    def ink(p: tuple[int, int]) -> bool:
        return 0 <= p[0] < h and 0 <= p[1] < w and bool(mask[p[0], p[1]])

    boundary = [start]
    current = start
    backtrack = (start[0], start[1] - 1)  # west neighbor is background by choice
    seen = {(current, backtrack)}
    limit = 4 * len(rows) + 8
    for _ in range(limit):
        base = _DIR_INDEX[(backtrack[0] - current[0], backtrack[1] - current[1])]
        nxt = None
        prev = backtrack
        for k in range(1, 9):
            d = (base + k) % 8
            cand = (current[0] + _DIRS[d][0], current[1] + _DIRS[d][1])
            if ink(cand):
                nxt = cand
                break
            prev = cand
        if nxt is None:
            return boundary  # isolated pixel
        current, backtrack = nxt, prev
        if (current, backtrack) in seen:
            break
        seen.add((current, backtrack))
        boundary.append(current)
    if len(boundary) > 1 and boundary[-1] == boundary[0]:
        boundary.pop()
    return boundary
