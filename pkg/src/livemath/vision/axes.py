"""Axis-frame detection: the longest horizontal and vertical contour runs
become the x and y axes; their intersection is the origin."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import NoAxisFoundError, NoPathError
from ..geometry import Rect, Segment
from .contours import Contour

MIN_AXIS_RUN = 40.0
ANGLE_TOLERANCE_DEG = 3.0


@dataclass(frozen=True)
class AxisFrame:
    x_axis: Segment
    y_axis: Segment
    origin: tuple[float, float]
    bbox: Rect
    # indices (into the detect_axes input list) of the contours that supplied
    # the axis runs; extract_graph_path uses them to skip the axes
    source_indices: tuple[int, int] | None = None


@dataclass(frozen=True)
class _Run:
    points: tuple[tuple[int, int], ...]
    contour_index: int

    @property
    def x1(self) -> float:
        return self.points[0][0]

    @property
    def y1(self) -> float:
        return self.points[0][1]

    @property
    def x2(self) -> float:
        return self.points[-1][0]

    @property
    def y2(self) -> float:
        return self.points[-1][1]

    @property
    def length(self) -> float:
        return math.hypot(self.x2 - self.x1, self.y2 - self.y1)


def detect_axes(
    contours: list[Contour],
    min_run: float = MIN_AXIS_RUN,
    angle_tol_deg: float = ANGLE_TOLERANCE_DEG,
) -> AxisFrame:
    """Fit the axis frame from contour polylines.

    Maximal straight runs within ±angle_tol of horizontal/vertical are
    collected; the longest of each orientation wins (ties prefer lower-left).
    Raises NoAxisFoundError when an orientation has no run >= min_run; the
    caller downgrades the figure to display-only.
    """
    if not contours:
        raise NoAxisFoundError("no contours")
    tan_tol = math.tan(math.radians(angle_tol_deg))
    h_runs: list[_Run] = []
    v_runs: list[_Run] = []
    for idx, contour in enumerate(contours):
        h_runs.extend(_straight_runs(contour, idx, tan_tol, horizontal=True))
        v_runs.extend(_straight_runs(contour, idx, tan_tol, horizontal=False))
    h_runs = [r for r in h_runs if r.length >= min_run]
    v_runs = [r for r in v_runs if r.length >= min_run]
    if not h_runs:
        raise NoAxisFoundError(f"no horizontal run >= {min_run} px")
    if not v_runs:
        raise NoAxisFoundError(f"no vertical run >= {min_run} px")
    # lower-left preference on ties: x axis sits low, y axis sits left
    best_h = min(h_runs, key=lambda r: (-r.length, -max(r.y1, r.y2), min(r.x1, r.x2)))
    best_v = min(v_runs, key=lambda r: (-r.length, min(r.x1, r.x2), -max(r.y1, r.y2)))

    bbox = contours[0].bbox
    for contour in contours[1:]:
        bbox = bbox.union(contour.bbox)

    # snap each axis to its median row/column (junction pixels would skew an
    # endpoint), then recover the full extent from every contour point on the
    # supporting line: a boundary run stops where the axes cross, the drawn
    # line does not
    x_axis = _axis_segment(best_h, contours[best_h.contour_index], horizontal=True)
    y_axis = _axis_segment(best_v, contours[best_v.contour_index], horizontal=False)
    origin = (y_axis.x1, x_axis.y1)
    return AxisFrame(x_axis, y_axis, origin, bbox, (best_h.contour_index, best_v.contour_index))


def extract_graph_paths(contours: list[Contour], frame: AxisFrame) -> list[Contour]:
    """Non-axis contours inside the figure box, longest first."""
    skip = set(frame.source_indices or ())
    region = frame.bbox.inflate(2.0)
    candidates = [
        c
        for i, c in enumerate(contours)
        if i not in skip and region.contains(c.bbox)
    ]
    candidates.sort(key=lambda c: (-c.arc_length, c.points[0][1], c.points[0][0]))
    return candidates


def extract_graph_path(contours: list[Contour], frame: AxisFrame) -> Contour:
    """The longest non-axis stroke — the drawn graph line.

    Raises NoPathError for axes-only figures (still bindable; plots are drawn
    fresh from the bound formula).
    """
    paths = extract_graph_paths(contours, frame)
    if not paths:
        raise NoPathError("no non-axis stroke inside the figure box")
    return paths[0]


def _straight_runs(contour: Contour, idx: int, tan_tol: float, horizontal: bool) -> list[_Run]:
    pts = contour.points
    n = len(pts)
    if n < 2:
        return []
    runs: list[_Run] = []
    i = 0
    while i < n - 1:
        direction = 0
        j = i
        while j + 1 < n:
            dx = pts[j + 1][0] - pts[j][0]
            dy = pts[j + 1][1] - pts[j][1]
            main = dx if horizontal else dy
            if main == 0:
                break
            if direction == 0:
                direction = 1 if main > 0 else -1
            elif (main > 0) != (direction > 0):
                break
            span = abs(pts[j + 1][0] - pts[i][0]) if horizontal else abs(pts[j + 1][1] - pts[i][1])
            drift = abs(pts[j + 1][1] - pts[i][1]) if horizontal else abs(pts[j + 1][0] - pts[i][0])
            if drift > 1.5 + tan_tol * span:
                break
            j += 1
        if j > i:
            runs.append(_Run(tuple(pts[i : j + 1]), idx))
            i = j
        else:
            i += 1
    return runs


def _axis_segment(run: _Run, contour: Contour, horizontal: bool) -> Segment:
    from statistics import median

    if horizontal:
        row = float(median(p[1] for p in run.points))
        xs = [p[0] for p in contour.points if abs(p[1] - row) <= 1.5]
        return Segment(float(min(xs)), row, float(max(xs)), row)
    col = float(median(p[0] for p in run.points))
    ys = [p[1] for p in contour.points if abs(p[0] - col) <= 1.5]
    return Segment(col, float(min(ys)), col, float(max(ys)))
