"""The affine pixel-world transform anchored at a figure's origin."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DegenerateCalibrationError
from ..geometry import Rect
from .axes import AxisFrame

DEFAULT_UNIT_FRACTION = 0.10  # pixels per world unit = 10% of x-axis length

WorldPoint = tuple[float, float]
PixelPoint = tuple[float, float]


@dataclass(frozen=True)
class CoordMap:
    """World (0,0) sits at `origin`; pixel y grows downward when y_down."""

    origin: PixelPoint
    sx: float
    sy: float
    y_down: bool = True

    def __post_init__(self):
        if self.sx <= 0 or self.sy <= 0:
            raise DegenerateCalibrationError(f"scales must be positive, got {self.sx}, {self.sy}")

    def world_to_pixel(self, wx: float, wy: float) -> PixelPoint:
        sign = -1.0 if self.y_down else 1.0
        return (self.origin[0] + self.sx * wx, self.origin[1] + sign * self.sy * wy)

    def pixel_to_world(self, px: float, py: float) -> WorldPoint:
        sign = -1.0 if self.y_down else 1.0
        return ((px - self.origin[0]) / self.sx, sign * (py - self.origin[1]) / self.sy)

    def visible_world_x(self, box: Rect) -> tuple[float, float]:
        lo = self.pixel_to_world(box.x, box.y)[0]
        hi = self.pixel_to_world(box.x2, box.y)[0]
        return (lo, hi)


Calibration = tuple[tuple[WorldPoint, PixelPoint], tuple[WorldPoint, PixelPoint]]


def make_mapping(
    frame: AxisFrame,
    points: Calibration | None = None,
    unit: float | None = None,
) -> CoordMap:
    """Build the CoordMap for a detected frame.

    Calibration is either two labeled (world, pixel) point pairs or an
    explicit `unit` in pixels per 1.0; with neither, the unit defaults to 10%
    of the x-axis pixel length. World (0,0) always maps to the frame origin.
    """
    if points is not None:
        (w1, p1), (w2, p2) = points
        if w1 == w2 or p1 == p2:
            raise DegenerateCalibrationError("calibration points coincide")
        sx = sy = None
        if w2[0] != w1[0]:
            sx = (p2[0] - p1[0]) / (w2[0] - w1[0])
        if w2[1] != w1[1]:
            sy = (p1[1] - p2[1]) / (w2[1] - w1[1])  # pixel y grows downward
        if sx is None and sy is None:
            raise DegenerateCalibrationError("calibration points separate in neither axis")
        if sx is None:
            sx = sy
        if sy is None:
            sy = sx
        return CoordMap(frame.origin, sx, sy)
    if unit is None:
        unit = DEFAULT_UNIT_FRACTION * frame.x_axis.length
    if unit <= 0:
        raise DegenerateCalibrationError(f"unit must be positive, got {unit}")
    return CoordMap(frame.origin, unit, unit)
