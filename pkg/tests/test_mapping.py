import random

import pytest

from livemath.errors import DegenerateCalibrationError
from livemath.geometry import Rect, Segment
from livemath.vision import AxisFrame, CoordMap, make_mapping


def _frame():
    return AxisFrame(
        x_axis=Segment(100, 400, 500, 400),
        y_axis=Segment(100, 80, 100, 400),
        origin=(100.0, 400.0),
        bbox=Rect(100, 80, 400, 320),
    )


def test_affine_arithmetic():
    cm = CoordMap((100.0, 400.0), 40.0, 40.0)
    assert cm.world_to_pixel(2.0, 1.0) == (180.0, 360.0)
    assert cm.pixel_to_world(180.0, 360.0) == (2.0, 1.0)


def test_round_trip_100_random_points():
    rng = random.Random(8)
    cm = CoordMap((320.0, 410.0), 37.5, 21.25)
    for _ in range(100):
        wx, wy = rng.uniform(-50, 50), rng.uniform(-50, 50)
        px, py = cm.world_to_pixel(wx, wy)
        bx, by = cm.pixel_to_world(px, py)
        assert abs(bx - wx) <= 1e-6
        assert abs(by - wy) <= 1e-6


def test_two_point_calibration():
    cm = make_mapping(_frame(), points=(((0.0, 0.0), (100.0, 400.0)), ((5.0, 0.0), (300.0, 400.0))))
    assert cm.sx == 40.0
    assert cm.sy == 40.0  # single-axis pairs copy the known scale
    assert cm.origin == (100.0, 400.0)


def test_default_unit_is_tenth_of_axis():
    cm = make_mapping(_frame())
    assert cm.sx == pytest.approx(40.0)  # x axis is 400 px long


def test_explicit_unit():
    cm = make_mapping(_frame(), unit=25.0)
    assert cm.sx == 25.0 and cm.sy == 25.0


def test_degenerate_calibrations():
    with pytest.raises(DegenerateCalibrationError):
        make_mapping(_frame(), points=(((0.0, 0.0), (10.0, 10.0)), ((0.0, 0.0), (10.0, 10.0))))
    with pytest.raises(DegenerateCalibrationError):
        make_mapping(_frame(), unit=0.0)
    with pytest.raises(DegenerateCalibrationError):
        CoordMap((0.0, 0.0), -1.0, 1.0)


def test_y_flip_world_up_is_pixel_down():
    cm = CoordMap((100.0, 400.0), 40.0, 40.0)
    py_low = cm.world_to_pixel(0.0, 1.0)[1]
    py_high = cm.world_to_pixel(0.0, 5.0)[1]
    assert py_high < py_low  # increasing world y strictly decreases pixel y
