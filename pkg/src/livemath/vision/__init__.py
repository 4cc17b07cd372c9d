"""Figure and graph extraction from page images."""

from .axes import (
    ANGLE_TOLERANCE_DEG,
    MIN_AXIS_RUN,
    AxisFrame,
    detect_axes,
    extract_graph_path,
    extract_graph_paths,
)
from .bitmap import DEFAULT_THRESHOLD, Bitmap, binarize, load_grayscale, save_grayscale
from .contours import Contour, extract_contours, filter_text_contours
from .mapping import DEFAULT_UNIT_FRACTION, Calibration, CoordMap, make_mapping
from .synthetic import (
    SyntheticFigureSpec,
    SyntheticGroundTruth,
    accuracy_corpus,
    generate_synthetic_figure,
)

__all__ = [
    "ANGLE_TOLERANCE_DEG",
    "AxisFrame",
    "Bitmap",
    "Calibration",
    "Contour",
    "CoordMap",
    "DEFAULT_THRESHOLD",
    "DEFAULT_UNIT_FRACTION",
    "MIN_AXIS_RUN",
    "SyntheticFigureSpec",
    "SyntheticGroundTruth",
    "accuracy_corpus",
    "binarize",
    "detect_axes",
    "extract_contours",
    "extract_graph_path",
    "extract_graph_paths",
    "filter_text_contours",
    "generate_synthetic_figure",
    "load_grayscale",
    "make_mapping",
    "save_grayscale",
]
