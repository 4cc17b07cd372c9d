"""
Figure geometry from page pixels
================================

The vision pipeline binarizes the page, traces ink contours, filters
glyph-sized ones away, finds the axes as the longest horizontal and vertical
runs, and builds the pixel-world coordinate map.
"""

from livemath.vision import (
    SyntheticFigureSpec,
    binarize,
    detect_axes,
    extract_contours,
    extract_graph_path,
    filter_text_contours,
    generate_synthetic_figure,
    make_mapping,
)

# A synthetic page with exact ground truth stands in for a scanned textbook.
spec = SyntheticFigureSpec(
    equation="y = (x - 3)^2 + 1",
    curve_range=(1.2, 4.8),
    glyph_count=25,
    gridline_count=3,
)
image, truth = generate_synthetic_figure(spec, seed=42)
print("page:", image.shape[1], "x", image.shape[0], "px,", (image < 128).sum(), "ink px")

contours = extract_contours(binarize(image))
print("contours:", len(contours), "(glyph noise included)")

kept = filter_text_contours(contours, min_len=80.0)
print("after the text-length filter:", len(kept))

frame = detect_axes(kept)
print("x-axis:", frame.x_axis, " truth:", truth.x_axis)
print("y-axis:", frame.y_axis, " truth:", truth.y_axis)
print("origin:", frame.origin, " truth:", truth.origin)

path = extract_graph_path(kept, frame)
print("graph path:", len(path.points), "boundary px, arc", round(path.arc_length, 1))

# Calibration: explicit unit here; the default is 10% of the x-axis length.
cm = make_mapping(frame, unit=spec.unit)
wx, wy = cm.pixel_to_world(*cm.world_to_pixel(3.0, 1.0))
print("world (3, 1) round-trips to", (round(wx, 9), round(wy, 9)))
