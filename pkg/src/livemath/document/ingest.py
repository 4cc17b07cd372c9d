"""Ingestion: the three-file OCR bundle plus the page image -> PageModel.

The bundle is the pluggable stand-in for live OCR services: `words.json`
(plain-text words with boxes), `formulas.tex.json` (LaTeX strings, no
positions), `formula_boxes.json` (detector boxes, no LaTeX), and the page
image. Any adapter that writes these four files feeds the same pipeline.
"""

from __future__ import annotations

import dataclasses
import json
from pathlib import Path
from typing import Any

from ..errors import NoAxisFoundError, NoPathError, SchemaError
from ..geometry import Rect
from ..vision import (
    Calibration,
    binarize,
    detect_axes,
    extract_contours,
    extract_graph_paths,
    filter_text_contours,
    load_grayscale,
    make_mapping,
)
from .align import align_formulas
from .model import FigureRegion, OcrWord, PageModel, validate_page

WORDS_FILE = "words.json"
FORMULAS_FILE = "formulas.tex.json"
BOXES_FILE = "formula_boxes.json"
IMAGE_CANDIDATES = ("page.png", "page.pgm")


def ingest_page(
    bundle_dir: str | Path,
    min_contour_len: float = 80.0,
    binarize_threshold: int = 128,
    calibration: Calibration | None = None,
    calibration_unit: float | None = None,
) -> PageModel:
    """Run the full extraction pipeline over one ingestion bundle.

    Formula parse failures keep their regions display-only; a figure without
    detectable axes stays display-only as well. Deterministic for a fixed
    bundle. Raises SchemaError (naming the offending file) or
    ImageUnreadableError.
    """
    bundle = Path(bundle_dir)
    words_raw = _read_json(bundle / WORDS_FILE)
    latex_raw = _read_json(bundle / FORMULAS_FILE)
    boxes_raw = _read_json(bundle / BOXES_FILE)
    image_path = _find_image(bundle)
    image = load_grayscale(image_path)
    height, width = image.shape

    words = _parse_words(words_raw, str(bundle / WORDS_FILE))
    latex_list = _parse_latex_list(latex_raw, str(bundle / FORMULAS_FILE))
    boxes = _parse_boxes(boxes_raw, str(bundle / BOXES_FILE))

    formulas = align_formulas(list(words), latex_list, boxes)

    figures: list[FigureRegion] = []
    bitmap = binarize(image, binarize_threshold)
    contours = filter_text_contours(extract_contours(bitmap), min_contour_len)
    if contours:
        bbox = contours[0].bbox
        for c in contours[1:]:
            bbox = bbox.union(c.bbox)
        frame = None
        graph_path = None
        secondary: tuple = ()
        coord_map = None
        try:
            frame = detect_axes(contours)
            paths = []
            try:
                paths = extract_graph_paths(contours, frame)
            except NoPathError:
                paths = []
            if paths:
                graph_path = paths[0].points
                secondary = tuple(p.points for p in paths[1:])
            coord_map = make_mapping(frame, points=calibration, unit=calibration_unit)
            frame = dataclasses.replace(frame, source_indices=None)
        except NoAxisFoundError:
            frame = None
        figures.append(
            FigureRegion(
                id="g0",
                box=bbox,
                frame=frame,
                graph_path=graph_path,
                secondary_paths=secondary,
                coord_map=coord_map,
            )
        )

    page = PageModel(
        image_ref=image_path.name,
        width=width,
        height=height,
        words=words,
        formulas=tuple(formulas),
        figures=tuple(figures),
    )
    return validate_page(page)


def _read_json(path: Path) -> Any:
    if not path.exists():
        raise SchemaError("file is missing", str(path))
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON at line {exc.lineno}: {exc.msg}", str(path)) from exc


def _find_image(bundle: Path) -> Path:
    for name in IMAGE_CANDIDATES:
        candidate = bundle / name
        if candidate.exists():
            return candidate
    raise SchemaError(f"no page image ({' or '.join(IMAGE_CANDIDATES)})", str(bundle))


def _parse_words(raw: Any, source: str) -> tuple[OcrWord, ...]:
    if not isinstance(raw, list):
        raise SchemaError("words must be an array", source)
    words = []
    for i, item in enumerate(raw):
        if not isinstance(item, dict):
            raise SchemaError(f"words[{i}] must be an object", source)
        try:
            text = item["text"]
            box = item["box"]
            conf = item.get("conf", 1.0)
        except KeyError as exc:
            raise SchemaError(f"words[{i}] missing field {exc}", source) from exc
        if not isinstance(text, str) or not text:
            raise SchemaError(f"words[{i}].text must be a non-empty string", source)
        words.append(OcrWord(text, _box(box, f"words[{i}].box", source), float(conf)))
    return tuple(words)


def _parse_latex_list(raw: Any, source: str) -> list[str]:
    if not isinstance(raw, list) or not all(isinstance(s, str) for s in raw):
        raise SchemaError("must be an array of LaTeX strings", source)
    return list(raw)


def _parse_boxes(raw: Any, source: str) -> list[Rect]:
    if not isinstance(raw, list):
        raise SchemaError("must be an array of [x, y, w, h]", source)
    return [_box(b, f"[{i}]", source) for i, b in enumerate(raw)]


def _box(raw: Any, path: str, source: str) -> Rect:
    if (
        not isinstance(raw, list)
        or len(raw) != 4
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in raw)
    ):
        raise SchemaError(f"{path} must be [x, y, w, h]", source)
    return Rect(*(float(v) for v in raw))
