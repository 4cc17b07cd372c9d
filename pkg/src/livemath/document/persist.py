"""Document persistence: schema-versioned JSON, strict on the way in."""

from __future__ import annotations

import json
from typing import Any

from ..errors import LatexSyntaxError, SchemaError, VersionMismatchError
from ..expr import parse_latex
from ..geometry import Rect, Segment
from ..vision import AxisFrame, CoordMap
from .model import SCHEMA_VERSION, FigureRegion, FormulaRegion, OcrWord, PageModel, validate_page


def save_document(page: PageModel) -> bytes:
    """Canonical UTF-8 JSON; load_document(save_document(d)) == d."""
    return json.dumps(document_to_dict(page), sort_keys=True).encode("utf-8")


def load_document(data: bytes, source: str = "<bytes>") -> PageModel:
    try:
        raw = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise SchemaError(f"not valid JSON: {exc}", source) from exc
    return document_from_dict(raw, source)


def document_to_dict(page: PageModel) -> dict[str, Any]:
    return {
        "schema_version": page.schema_version,
        "page": {"image": page.image_ref, "width": page.width, "height": page.height},
        "words": [
            {"text": w.text, "box": w.box.as_list(), "conf": w.confidence} for w in page.words
        ],
        "formulas": [
            {
                "id": f.id,
                "latex": f.latex,
                "box": f.box.as_list() if f.box else None,
                "kind": f.kind,
            }
            for f in page.formulas
        ],
        "figures": [_figure_to_dict(g) for g in page.figures],
    }


def _figure_to_dict(g: FigureRegion) -> dict[str, Any]:
    frame = None
    if g.frame is not None:
        frame = {
            "x_axis": g.frame.x_axis.as_list(),
            "y_axis": g.frame.y_axis.as_list(),
            "origin": list(g.frame.origin),
            "bbox": g.frame.bbox.as_list(),
        }
    coord_map = None
    if g.coord_map is not None:
        coord_map = {
            "origin": list(g.coord_map.origin),
            "sx": g.coord_map.sx,
            "sy": g.coord_map.sy,
            "y_down": g.coord_map.y_down,
        }
    return {
        "id": g.id,
        "box": g.box.as_list(),
        "frame": frame,
        "graph_path": [list(p) for p in g.graph_path] if g.graph_path else None,
        "secondary_paths": [[list(p) for p in path] for path in g.secondary_paths],
        "coord_map": coord_map,
        "labels": {name: seg.as_list() for name, seg in sorted(g.labels.items())},
    }


def document_from_dict(raw: Any, source: str = "<dict>") -> PageModel:
    top = _obj(raw, "document", source)
    version = top.get("schema_version")
    if not isinstance(version, int):
        raise SchemaError("schema_version missing or not an integer", source)
    if version > SCHEMA_VERSION:
        raise VersionMismatchError(version, SCHEMA_VERSION)
    page = _obj(_get(top, "page", source), "page", source)
    words = tuple(
        _word_from_dict(w, f"words[{i}]", source)
        for i, w in enumerate(_arr(_get(top, "words", source), "words", source))
    )
    formulas = tuple(
        _formula_from_dict(f, f"formulas[{i}]", source)
        for i, f in enumerate(_arr(_get(top, "formulas", source), "formulas", source))
    )
    figures = tuple(
        _figure_from_dict(g, f"figures[{i}]", source)
        for i, g in enumerate(_arr(_get(top, "figures", source), "figures", source))
    )
    model = PageModel(
        image_ref=_str(_get(page, "image", source), "page.image", source),
        width=_int(_get(page, "width", source), "page.width", source),
        height=_int(_get(page, "height", source), "page.height", source),
        words=words,
        formulas=formulas,
        figures=figures,
        schema_version=version,
    )
    return validate_page(model)


def _word_from_dict(raw: Any, path: str, source: str) -> OcrWord:
    obj = _obj(raw, path, source)
    return OcrWord(
        text=_str(_get(obj, "text", source, path), f"{path}.text", source),
        box=_rect(_get(obj, "box", source, path), f"{path}.box", source),
        confidence=_num(_get(obj, "conf", source, path), f"{path}.conf", source),
    )


def _formula_from_dict(raw: Any, path: str, source: str) -> FormulaRegion:
    obj = _obj(raw, path, source)
    latex = _str(_get(obj, "latex", source, path), f"{path}.latex", source)
    box_raw = obj.get("box")
    expr = None
    error = None
    try:
        expr = parse_latex(latex)
    except LatexSyntaxError as exc:
        error = str(exc)
    return FormulaRegion(
        id=_str(_get(obj, "id", source, path), f"{path}.id", source),
        latex=latex,
        box=None if box_raw is None else _rect(box_raw, f"{path}.box", source),
        expr=expr,
        kind=_str(obj.get("kind", "display"), f"{path}.kind", source),
        parse_error=error,
    )


def _figure_from_dict(raw: Any, path: str, source: str) -> FigureRegion:
    obj = _obj(raw, path, source)
    frame_raw = obj.get("frame")
    frame = None
    if frame_raw is not None:
        fobj = _obj(frame_raw, f"{path}.frame", source)
        frame = AxisFrame(
            x_axis=_segment(_get(fobj, "x_axis", source, path), f"{path}.frame.x_axis", source),
            y_axis=_segment(_get(fobj, "y_axis", source, path), f"{path}.frame.y_axis", source),
            origin=_point(_get(fobj, "origin", source, path), f"{path}.frame.origin", source),
            bbox=_rect(_get(fobj, "bbox", source, path), f"{path}.frame.bbox", source),
        )
    cm_raw = obj.get("coord_map")
    coord_map = None
    if cm_raw is not None:
        cobj = _obj(cm_raw, f"{path}.coord_map", source)
        coord_map = CoordMap(
            origin=_point(_get(cobj, "origin", source, path), f"{path}.coord_map.origin", source),
            sx=_num(_get(cobj, "sx", source, path), f"{path}.coord_map.sx", source),
            sy=_num(_get(cobj, "sy", source, path), f"{path}.coord_map.sy", source),
            y_down=bool(cobj.get("y_down", True)),
        )
    path_raw = obj.get("graph_path")
    labels_raw = obj.get("labels", {})
    if not isinstance(labels_raw, dict):
        raise SchemaError(f"{path}.labels must be an object", source)
    return FigureRegion(
        id=_str(_get(obj, "id", source, path), f"{path}.id", source),
        box=_rect(_get(obj, "box", source, path), f"{path}.box", source),
        frame=frame,
        graph_path=None if path_raw is None else _pixel_path(path_raw, f"{path}.graph_path", source),
        secondary_paths=tuple(
            _pixel_path(p, f"{path}.secondary_paths[{i}]", source)
            for i, p in enumerate(_arr(obj.get("secondary_paths", []), f"{path}.secondary_paths", source))
        ),
        coord_map=coord_map,
        labels={
            _str(k, f"{path}.labels key", source): _segment(v, f"{path}.labels[{k}]", source)
            for k, v in sorted(labels_raw.items())
        },
    )


# --- strict readers ---


def _get(obj: dict, key: str, source: str, parent: str = "document") -> Any:
    if key not in obj:
        raise SchemaError(f"{parent}: missing required field {key!r}", source)
    return obj[key]


def _obj(v: Any, path: str, source: str) -> dict:
    if not isinstance(v, dict):
        raise SchemaError(f"{path} must be an object", source)
    return v


def _arr(v: Any, path: str, source: str) -> list:
    if not isinstance(v, list):
        raise SchemaError(f"{path} must be an array", source)
    return v


def _str(v: Any, path: str, source: str) -> str:
    if not isinstance(v, str):
        raise SchemaError(f"{path} must be a string", source)
    return v


def _int(v: Any, path: str, source: str) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        raise SchemaError(f"{path} must be an integer", source)
    return v


def _num(v: Any, path: str, source: str) -> float:
    if not isinstance(v, (int, float)) or isinstance(v, bool):
        raise SchemaError(f"{path} must be a number", source)
    return float(v)


def _rect(v: Any, path: str, source: str) -> Rect:
    arr = _arr(v, path, source)
    if len(arr) != 4:
        raise SchemaError(f"{path} must be [x, y, w, h]", source)
    return Rect(*(_num(c, f"{path}[{i}]", source) for i, c in enumerate(arr)))


def _segment(v: Any, path: str, source: str) -> Segment:
    arr = _arr(v, path, source)
    if len(arr) != 4:
        raise SchemaError(f"{path} must be [x1, y1, x2, y2]", source)
    return Segment(*(_num(c, f"{path}[{i}]", source) for i, c in enumerate(arr)))


def _point(v: Any, path: str, source: str) -> tuple[float, float]:
    arr = _arr(v, path, source)
    if len(arr) != 2:
        raise SchemaError(f"{path} must be [x, y]", source)
    return (_num(arr[0], f"{path}[0]", source), _num(arr[1], f"{path}[1]", source))


def _pixel_path(v: Any, path: str, source: str) -> tuple[tuple[int, int], ...]:
    arr = _arr(v, path, source)
    out = []
    for i, p in enumerate(arr):
        pt = _arr(p, f"{path}[{i}]", source)
        if len(pt) != 2:
            raise SchemaError(f"{path}[{i}] must be [x, y]", source)
        out.append(
            (_int(pt[0], f"{path}[{i}][0]", source), _int(pt[1], f"{path}[{i}][1]", source))
        )
    return tuple(out)
