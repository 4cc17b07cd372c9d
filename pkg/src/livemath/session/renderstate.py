"""RenderState: the complete, self-contained overlay snapshot the UI draws.

A pure projection of the session graph. Calling it twice without events
yields identical bytes; replaying an event log reproduces it exactly.
"""

from __future__ import annotations

import json
from typing import Any

from ..expr import Literal, Variable, render_latex, walk
from .engine import COORDINATE_NAMES, Session


def render_state(session: Session) -> dict[str, Any]:
    doc = session.document
    state: dict[str, Any] = {
        "revision": session.revision,
        "session": session.id,
        "page": {"image": doc.image_ref, "width": doc.width, "height": doc.height},
        "formulas": [
            {
                "id": node.id,
                "latex": node.display,
                "box": node.box.as_list() if node.box else None,
                "augmentable": node.expr is not None,
            }
            for node in session.formulas.values()
        ],
        "figures": [_figure_state(session, g) for g in doc.figures],
        "panels": _panel_states(session),
        "draggables": _draggables(session),
        "variables": [
            {
                "id": v.id,
                "name": v.name,
                "value": v.value,
                "lo": v.lo,
                "hi": v.hi,
                "origin": v.origin,
            }
            for v in session.variables.values()
        ],
    }
    return state


def render_state_json(session: Session) -> bytes:
    """Canonical byte encoding used by goldens and the wire protocol."""
    return json.dumps(render_state(session), sort_keys=True, separators=(",", ":")).encode("utf-8")


def _figure_state(session: Session, figure) -> dict[str, Any]:
    doc = session.document
    frame = None
    if figure.frame is not None:
        frame = {
            "x_axis": figure.frame.x_axis.as_list(),
            "y_axis": figure.frame.y_axis.as_list(),
            "origin": list(figure.frame.origin),
        }
    plots = []
    for plot in session.plots.values():
        if plot.figure_id != figure.id:
            continue
        for formula_id in plot.formula_ids:
            polylines = []
            for polyline in plot.polylines.get(formula_id, []):
                pts, clipped = _to_pixels(session, figure, polyline.points)
                polylines.append({"points": pts, "closed": polyline.closed, "clipped": clipped})
            plots.append({"plot_id": plot.id, "formula_id": formula_id, "polylines": polylines})
    coord_map = None
    if figure.coord_map is not None:
        coord_map = {
            "origin": list(figure.coord_map.origin),
            "sx": figure.coord_map.sx,
            "sy": figure.coord_map.sy,
            "y_down": figure.coord_map.y_down,
        }
    return {
        "id": figure.id,
        "box": figure.box.as_list(),
        "frame": frame,
        "coord_map": coord_map,
        "graph_path_detected": figure.graph_path is not None,
        "plots": plots,
        "highlights": _highlights_for_figure(session, figure),
    }


def _to_pixels(session: Session, figure, world_points) -> tuple[list[list[float]], bool]:
    width = session.document.width
    height = session.document.height
    cm = figure.coord_map
    pts: list[list[float]] = []
    clipped = False
    for wx, wy in world_points:
        px, py = cm.world_to_pixel(wx, wy)
        cx = min(max(px, 0.0), float(width))
        cy = min(max(py, 0.0), float(height))
        if cx != px or cy != py:
            clipped = True
        pts.append([cx, cy])
    return pts, clipped


def _highlights_for_figure(session: Session, figure) -> list[dict[str, Any]]:
    out: list[dict[str, Any]] = []
    for symbol in session.highlights:
        if symbol in figure.labels:
            seg = figure.labels[symbol]
            out.append(
                {
                    "symbol": symbol,
                    "kind": "segment",
                    "segment_id": symbol,
                    "points": [[seg.x1, seg.y1], [seg.x2, seg.y2]],
                }
            )
            continue
        if symbol in COORDINATE_NAMES and figure.coord_map is not None:
            plotted = any(p.figure_id == figure.id for p in session.plots.values())
            var = session.variables.get(symbol)
            if not plotted or var is None:
                continue
            if symbol == "x":
                px = figure.coord_map.world_to_pixel(var.value, 0.0)[0]
                points = [[px, figure.box.y], [px, figure.box.y2]]
                kind = "guide_v"
            else:
                py = figure.coord_map.world_to_pixel(0.0, var.value)[1]
                points = [[figure.box.x, py], [figure.box.x2, py]]
                kind = "guide_h"
            out.append({"symbol": symbol, "kind": kind, "points": points})
    return out


def _panel_states(session: Session) -> list[dict[str, Any]]:
    panels: list[dict[str, Any]] = []
    for hint in session.hints.values():
        steps = []
        if hint.trace is not None:
            steps = [
                {
                    "latex": render_latex(step.relation),
                    "rule": step.rule,
                    "narration": step.narration,
                }
                for step in hint.trace.steps
            ]
        panels.append(
            {
                "id": hint.id,
                "kind": "hint",
                "formula_id": hint.formula_id,
                "target": hint.target,
                "steps": steps,
                "error": hint.error,
            }
        )
    for example in session.examples.values():
        expansion = None
        if example.expansion is not None:
            exact = example.expansion.exact_value
            expansion = {
                "rendered": example.expansion.rendered,
                "value": example.expansion.value,
                "exact": None if exact is None else str(exact),
                "elided": example.expansion.elided,
            }
        panels.append(
            {
                "id": example.id,
                "kind": "example",
                "formula_id": example.formula_id,
                "expansion": expansion,
                "error": example.error,
            }
        )
    return panels


def _draggables(session: Session) -> list[dict[str, Any]]:
    out: list[dict[str, Any]] = []
    for node in session.formulas.values():
        if node.expr is None or node.box is None:
            continue
        source_len = max(len(node.source_latex), 1)
        for leaf in walk(node.expr):
            if not isinstance(leaf, (Literal, Variable)) or leaf.span is None:
                continue
            mid = (leaf.span.start + leaf.span.end) / 2 / source_len
            anchor = [node.box.x + node.box.w * mid, node.box.y + node.box.h / 2]
            entry: dict[str, Any] = {
                "formula_id": node.id,
                "span": [leaf.span.start, leaf.span.end],
                "anchor": anchor,
                "token": render_latex(leaf),
            }
            if isinstance(leaf, Literal):
                entry["kind"] = "literal"
                entry["variable_id"] = None
            else:
                entry["kind"] = "variable"
                entry["variable_id"] = leaf.name if leaf.name in session.variables else None
                var = session.variables.get(leaf.name)
                if var is not None:
                    entry["value"] = var.value
                    entry["lo"] = var.lo
                    entry["hi"] = var.hi
            out.append(entry)
    return out
