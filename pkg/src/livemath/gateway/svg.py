"""Deterministic SVG snapshots of a RenderState.

Resolution-independent and diffable: floats are written with a fixed format,
elements in a fixed order, so identical states give byte-identical files.
"""

from __future__ import annotations

from typing import Any

_PANEL_WIDTH = 300
_LINE_HEIGHT = 16


def _f(v: float) -> str:
    return f"{v:.2f}"


def render_svg(state: dict[str, Any]) -> str:
    page = state["page"]
    width = page["width"] + _PANEL_WIDTH
    height = page["height"]
    parts: list[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{page["width"]}" height="{page["height"]}" '
        f'fill="white" stroke="#888"/>',
        f'<image href="{page["image"]}" x="0" y="0" width="{page["width"]}" '
        f'height="{page["height"]}" opacity="0.5"/>',
        f'<text x="{page["width"] + 12}" y="20" font-size="13" fill="#333">'
        f'revision {state["revision"]}</text>',
    ]
    for formula in state["formulas"]:
        if formula["box"] is not None:
            x, y, w, h = formula["box"]
            parts.append(
                f'<rect x="{_f(x)}" y="{_f(y)}" width="{_f(w)}" height="{_f(h)}" '
                f'fill="none" stroke="#4a90d9" stroke-width="1"/>'
            )
            parts.append(
                f'<text x="{_f(x)}" y="{_f(y + h + 12)}" font-size="12" '
                f'fill="#1a5f9e">{_escape(formula["latex"])}</text>'
            )
    for figure in state["figures"]:
        x, y, w, h = figure["box"]
        parts.append(
            f'<rect x="{_f(x)}" y="{_f(y)}" width="{_f(w)}" height="{_f(h)}" '
            f'fill="none" stroke="#9a9a9a" stroke-dasharray="4 3"/>'
        )
        if figure["frame"] is not None:
            for key in ("x_axis", "y_axis"):
                x1, y1, x2, y2 = figure["frame"][key]
                parts.append(
                    f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
                    f'stroke="#444" stroke-width="1"/>'
                )
        for plot in figure["plots"]:
            for polyline in plot["polylines"]:
                points = " ".join(f"{_f(px)},{_f(py)}" for px, py in polyline["points"])
                tag = "polygon" if polyline["closed"] else "polyline"
                parts.append(
                    f'<{tag} points="{points}" fill="none" stroke="#d9534f" '
                    f'stroke-width="1.5"/>'
                )
        for highlight in figure["highlights"]:
            (x1, y1), (x2, y2) = highlight["points"]
            parts.append(
                f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
                f'stroke="#f0ad4e" stroke-width="2" stroke-dasharray="6 4"/>'
            )
    y_cursor = 44
    for panel in state["panels"]:
        x_text = page["width"] + 12
        parts.append(
            f'<text x="{x_text}" y="{y_cursor}" font-size="12" font-weight="bold" '
            f'fill="#333">{panel["kind"]} for {panel["formula_id"]}</text>'
        )
        y_cursor += _LINE_HEIGHT
        for line in _panel_lines(panel):
            parts.append(
                f'<text x="{x_text}" y="{y_cursor}" font-size="11" fill="#555">'
                f"{_escape(line)}</text>"
            )
            y_cursor += _LINE_HEIGHT
        y_cursor += 8
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _panel_lines(panel: dict[str, Any]) -> list[str]:
    if panel.get("error"):
        return [panel["error"]]
    if panel["kind"] == "hint":
        return [f"{step['latex']}   [{step['narration']}]" for step in panel["steps"]]
    expansion = panel.get("expansion")
    if expansion is None:
        return []
    lines = [expansion["rendered"]]
    if expansion["exact"] is not None:
        lines.append(f"= {expansion['exact']}")
    elif expansion["value"] is not None:
        lines.append(f"= {expansion['value']:.6g}")
    return lines


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
