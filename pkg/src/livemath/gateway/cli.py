"""Command line: extract a document from a bundle, snapshot it headlessly,
or serve interactive sessions."""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from pathlib import Path

from ..document import ingest_page, load_document, save_document
from ..errors import ImageUnreadableError, LivemathError, SchemaError
from ..session import Session, render_state, render_state_json
from .svg import render_svg

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SCHEMA = 2
EXIT_EVENT = 3

ASSETS_ENV = "LIVEMATH_ASSETS"


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (SchemaError, ImageUnreadableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except LivemathError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="livemath",
        description="Turn scanned math pages into reactive, explorable documents.",
    )
    sub = parser.add_subparsers(required=True)

    p_extract = sub.add_parser("extract", help="ingest an OCR bundle into a document JSON")
    p_extract.add_argument("bundle", help="bundle directory (words.json, formulas.tex.json, formula_boxes.json, page image)")
    p_extract.add_argument("out", help="output document JSON path")
    p_extract.add_argument("--min-contour-len", type=float, default=80.0,
                           help="text filter: keep contours at least this long (px)")
    p_extract.add_argument("--binarize-threshold", type=int, default=128,
                           help="ink threshold on the 0..255 grayscale page")
    p_extract.add_argument("--calibration-unit", type=float, default=None,
                           help="pixels per world unit (default: 10%% of the x-axis length)")
    p_extract.set_defaults(handler=_cmd_extract)

    p_snap = sub.add_parser("snapshot", help="apply an event script and write an SVG overlay")
    p_snap.add_argument("doc", help="document JSON from extract")
    p_snap.add_argument("script", help="JSON array of session events")
    p_snap.add_argument("out", help="output SVG path")
    p_snap.add_argument("--state-out", default=None, help="also write the final RenderState JSON here")
    p_snap.set_defaults(handler=_cmd_snapshot)

    p_serve = sub.add_parser("serve", help="serve interactive sessions over HTTP")
    p_serve.add_argument("--doc", required=True, help="document JSON to serve")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--assets", default=None,
                         help=f"UI asset directory (default: ${ASSETS_ENV})")
    p_serve.set_defaults(handler=_cmd_serve)
    return parser


def _cmd_extract(args) -> int:
    page = ingest_page(
        args.bundle,
        min_contour_len=args.min_contour_len,
        binarize_threshold=args.binarize_threshold,
        calibration_unit=args.calibration_unit,
    )
    out = Path(args.out)
    bundle = Path(args.bundle)
    image_rel = os.path.relpath(bundle / page.image_ref, out.parent)
    page = dataclasses.replace(page, image_ref=image_rel)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_bytes(save_document(page))

    for formula in page.formulas:
        status = "parsed" if formula.expr is not None else f"display-only ({formula.parse_error})"
        anchored = "anchored" if formula.box is not None else "no box"
        print(f"formula {formula.id}: {status}, {anchored}")
    for figure in page.figures:
        if figure.frame is not None:
            status = "axes found"
            if figure.graph_path is not None:
                status += f", graph path ({len(figure.graph_path)} px)"
            else:
                status += ", no graph path"
        else:
            status = "NoAxisFound (display-only)"
        print(f"figure {figure.id}: {status}")
    print(f"wrote {out}")
    return EXIT_OK


def _cmd_snapshot(args) -> int:
    doc_path = Path(args.doc)
    page = load_document(doc_path.read_bytes(), source=str(doc_path))
    try:
        events = json.loads(Path(args.script).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON at line {exc.lineno}: {exc.msg}", args.script) from exc
    if not isinstance(events, list):
        raise SchemaError("event script must be a JSON array", args.script)

    session = Session(page)
    for index, event in enumerate(events):
        try:
            session.apply(event)
        except (LivemathError, KeyError, TypeError, ValueError) as exc:
            print(f"event {index} rejected: {exc}", file=sys.stderr)
            return EXIT_EVENT

    state = render_state(session)
    Path(args.out).write_text(render_svg(state), encoding="utf-8")
    if args.state_out:
        Path(args.state_out).write_bytes(render_state_json(session))
    print(f"wrote {args.out} at revision {state['revision']}")
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    doc_path = Path(args.doc)
    page = load_document(doc_path.read_bytes(), source=str(doc_path))
    assets = args.assets or os.environ.get(ASSETS_ENV)
    app = create_app(page, doc_dir=doc_path.parent, assets_dir=assets)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
