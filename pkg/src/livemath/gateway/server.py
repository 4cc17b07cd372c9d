"""HTTP session service: the protocol the browser client speaks.

JSON request/response plus a one-way SSE stream of full RenderStates. Each
session has a single logical writer (a lock serializes its events), so
response revisions are strictly increasing per session; reads serve the
latest immutable snapshot without blocking writers.
"""

from __future__ import annotations

import json
import queue
import threading
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request
from fastapi.responses import FileResponse, JSONResponse, StreamingResponse
from fastapi.staticfiles import StaticFiles

from ..document import PageModel, document_to_dict
from ..errors import (
    DragUnsolvableError,
    FeatureUnavailableError,
    LivemathError,
    MissingCalibrationError,
    NotPlottableError,
    SpanNotLiteralError,
    UnknownNodeError,
    UnknownSymbolError,
    UnknownVariableError,
)
from ..session import Session, render_state

_NOT_FOUND = (UnknownNodeError, UnknownVariableError, UnknownSymbolError)
_REJECTED = (
    SpanNotLiteralError,
    NotPlottableError,
    MissingCalibrationError,
    DragUnsolvableError,
    FeatureUnavailableError,
)

_EVENT_FIELDS = {
    "bind": ("formula", "figure"),
    "promote": ("formula", "span"),
    "set": ("var", "value"),
    "drag": ("plot", "point", "var"),
    "highlight": (),
    "hint": ("formula",),
    "example": ("formula",),
}


class _SessionBox:
    def __init__(self, session: Session):
        self.session = session
        self.lock = threading.Lock()
        self.subscribers: list[queue.Queue] = []

    def snapshot(self) -> dict[str, Any]:
        return render_state(self.session)

    def publish(self, state: dict[str, Any]) -> None:
        for q in list(self.subscribers):
            q.put(state)


def create_app(document: PageModel, doc_dir: str | Path, assets_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="livemath session service")
    boxes: dict[str, _SessionBox] = {}
    registry_lock = threading.Lock()
    counter = {"n": 0}
    doc_dir = Path(doc_dir)

    def get_box(session_id: str) -> _SessionBox | None:
        with registry_lock:
            return boxes.get(session_id)

    @app.post("/api/sessions")
    def create_session() -> JSONResponse:
        with registry_lock:
            session_id = f"s{counter['n']}"
            counter["n"] += 1
            box = _SessionBox(Session(document, session_id))
            boxes[session_id] = box
        state = box.snapshot()
        return JSONResponse({"session": session_id, "revision": state["revision"], "state": state})

    @app.get("/api/regions")
    def list_regions() -> JSONResponse:
        return JSONResponse(
            {
                "formulas": [
                    {
                        "id": f.id,
                        "latex": f.latex,
                        "box": f.box.as_list() if f.box else None,
                        "augmentable": f.augmentable,
                    }
                    for f in document.formulas
                ],
                "figures": [
                    {
                        "id": g.id,
                        "box": g.box.as_list(),
                        "bindable": g.bindable,
                        "labels": sorted(g.labels),
                    }
                    for g in document.figures
                ],
            }
        )

    @app.get("/api/document")
    def get_document() -> JSONResponse:
        return JSONResponse(document_to_dict(document))

    @app.get("/api/page-image")
    def page_image():
        path = doc_dir / document.image_ref
        if not path.exists():
            return JSONResponse({"error": {"code": "NotFound", "message": "page image missing"}}, 404)
        return FileResponse(path)

    @app.post("/api/sessions/{session_id}/events")
    async def post_event(session_id: str, request: Request) -> JSONResponse:
        box = get_box(session_id)
        if box is None:
            return _error(404, "UnknownSession", f"no session {session_id}")
        try:
            event = json.loads(await request.body())
        except json.JSONDecodeError as exc:
            return _error(400, "SchemaError", f"body is not JSON: {exc}", pointer="")
        problem = _validate_event(event)
        if problem is not None:
            return _error(400, "SchemaError", problem[0], pointer=problem[1])
        with box.lock:
            try:
                box.session.apply(event)
            except _NOT_FOUND as exc:
                return _error(404, type(exc).__name__, str(exc))
            except _REJECTED as exc:
                return _error(409, type(exc).__name__, str(exc))
            except LivemathError as exc:
                return _error(400, type(exc).__name__, str(exc))
            state = box.snapshot()
        box.publish(state)
        return JSONResponse({"revision": state["revision"], "state": state})

    @app.get("/api/sessions/{session_id}/render-state")
    def get_render_state(session_id: str) -> JSONResponse:
        box = get_box(session_id)
        if box is None:
            return _error(404, "UnknownSession", f"no session {session_id}")
        with box.lock:
            state = box.snapshot()
        return JSONResponse({"revision": state["revision"], "state": state})

    @app.get("/api/sessions/{session_id}/stream")
    def stream(session_id: str, limit: int | None = None) -> StreamingResponse:
        """SSE stream of full RenderStates: the current one immediately, then
        one per accepted event. `limit` (mainly for tests and scripts) closes
        the stream after that many states."""
        box = get_box(session_id)
        if box is None:
            return _error(404, "UnknownSession", f"no session {session_id}")
        q: queue.Queue = queue.Queue()
        with box.lock:
            box.subscribers.append(q)
            q.put(box.snapshot())

        def gen():
            sent = 0
            try:
                while limit is None or sent < limit:
                    try:
                        state = q.get(timeout=1.0)
                    except queue.Empty:
                        yield ": keepalive\n\n"
                        continue
                    if state is None:
                        break
                    sent += 1
                    yield f"data: {json.dumps(state, sort_keys=True)}\n\n"
            finally:
                if q in box.subscribers:
                    box.subscribers.remove(q)

        return StreamingResponse(gen(), media_type="text/event-stream")

    if assets_dir is not None and Path(assets_dir).is_dir():
        app.mount("/ui", StaticFiles(directory=str(assets_dir), html=True), name="ui")

    return app


def _validate_event(event: Any) -> tuple[str, str] | None:
    if not isinstance(event, dict):
        return ("event must be a JSON object", "")
    op = event.get("op")
    if op not in _EVENT_FIELDS:
        return (f"unknown op {op!r}", "/op")
    for field in _EVENT_FIELDS[op]:
        if field not in event:
            return (f"missing field {field!r} for op {op!r}", f"/{field}")
    return None


def _error(status: int, code: str, message: str, pointer: str | None = None) -> JSONResponse:
    payload: dict[str, Any] = {"error": {"code": code, "message": message}}
    if pointer is not None:
        payload["error"]["pointer"] = pointer
    return JSONResponse(payload, status_code=status)
