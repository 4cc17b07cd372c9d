"""
The reactive session: select, bind, manipulate, update
======================================================

The full authoring loop on the walkthrough page: ingest the OCR bundle, bind
the quadratic to its figure, promote the literals 3 and 1 into dynamic
variables, drag values and the curve itself, and watch everything propagate.
"""

import tempfile
from pathlib import Path

from livemath.document import ingest_page
from livemath.expr import Span
from livemath.fixtures import build_walkthrough_bundle
from livemath.session import Session, render_state

with tempfile.TemporaryDirectory() as workdir:
    bundle = build_walkthrough_bundle(Path(workdir) / "bundle")
    page = ingest_page(bundle)
    print("ingested:", [f.id for f in page.formulas], "+", [g.id for g in page.figures])

    session = Session(page)
    plot = session.bind_plot("f1", "g0")
    print("bound f1 onto g0 as", plot, "- revision", session.revision)

    # Dragging the printed "3" and "1" turns them into variables a and b:
    # the formula now reads (x + a)^2 + b under the hood but displays the
    # current values, exactly like the page.
    a = session.promote_literal("f1", Span(9, 10))
    b = session.promote_literal("f1", Span(18, 19))
    print("promoted ->", a, "and", b, "| display:", session.formulas["f1"].display)

    session.set_value(a, 5.0)
    session.set_value(b, 4.0)
    print("after set a=5, b=4:", session.formulas["f1"].display)

    state = render_state(session)
    cm = page.figures[0].coord_map
    vertex_px = max(state["figures"][0]["plots"][0]["polylines"][0]["points"], key=lambda p: p[1])
    print("curve vertex lands at world", cm.pixel_to_world(*vertex_px))

    # Bidirectional binding: drag the curve through a point, the variable
    # follows (bracketed bisection under the hood).
    session.drag_graph(plot, (-5.0, 6.0), b)
    print("dragged curve through (-5, 6): b is now", session.variables[b].value)

    # Hints and examples attach to the other formulas on the page.
    session.attach_hint("f2")
    session.attach_example("f3")
    state = render_state(session)
    for panel in state["panels"]:
        if panel["kind"] == "hint":
            print("hint final step:", panel["steps"][-1]["latex"])
        else:
            print("example:", panel["expansion"]["rendered"], "=", panel["expansion"]["exact"])

    # The event log replays to a byte-identical state: sessions are
    # deterministic, shareable artifacts.
    replica = Session.replay(page, session.events)
    from livemath.session import render_state_json

    print("replay byte-identical:", render_state_json(replica) == render_state_json(session))
