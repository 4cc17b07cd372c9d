"""
The offline pipeline, end to end
================================

extract -> document JSON -> scripted snapshot -> SVG overlay. The same
script against the HTTP service yields the identical RenderState.
"""

import json
import tempfile
from pathlib import Path

from livemath.fixtures import build_walkthrough_bundle
from livemath.gateway.cli import main

with tempfile.TemporaryDirectory() as workdir:
    work = Path(workdir)
    bundle = build_walkthrough_bundle(work / "bundle")
    doc = work / "document.json"

    print("$ livemath extract", bundle.name, doc.name)
    main(["extract", str(bundle), str(doc)])

    script = work / "script.json"
    script.write_text(
        json.dumps(
            [
                {"op": "bind", "formula": "f1", "figure": "g0"},
                {"op": "promote", "formula": "f1", "span": [9, 10]},
                {"op": "promote", "formula": "f1", "span": [18, 19]},
                {"op": "set", "var": "a", "value": 5},
                {"op": "set", "var": "b", "value": 4},
                {"op": "hint", "formula": "f2"},
                {"op": "example", "formula": "f3"},
            ],
            indent=1,
        )
    )
    svg = work / "overlay.svg"
    state = work / "state.json"
    print("\n$ livemath snapshot", doc.name, script.name, svg.name)
    main(["snapshot", str(doc), str(script), str(svg), "--state-out", str(state)])

    print("\nSVG bytes:", svg.stat().st_size)
    print("RenderState keys:", sorted(json.loads(state.read_bytes())))
    print("\nTo explore interactively:")
    print(f"  livemath serve --doc {doc} --port 8000")
    print("  # then POST events to /api/sessions/<id>/events, or open the browser UI")
