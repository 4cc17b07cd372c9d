"""livemath: turn scanned math-textbook pages into reactive, explorable documents.

The pipeline: parse OCR'd LaTeX into expression trees (`livemath.expr`),
answer symbolic questions about them (`livemath.cas`), recover figure geometry
from the page image (`livemath.vision`), assemble and persist the page model
(`livemath.document`), and run interactive sessions over it
(`livemath.session`). `livemath.gateway` exposes the CLI and the HTTP session
service.
"""

__version__ = "0.1.0"
