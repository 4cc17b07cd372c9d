"""Whitespace repair for OCR-extracted LaTeX."""

from __future__ import annotations

import re

_WS = re.compile(r"\s+")


def normalize_ocr(src: str) -> str:
    """Collapse whitespace runs (including newlines) to single spaces and trim.

    The dominant OCR defects on clean scans are stray spaces and newlines;
    everything else is left untouched. Idempotent and total.
    """
    return _WS.sub(" ", src).strip()
