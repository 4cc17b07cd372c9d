"""CLI and HTTP gateway over the offline pipeline and session engine."""

from .cli import EXIT_EVENT, EXIT_OK, EXIT_SCHEMA, main
from .svg import render_svg

__all__ = ["EXIT_EVENT", "EXIT_OK", "EXIT_SCHEMA", "main", "render_svg"]
