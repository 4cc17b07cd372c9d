"""Reactive sessions: the binding graph and its render-state projection."""

from .engine import COORDINATE_NAMES, DEFAULT_RANGE_HALFWIDTH, Session
from .graph import (
    ExampleNode,
    FormulaNode,
    HighlightNode,
    HintNode,
    PlotNode,
    VariableNode,
    check_acyclic,
)
from .renderstate import render_state, render_state_json

__all__ = [
    "COORDINATE_NAMES",
    "DEFAULT_RANGE_HALFWIDTH",
    "ExampleNode",
    "FormulaNode",
    "HighlightNode",
    "HintNode",
    "PlotNode",
    "Session",
    "VariableNode",
    "check_acyclic",
    "render_state",
    "render_state_json",
]
