"""Binding-graph node types and the acyclicity guard.

Values flow variables -> formulas -> (plots | hints | examples); highlights
hang off variables. Every mutation revalidates acyclicity: the topology makes
cycles unconstructible today, but the guard keeps that a checked invariant
rather than an accident.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..cas import ExampleExpansion, Polyline, StepTrace
from ..errors import CycleError
from ..expr import Expr
from ..geometry import Rect


@dataclass
class VariableNode:
    """A manipulable value; `origin` records whether it came from promoting a
    literal or from setting a named free variable."""

    id: str  # same as the variable name
    name: str
    value: float
    lo: float
    hi: float
    origin: str  # "promoted" | "ensured"


@dataclass
class FormulaNode:
    id: str  # the formula region id
    region_id: str
    source_latex: str
    expr: Expr | None  # None for display-only regions
    box: Rect | None
    display: str = ""  # render of expr with current values substituted


@dataclass
class PlotNode:
    id: str
    figure_id: str
    formula_ids: list[str] = field(default_factory=list)
    # world-unit polylines per bound formula, refreshed on every propagation
    polylines: dict[str, list[Polyline]] = field(default_factory=dict)
    # drag handles: variable id -> formula id it controls
    controlled: dict[str, str] = field(default_factory=dict)


@dataclass
class HintNode:
    id: str
    formula_id: str
    target: str
    trace: StepTrace | None = None
    error: str | None = None


@dataclass
class ExampleNode:
    id: str
    formula_id: str
    expansion: ExampleExpansion | None = None
    error: str | None = None


@dataclass
class HighlightNode:
    id: str
    symbol: str


Edge = tuple[str, str]


def check_acyclic(node_ids: set[str], edges: list[Edge]) -> None:
    """DFS cycle detection over the dependency edges; raises CycleError."""
    adjacency: dict[str, list[str]] = {n: [] for n in node_ids}
    for src, dst in edges:
        adjacency.setdefault(src, []).append(dst)
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {n: WHITE for n in adjacency}
    stack: list[tuple[str, int]] = []
    for root in adjacency:
        if color[root] != WHITE:
            continue
        stack.append((root, 0))
        color[root] = GRAY
        while stack:
            node, i = stack[-1]
            children = adjacency[node]
            if i < len(children):
                stack[-1] = (node, i + 1)
                child = children[i]
                if color.get(child, WHITE) == GRAY:
                    raise CycleError(f"dependency cycle through {child}")
                if color.get(child, WHITE) == WHITE:
                    color[child] = GRAY
                    stack.append((child, 0))
            else:
                color[node] = BLACK
                stack.pop()
