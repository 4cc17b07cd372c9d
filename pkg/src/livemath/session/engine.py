"""The interactive session: select -> bind -> manipulate -> update.

One Session wraps one immutable document. Every accepted event bumps the
revision by exactly one, appends to the event log, and recomputes the whole
graph (documents are page-sized; recompute-all keeps propagation trivially
deterministic). Replaying the log on a fresh session reproduces the render
state byte for byte.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Any

from ..cas import (
    expand_summation,
    factor_quadratic_steps,
    invert_around,
    plot_relation,
    sample_curve,
    solve_linear_steps,
)
from ..errors import (
    DomainError,
    DragUnsolvableError,
    FeatureUnavailableError,
    LivemathError,
    MissingCalibrationError,
    NoSignChangeError,
    NotLinearError,
    NotPlottableError,
    NotQuadraticError,
    NonIntegerBoundError,
    SpanNotLiteralError,
    TargetAbsentError,
    UnboundVariableError,
    UnknownNodeError,
    UnknownSymbolError,
    UnknownVariableError,
)
from ..expr import (
    Expr,
    Literal,
    Relation,
    Span,
    Summation,
    Variable,
    evaluate,
    free_variables,
    is_relational,
    render_latex,
    substitute,
    walk,
)
from ..document import PageModel
from .graph import (
    ExampleNode,
    FormulaNode,
    HighlightNode,
    HintNode,
    PlotNode,
    VariableNode,
    check_acyclic,
)

# plot coordinate names: never substituted into displays or sampling envs
COORDINATE_NAMES = ("x", "y")
DEFAULT_RANGE_HALFWIDTH = 10.0
DRAG_TOLERANCE = 1e-9
_FRESH_NAMES = "abcdefghijklmnopqrstuvwxyz"


class Session:
    """Single-writer interactive state over one document."""

    def __init__(self, document: PageModel, session_id: str = "s0"):
        self.id = session_id
        self.document = document
        self.revision = 0
        self.events: list[dict[str, Any]] = []
        self.variables: dict[str, VariableNode] = {}
        self.formulas: dict[str, FormulaNode] = {}
        self.plots: dict[str, PlotNode] = {}
        self.hints: dict[str, HintNode] = {}
        self.examples: dict[str, ExampleNode] = {}
        self.highlights: dict[str, HighlightNode] = {}
        self.last_clamped: bool = False
        for region in document.formulas:
            self.formulas[region.id] = FormulaNode(
                id=region.id,
                region_id=region.id,
                source_latex=region.latex,
                expr=region.expr,
                box=region.box,
            )
        self._recompute()

    # --- event plumbing ---

    def apply(self, event: dict[str, Any]) -> None:
        """Dispatch one wire-format event; raises on rejection (state and
        revision untouched)."""
        op = event.get("op")
        if op == "bind":
            self.bind_plot(event["formula"], event["figure"])
        elif op == "promote":
            start, end = event["span"]
            self.promote_literal(event["formula"], Span(int(start), int(end)))
        elif op == "set":
            self.set_value(event["var"], float(event["value"]))
        elif op == "drag":
            x, y = event["point"]
            self.drag_graph(event["plot"], (float(x), float(y)), event["var"])
        elif op == "highlight":
            self.highlight(event.get("symbol"))
        elif op == "hint":
            self.attach_hint(event["formula"], event.get("target"))
        elif op == "example":
            self.attach_example(event["formula"])
        else:
            raise LivemathError(f"unknown event op {op!r}")

    def _commit(self, event: dict[str, Any]) -> None:
        self.revision += 1
        self.events.append(event)
        self._recompute()

    @classmethod
    def replay(cls, document: PageModel, events: list[dict[str, Any]], session_id: str = "s0") -> "Session":
        session = cls(document, session_id)
        for event in events:
            session.apply(event)
        return session

    # --- operations ---

    def bind_plot(self, formula_id: str, figure_id: str) -> str:
        """Bind a formula's curve onto a figure; several formulas may share
        one figure. Returns the plot node id."""
        node = self._formula(formula_id)
        if node.expr is None:
            raise NotPlottableError(f"formula {formula_id} is display-only (parse failed)")
        if not is_relational(node.expr):
            raise NotPlottableError(f"formula {formula_id} is not a relation")
        figure = self._figure(figure_id)
        if figure.coord_map is None or figure.frame is None:
            raise MissingCalibrationError(f"figure {figure_id} has no coordinate map")
        plot = next((p for p in self.plots.values() if p.figure_id == figure_id), None)
        created = False
        if plot is None:
            plot = PlotNode(id=f"p{len(self.plots)}", figure_id=figure_id)
            created = True
        if formula_id not in plot.formula_ids:
            # validate now so a failing bind leaves the graph untouched
            self._sample_formula(plot, node)
            plot.formula_ids.append(formula_id)
        if created:
            self.plots[plot.id] = plot
        self._check_acyclic()
        self._commit({"op": "bind", "formula": formula_id, "figure": figure_id})
        return plot.id

    def promote_literal(self, formula_id: str, span: Span) -> str:
        """Turn the literal at `span` into a fresh dynamic variable
        initialized to the literal's value. Returns the variable id."""
        node = self._formula(formula_id)
        if node.expr is None:
            raise SpanNotLiteralError(f"formula {formula_id} is display-only")
        target = self._literal_at(node.expr, span)
        if target is None:
            raise SpanNotLiteralError(f"span {span.start}..{span.end} is not a literal leaf")
        name = self._fresh_name()
        value = float(target.value)
        node.expr = _replace_span(node.expr, target.span, Variable(name, span=target.span))
        self.variables[name] = VariableNode(
            id=name,
            name=name,
            value=value,
            lo=value - DEFAULT_RANGE_HALFWIDTH,
            hi=value + DEFAULT_RANGE_HALFWIDTH,
            origin="promoted",
        )
        self._check_acyclic()
        self._commit({"op": "promote", "formula": formula_id, "span": [span.start, span.end]})
        return name

    def set_value(self, variable_id: str, value: float) -> None:
        """Set a dynamic value (clamped to its range; `last_clamped` reports
        it). Unknown names bind lazily when they are free variables of some
        parsed formula."""
        if not math.isfinite(value):
            raise LivemathError(f"non-finite value for {variable_id}")
        node = self.variables.get(variable_id)
        if node is None:
            node = self._ensure_variable(variable_id, value)
        clamped = min(max(value, node.lo), node.hi)
        self.last_clamped = clamped != value
        node.value = clamped
        self._commit({"op": "set", "var": variable_id, "value": value})

    def drag_graph(
        self, plot_id: str, target_world: tuple[float, float], variable_id: str
    ) -> None:
        """Solve the controlled variable so the bound curve passes through
        the drag target, then propagate like set_value."""
        plot = self.plots.get(plot_id)
        if plot is None:
            raise UnknownNodeError("plot", plot_id)
        var = self.variables.get(variable_id)
        if var is None:
            raise UnknownVariableError(variable_id)
        formula_id = self._controlling_formula(plot, variable_id)
        node = self._formula(formula_id)
        x0, y0 = target_world
        env = self._value_env()
        env.pop(variable_id, None)

        rel = plot_relation(node.expr)
        explicit = _explicit_in_y(rel)
        if explicit is None:
            raise DragUnsolvableError("bound relation is not explicit in y; cannot drag-solve")

        def residual(v: float) -> float:
            probe = dict(env)
            probe[variable_id] = v
            probe["x"] = x0
            try:
                return evaluate(explicit, probe) - y0
            except (DomainError, UnboundVariableError):
                return math.nan

        try:
            solution = invert_around(residual, var.value, tol=DRAG_TOLERANCE)
        except NoSignChangeError as exc:
            raise DragUnsolvableError(str(exc)) from exc
        clamped = min(max(solution, var.lo), var.hi)
        if abs(clamped - solution) > DRAG_TOLERANCE:
            raise DragUnsolvableError(
                f"solution {solution} lies outside the range of {variable_id}"
            )
        var.value = clamped
        plot.controlled[variable_id] = formula_id
        self.last_clamped = False
        self._commit(
            {"op": "drag", "plot": plot_id, "point": [x0, y0], "var": variable_id}
        )

    def highlight(self, symbol: str | None) -> None:
        """Add a relationship highlight for `symbol`; None clears them all."""
        if symbol is None or symbol == "none":
            self.highlights.clear()
            self._commit({"op": "highlight", "symbol": None})
            return
        if self._label_figures(symbol):
            pass  # labeled geometry: always highlightable
        elif symbol in COORDINATE_NAMES:
            if symbol not in self.variables or not self.plots:
                raise UnknownSymbolError(symbol)
        else:
            raise UnknownSymbolError(symbol)
        if symbol not in self.highlights:
            self.highlights[symbol] = HighlightNode(id=f"hl-{symbol}", symbol=symbol)
        self._commit({"op": "highlight", "symbol": symbol})

    def attach_hint(self, formula_id: str, target: str | None = None) -> str:
        """Attach a step-by-step solving trace to a relation formula."""
        node = self._formula(formula_id)
        if node.expr is None or not isinstance(node.expr, Relation):
            raise FeatureUnavailableError("hints need a single (non-chained) relation")
        if target is None:
            candidates = sorted(free_variables(node.expr) - set(COORDINATE_NAMES) - set(self.variables))
            if len(candidates) != 1:
                raise FeatureUnavailableError(
                    f"ambiguous solve target (candidates: {', '.join(candidates) or 'none'})"
                )
            target = candidates[0]
        hint = HintNode(id=f"h{len(self.hints)}", formula_id=formula_id, target=target)
        self._compute_hint(hint)
        if hint.trace is None:
            raise FeatureUnavailableError(hint.error or "feature unavailable for this formula")
        self.hints[hint.id] = hint
        self._check_acyclic()
        self._commit({"op": "hint", "formula": formula_id, "target": target})
        return hint.id

    def attach_example(self, formula_id: str) -> str:
        """Attach a concrete-example expansion to the formula's summation."""
        node = self._formula(formula_id)
        if node.expr is None:
            raise FeatureUnavailableError("formula is display-only")
        if not any(isinstance(n, Summation) for n in walk(node.expr)):
            raise FeatureUnavailableError("formula has no summation to exemplify")
        example = ExampleNode(id=f"e{len(self.examples)}", formula_id=formula_id)
        self._compute_example(example)
        if example.expansion is None:
            raise FeatureUnavailableError(example.error or "feature unavailable for this formula")
        self.examples[example.id] = example
        self._check_acyclic()
        self._commit({"op": "example", "formula": formula_id})
        return example.id

    # --- graph recomputation (recompute-all propagation) ---

    def _recompute(self) -> None:
        env_literals = {
            name: Literal(Fraction(str(var.value)))
            for name, var in self.variables.items()
            if name not in COORDINATE_NAMES
        }
        for node in self.formulas.values():
            if node.expr is None:
                node.display = node.source_latex
                continue
            shown = node.expr
            for name, lit in env_literals.items():
                shown = substitute(shown, name, lit)
            node.display = render_latex(shown)
        for plot in self.plots.values():
            plot.polylines = {}
            for formula_id in plot.formula_ids:
                plot.polylines[formula_id] = self._sample_formula(plot, self._formula(formula_id))
        for hint in self.hints.values():
            self._compute_hint(hint)
        for example in self.examples.values():
            self._compute_example(example)

    def _sample_formula(self, plot: PlotNode, node: FormulaNode):
        figure = self._figure(plot.figure_id)
        x_lo, x_hi = figure.coord_map.visible_world_x(figure.box)
        rel = plot_relation(node.expr)
        try:
            return sample_curve(rel, self._value_env(), (x_lo, x_hi))
        except (UnboundVariableError, DomainError) as exc:
            raise NotPlottableError(str(exc)) from exc

    def _compute_hint(self, hint: HintNode) -> None:
        node = self._formula(hint.formula_id)
        rel = node.expr
        env = {
            name: Fraction(str(var.value))
            for name, var in self.variables.items()
            if name != hint.target and name not in COORDINATE_NAMES
        }
        hint.trace = None
        hint.error = None
        try:
            hint.trace = solve_linear_steps(rel, hint.target, env)
            return
        except (NotLinearError, TargetAbsentError) as exc:
            linear_error = str(exc)
        try:
            hint.trace = factor_quadratic_steps(rel, hint.target, env)
        except (NotQuadraticError, TargetAbsentError):
            hint.error = f"feature unavailable for this formula ({linear_error})"

    def _compute_example(self, example: ExampleNode) -> None:
        node = self._formula(example.formula_id)
        summation = next(n for n in walk(node.expr) if isinstance(n, Summation))
        example.expansion = None
        example.error = None
        try:
            example.expansion = expand_summation(summation, self._value_env())
        except (NonIntegerBoundError, DomainError) as exc:
            example.error = f"feature unavailable for this formula ({exc})"

    # --- lookups and helpers ---

    def _formula(self, formula_id: str) -> FormulaNode:
        node = self.formulas.get(formula_id)
        if node is None:
            raise UnknownNodeError("formula", formula_id)
        return node

    def _figure(self, figure_id: str):
        try:
            return self.document.figure(figure_id)
        except KeyError as exc:
            raise UnknownNodeError("figure", figure_id) from exc

    def _value_env(self) -> dict[str, float]:
        return {
            name: var.value
            for name, var in self.variables.items()
            if name not in COORDINATE_NAMES
        }

    def _ensure_variable(self, name: str, value: float) -> VariableNode:
        for node in self.formulas.values():
            if node.expr is not None and name in free_variables(node.expr):
                var = VariableNode(
                    id=name,
                    name=name,
                    value=value,
                    lo=value - DEFAULT_RANGE_HALFWIDTH,
                    hi=value + DEFAULT_RANGE_HALFWIDTH,
                    origin="ensured",
                )
                self.variables[name] = var
                return var
        raise UnknownVariableError(name)

    def _fresh_name(self) -> str:
        used = set(self.variables)
        for node in self.formulas.values():
            if node.expr is not None:
                used |= free_variables(node.expr)
                used |= {n.index for n in walk(node.expr) if isinstance(n, Summation)}
        for letter in _FRESH_NAMES:
            if letter not in used and letter not in COORDINATE_NAMES:
                return letter
        raise LivemathError("no fresh single-letter variable names left")

    def _literal_at(self, expr: Expr, span: Span) -> Literal | None:
        exact = None
        innermost = None
        for node in walk(expr):
            if node.span is None:
                continue
            if node.span.start == span.start and node.span.end == span.end:
                exact = node
                break
            if node.span.contains(span):
                if innermost is None or innermost.span.contains(node.span):
                    innermost = node
        found = exact if exact is not None else innermost
        return found if isinstance(found, Literal) else None

    def _controlling_formula(self, plot: PlotNode, variable_id: str) -> str:
        for formula_id in plot.formula_ids:
            node = self._formula(formula_id)
            if node.expr is not None and variable_id in free_variables(node.expr):
                return formula_id
        raise DragUnsolvableError(
            f"variable {variable_id} does not appear in any formula bound to this plot"
        )

    def _label_figures(self, symbol: str) -> list[str]:
        return [g.id for g in self.document.figures if symbol in g.labels]

    def _check_acyclic(self) -> None:
        node_ids: set[str] = set(self.variables) | set(self.formulas)
        node_ids |= set(self.plots) | set(self.hints) | set(self.examples)
        edges: list[tuple[str, str]] = []
        for node in self.formulas.values():
            if node.expr is None:
                continue
            for name in free_variables(node.expr):
                if name in self.variables:
                    edges.append((name, node.id))
        for plot in self.plots.values():
            for formula_id in plot.formula_ids:
                edges.append((formula_id, plot.id))
        for hint in self.hints.values():
            edges.append((hint.formula_id, hint.id))
        for example in self.examples.values():
            edges.append((example.formula_id, example.id))
        check_acyclic(node_ids, edges)


def _replace_span(expr: Expr, span: Span | None, replacement: Expr) -> Expr:
    """Rebuild the tree with the node at `span` swapped out; span identity
    (not structural equality) keys the replacement, so twin literals stay."""
    import dataclasses

    if expr.span is span:
        return replacement
    from ..expr import children

    kids = children(expr)
    if not kids:
        return expr
    new_kids = [_replace_span(k, span, replacement) for k in kids]
    if all(a is b for a, b in zip(kids, new_kids)):
        return expr
    if isinstance(expr, Relation):
        return dataclasses.replace(expr, left=new_kids[0], right=new_kids[1])
    from ..expr import BinaryOp, Function, Indexed, Neg, RelationChain, Summation as Sum

    if isinstance(expr, Neg):
        return dataclasses.replace(expr, operand=new_kids[0])
    if isinstance(expr, BinaryOp):
        return dataclasses.replace(expr, left=new_kids[0], right=new_kids[1])
    if isinstance(expr, Function):
        return dataclasses.replace(expr, args=tuple(new_kids))
    if isinstance(expr, Sum):
        return dataclasses.replace(expr, lower=new_kids[0], upper=new_kids[1], body=new_kids[2])
    if isinstance(expr, Indexed):
        return dataclasses.replace(expr, subscript=new_kids[0])
    if isinstance(expr, RelationChain):
        return dataclasses.replace(expr, parts=tuple(new_kids))
    return expr


def _explicit_in_y(rel: Relation) -> Expr | None:
    for side, other in ((rel.left, rel.right), (rel.right, rel.left)):
        if isinstance(side, Variable) and side.name == "y" and "y" not in free_variables(other):
            return other
    return None
