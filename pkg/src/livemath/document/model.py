"""The page model: words, formula regions, and figure regions on one scan."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import SchemaError
from ..expr import Expr
from ..geometry import Rect, Segment
from ..vision import AxisFrame, CoordMap

SCHEMA_VERSION = 1

PixelPath = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class OcrWord:
    text: str
    box: Rect
    confidence: float


@dataclass(frozen=True)
class FormulaRegion:
    """One extracted formula. `expr` is None when the LaTeX failed to parse
    (the region stays display-only); `box` is None when alignment found no
    detector box for it."""

    id: str
    latex: str
    box: Rect | None
    expr: Expr | None
    kind: str = "display"
    parse_error: str | None = None

    @property
    def augmentable(self) -> bool:
        return self.expr is not None


@dataclass(frozen=True)
class FigureRegion:
    """A detected diagram. `frame` is None when no axes were found, in which
    case the figure stays display-only. `labels` are author-supplied names
    for path segments (triangle side 'a', ...)."""

    id: str
    box: Rect
    frame: AxisFrame | None = None
    graph_path: PixelPath | None = None
    secondary_paths: tuple[PixelPath, ...] = ()
    coord_map: CoordMap | None = None
    labels: dict[str, Segment] = field(default_factory=dict)

    @property
    def bindable(self) -> bool:
        return self.frame is not None and self.coord_map is not None


@dataclass(frozen=True)
class PageModel:
    image_ref: str
    width: int
    height: int
    words: tuple[OcrWord, ...]
    formulas: tuple[FormulaRegion, ...]
    figures: tuple[FigureRegion, ...]
    schema_version: int = SCHEMA_VERSION

    def formula(self, formula_id: str) -> FormulaRegion:
        for f in self.formulas:
            if f.id == formula_id:
                return f
        raise KeyError(formula_id)

    def figure(self, figure_id: str) -> FigureRegion:
        for g in self.figures:
            if g.id == figure_id:
                return g
        raise KeyError(figure_id)


def validate_page(page: PageModel) -> PageModel:
    """Enforce the structural invariants; raises SchemaError on violation."""
    bounds = Rect(0, 0, page.width, page.height)
    if page.width < 1 or page.height < 1:
        raise SchemaError("page size must be positive")
    ids = [f.id for f in page.formulas] + [g.id for g in page.figures]
    if len(ids) != len(set(ids)):
        raise SchemaError("region ids must be unique")
    for word in page.words:
        if not bounds.contains(word.box):
            raise SchemaError(f"word {word.text!r} box outside page bounds")
        if not word.text:
            raise SchemaError("word text must be non-empty")
    boxes = []
    for f in page.formulas:
        if f.box is not None:
            if not bounds.contains(f.box):
                raise SchemaError(f"formula {f.id} box outside page bounds")
            if f.box in boxes:
                raise SchemaError(f"formula {f.id} shares a box with another formula")
            boxes.append(f.box)
    for g in page.figures:
        if not bounds.contains(g.box):
            raise SchemaError(f"figure {g.id} box outside page bounds")
    return page
