"""Expression core: the LaTeX subset produced by math OCR on textbook pages."""

from .evaluate import (
    evaluate,
    free_variables,
    relation_holds,
    substitute,
    substitute_all,
)
from .nodes import (
    FUNCTION_NAMES,
    RELATION_OPS,
    BinaryOp,
    Environment,
    Expr,
    Function,
    Indexed,
    Literal,
    Neg,
    Relation,
    RelationChain,
    Span,
    Summation,
    Variable,
    children,
    is_relational,
    literal,
    walk,
)
from .normalize import normalize_ocr
from .parser import parse_latex
from .render import literal_text, precedence, render_latex

__all__ = [
    "BinaryOp",
    "Environment",
    "Expr",
    "FUNCTION_NAMES",
    "Function",
    "Indexed",
    "Literal",
    "Neg",
    "RELATION_OPS",
    "Relation",
    "RelationChain",
    "Span",
    "Summation",
    "Variable",
    "children",
    "evaluate",
    "free_variables",
    "is_relational",
    "literal",
    "literal_text",
    "normalize_ocr",
    "parse_latex",
    "precedence",
    "relation_holds",
    "render_latex",
    "substitute",
    "substitute_all",
    "walk",
]
