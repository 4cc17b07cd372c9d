"""Expression tree for the LaTeX subset found on high-school math pages.

Nodes are immutable; structural equality ignores source spans so that a
re-rendered tree compares equal to the original parse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class Span:
    """Character offsets [start, end) into the normalized LaTeX source."""

    start: int
    end: int

    def contains(self, other: "Span") -> bool:
        return self.start <= other.start and other.end <= self.end


@dataclass(frozen=True)
class Literal:
    """Nonnegative rational constant; negatives are spelled Neg(Literal)."""

    value: Fraction
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Variable:
    name: str
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class BinaryOp:
    """op is one of '+', '-', '*', '/', '^'. '^' is right-associative."""

    op: str
    left: "Expr"
    right: "Expr"
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Function:
    """name is one of sqrt, sin, cos, tan, ln, abs; all take one argument."""

    name: str
    args: tuple["Expr", ...]
    span: Span | None = field(default=None, compare=False, repr=False)

    @property
    def arg(self) -> "Expr":
        return self.args[0]


@dataclass(frozen=True)
class Summation:
    """sum over `index` from `lower` to `upper` of `body`.

    The index is bound inside `body` only; the bounds are evaluated in the
    enclosing scope.
    """

    index: str
    lower: "Expr"
    upper: "Expr"
    body: "Expr"
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Indexed:
    """Subscripted family member such as a_i."""

    base: str
    subscript: "Expr"
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Relation:
    """op is one of '=', '<', '>', '<=', '>='."""

    op: str
    left: "Expr"
    right: "Expr"
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class RelationChain:
    """a = b = c [= ...]; the conjunction of pairwise equalities, >= 3 parts."""

    parts: tuple["Expr", ...]
    span: Span | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if len(self.parts) < 3:
            raise ValueError("relation chain needs at least 3 parts")

    def pairwise(self) -> list[Relation]:
        return [Relation("=", a, b) for a, b in zip(self.parts, self.parts[1:])]


Expr = (
    Literal
    | Variable
    | Neg
    | BinaryOp
    | Function
    | Summation
    | Indexed
    | Relation
    | RelationChain
)

FUNCTION_NAMES = ("sqrt", "sin", "cos", "tan", "ln", "abs")
RELATION_OPS = ("=", "<", ">", "<=", ">=")

# name -> numeric value; the concrete values a reader has inserted
Environment = dict[str, float]


def is_relational(e: Expr) -> bool:
    return isinstance(e, (Relation, RelationChain))


def children(e: Expr) -> tuple[Expr, ...]:
    """Immediate subtrees, in source order."""
    if isinstance(e, (Literal, Variable)):
        return ()
    if isinstance(e, Neg):
        return (e.operand,)
    if isinstance(e, BinaryOp):
        return (e.left, e.right)
    if isinstance(e, Function):
        return e.args
    if isinstance(e, Summation):
        return (e.lower, e.upper, e.body)
    if isinstance(e, Indexed):
        return (e.subscript,)
    if isinstance(e, Relation):
        return (e.left, e.right)
    if isinstance(e, RelationChain):
        return e.parts
    raise TypeError(f"not an expression node: {e!r}")


def walk(e: Expr):
    """Yield every node of the tree, parents before children."""
    yield e
    for child in children(e):
        yield from walk(child)


def literal(value) -> Expr:
    """Build a constant node; negative values become Neg(Literal)."""
    v = Fraction(value)
    if v < 0:
        return Neg(Literal(-v))
    return Literal(v)
