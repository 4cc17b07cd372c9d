"""Exception hierarchy shared by all livemath subpackages."""

from __future__ import annotations


class LivemathError(Exception):
    """Base class for every error raised by this package."""


# --- expression core ---

class LatexSyntaxError(LivemathError):
    """Unparseable LaTeX; carries the character offset of the failure."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class UnboundVariableError(LivemathError):
    def __init__(self, name: str):
        super().__init__(f"unbound variable: {name}")
        self.name = name


class DomainError(LivemathError):
    """Numeric evaluation left the supported domain (1/0, sqrt(-1), ...)."""


# --- symbolic services ---

class NotLinearError(LivemathError):
    def __init__(self, target: str, reason: str = ""):
        detail = f": {reason}" if reason else ""
        super().__init__(f"relation is not linear in {target}{detail}")
        self.target = target


class TargetAbsentError(LivemathError):
    def __init__(self, target: str):
        super().__init__(f"target variable {target} does not occur in the relation")
        self.target = target


class NotQuadraticError(LivemathError):
    def __init__(self, target: str, reason: str = ""):
        detail = f": {reason}" if reason else ""
        super().__init__(f"relation is not a rational quadratic in {target}{detail}")
        self.target = target


class NonIntegerBoundError(LivemathError):
    """Summation bound does not evaluate to an integer."""


class NoSignChangeError(LivemathError):
    """Bracket endpoints have the same residual sign; no root guaranteed."""


class NotPlottableError(LivemathError):
    """Relation is neither explicit in y nor a recognized circle form."""


# --- figure geometry ---

class NoAxisFoundError(LivemathError):
    """No sufficiently long horizontal or vertical run; figure is display-only."""


class NoPathError(LivemathError):
    """Figure has axes but no non-axis stroke to use as a graph path."""


class DegenerateCalibrationError(LivemathError):
    """Calibration points coincide or give a non-positive scale."""


# --- document model ---

class SchemaError(LivemathError):
    """Malformed ingestion or document file; names the offending location."""

    def __init__(self, message: str, path: str | None = None):
        where = f"{path}: " if path else ""
        super().__init__(f"{where}{message}")
        self.path = path


class ImageUnreadableError(LivemathError):
    pass


class VersionMismatchError(LivemathError):
    def __init__(self, found: object, supported: int):
        super().__init__(f"document schema version {found!r} not supported (reader supports <= {supported})")
        self.found = found


# --- sessions ---

class SpanNotLiteralError(LivemathError):
    """Source span does not address a literal leaf."""


class UnknownVariableError(LivemathError):
    def __init__(self, name: str):
        super().__init__(f"unknown variable: {name}")
        self.name = name


class UnknownSymbolError(LivemathError):
    def __init__(self, name: str):
        super().__init__(f"symbol {name} is not bound to a plot variable or labeled geometry")
        self.name = name


class MissingCalibrationError(LivemathError):
    """Figure has no coordinate map yet; binding needs one."""


class DragUnsolvableError(LivemathError):
    """No variable value makes the curve pass through the drag target."""


class FeatureUnavailableError(LivemathError):
    """Hint/example feature does not apply to this formula."""


class CycleError(LivemathError):
    """Mutation would introduce a dependency cycle."""


class UnknownNodeError(LivemathError):
    def __init__(self, kind: str, node_id: str):
        super().__init__(f"unknown {kind}: {node_id}")
        self.node_id = node_id
