"""Page ingestion, formula-to-box alignment, and document persistence."""

from .align import (
    SIMILARITY_THRESHOLD,
    align_formulas,
    box_text,
    levenshtein,
    similarity,
    strip_latex,
)
from .ingest import BOXES_FILE, FORMULAS_FILE, WORDS_FILE, ingest_page
from .model import (
    SCHEMA_VERSION,
    FigureRegion,
    FormulaRegion,
    OcrWord,
    PageModel,
    validate_page,
)
from .persist import document_from_dict, document_to_dict, load_document, save_document

__all__ = [
    "BOXES_FILE",
    "FORMULAS_FILE",
    "FigureRegion",
    "FormulaRegion",
    "OcrWord",
    "PageModel",
    "SCHEMA_VERSION",
    "SIMILARITY_THRESHOLD",
    "WORDS_FILE",
    "align_formulas",
    "box_text",
    "document_from_dict",
    "document_to_dict",
    "ingest_page",
    "levenshtein",
    "load_document",
    "save_document",
    "similarity",
    "strip_latex",
    "validate_page",
]
