import json
import shutil

import pytest

from livemath.document import ingest_page, save_document
from livemath.errors import SchemaError
from livemath.fixtures import build_walkthrough_bundle


def test_walkthrough_bundle_shape(walkthrough_page):
    page = walkthrough_page
    assert len(page.figures) == 1
    assert page.figures[0].frame is not None
    assert page.figures[0].coord_map is not None
    parsed = [f for f in page.formulas if f.expr is not None]
    assert len(parsed) == 4
    assert {f.id for f in page.formulas} == {"f0", "f1", "f2", "f3"}
    assert all(f.box is not None for f in page.formulas)


def test_detected_frame_matches_drawn_axes(walkthrough_page):
    g = walkthrough_page.figures[0]
    assert g.frame.origin == (370.0, 400.0)
    assert g.coord_map.sx == 36.0  # default calibration: 10% of the 360 px axis


def test_deterministic_for_fixed_bundle(walkthrough_bundle):
    a = ingest_page(walkthrough_bundle)
    b = ingest_page(walkthrough_bundle)
    assert save_document(a) == save_document(b)


def test_zero_formula_bundle(tmp_path):
    bundle = build_walkthrough_bundle(tmp_path / "b")
    (bundle / "formulas.tex.json").write_text("[]")
    (bundle / "formula_boxes.json").write_text("[]")
    page = ingest_page(bundle)
    assert page.formulas == ()
    assert len(page.figures) == 1


def test_missing_words_file(tmp_path):
    bundle = build_walkthrough_bundle(tmp_path / "b")
    (bundle / "words.json").unlink()
    with pytest.raises(SchemaError) as err:
        ingest_page(bundle)
    assert "words.json" in str(err.value)


def test_corrupted_json_names_file_and_line(tmp_path):
    bundle = build_walkthrough_bundle(tmp_path / "b")
    (bundle / "formula_boxes.json").write_text("[[1, 2, 3,\n 4]")
    with pytest.raises(SchemaError) as err:
        ingest_page(bundle)
    message = str(err.value)
    assert "formula_boxes.json" in message
    assert "line" in message


def test_bad_word_schema(tmp_path):
    bundle = build_walkthrough_bundle(tmp_path / "b")
    (bundle / "words.json").write_text(json.dumps([{"text": "x"}]))
    with pytest.raises(SchemaError) as err:
        ingest_page(bundle)
    assert "words[0]" in str(err.value)


def test_min_contour_len_monotone(walkthrough_bundle, tmp_path):
    page_default = ingest_page(walkthrough_bundle)
    page_strict = ingest_page(walkthrough_bundle, min_contour_len=2000.0)
    # a huge filter leaves nothing; the figure disappears entirely
    assert len(page_strict.figures) <= len(page_default.figures)


def test_display_only_figure_when_no_axes(tmp_path, walkthrough_bundle):
    bundle = tmp_path / "b"
    shutil.copytree(walkthrough_bundle, bundle)
    # blank page image: no strokes at all -> no figure region
    import numpy as np

    from livemath.vision import save_grayscale

    save_grayscale(np.full((600, 800), 255, dtype=np.uint8), bundle / "page.png")
    page = ingest_page(bundle)
    assert page.figures == ()
