import itertools
import random

from livemath.document import (
    SIMILARITY_THRESHOLD,
    align_formulas,
    box_text,
    levenshtein,
    similarity,
    strip_latex,
)
from livemath.document.model import OcrWord
from livemath.geometry import Rect


def test_strip_latex():
    assert strip_latex("y=(x+3)^{2}+1") == "y=(x+3)2+1"
    assert strip_latex("\\sqrt{x}  + 1") == "sqrtx + 1"
    assert strip_latex("a_{i}") == "ai"


def test_levenshtein_basics():
    assert levenshtein("", "") == 0
    assert levenshtein("abc", "abc") == 0
    assert levenshtein("abc", "axc") == 1
    assert levenshtein("abc", "") == 3


def _word(text, x, y, w=20, h=12):
    return OcrWord(text, Rect(x, y, w, h), 0.9)


def test_walkthrough_similarity_clears_threshold():
    words = [
        _word("y", 10, 10),
        _word("=", 34, 10),
        _word("(x", 58, 10),
        _word("+", 82, 10),
        _word("3)2", 106, 10),
        _word("+", 130, 10),
        _word("1", 154, 10),
    ]
    box = Rect(5, 5, 175, 25)
    score = similarity("y=(x+3)^{2}+1", box_text(words, box))
    assert score > SIMILARITY_THRESHOLD
    regions = align_formulas(words, ["y=(x+3)^{2}+1"], [box])
    assert regions[0].box == box
    assert regions[0].expr is not None


def test_empty_inputs():
    assert align_formulas([], [], []) == []
    regions = align_formulas([], ["x + 1"], [])
    assert len(regions) == 1
    assert regions[0].box is None


def test_unmatched_formula_is_display_only_anchor():
    words = [_word("hello", 10, 10), _word("world", 40, 10)]
    regions = align_formulas(words, ["a^2 + b^2 = c^2"], [Rect(5, 5, 80, 25)])
    assert regions[0].box is None  # similarity below threshold
    assert regions[0].expr is not None  # still parsed, just unanchored


def test_parse_failure_keeps_region():
    regions = align_formulas([], ["\\int x dx"], [])
    assert regions[0].expr is None
    assert regions[0].parse_error


def _brute_force_best(latexes, texts, threshold):
    """Exhaustive assignment maximizing total similarity (ties resolved to
    the same greedy preference order for comparability)."""
    n, m = len(latexes), len(texts)
    best_score = -1.0
    best = {}
    indices = list(range(m))
    for k in range(0, min(n, m) + 1):
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.permutations(indices, k):
                total = 0.0
                ok = True
                pairs = {}
                for i, j in zip(rows, cols):
                    s = similarity(latexes[i], texts[j])
                    if s < threshold:
                        ok = False
                        break
                    total += s
                    pairs[i] = j
                if ok and total > best_score + 1e-12:
                    best_score = total
                    best = pairs
    return best_score, best


def _random_instance(rng):
    """A permutation ground truth with dominant true-pair similarity, the
    structure real pages produce (each formula's own box reads most alike)."""
    pool = [
        "y=(x+3)^{2}+1",
        "a^2+b^2=c^2",
        "\\sum_{i=1}^{n} a_i",
        "1.55192t-2734.55>400",
        "x^2-7x+10=0",
        "(x-h)^2+(y-k)^2=r^2",
    ]
    n = rng.randint(1, 6)
    latexes = rng.sample(pool, n)
    perm = list(range(n))
    rng.shuffle(perm)
    words = []
    boxes = [None] * n
    for row, i in enumerate(perm):
        stripped = strip_latex(latexes[i])
        if rng.random() < 0.4:  # OCR damage
            cut = rng.randrange(len(stripped))
            stripped = stripped[:cut] + stripped[cut + 1 :]
        y = 10 + 30 * row
        boxes[i] = Rect(5, y - 2, 220, 20)
        x = 8
        for chunk in [stripped[k : k + 4] for k in range(0, len(stripped), 4)]:
            words.append(_word(chunk, x, y, w=16))
            x += 18
    return latexes, boxes, words


def test_greedy_matches_bruteforce_on_200_instances():
    rng = random.Random(90210)
    for _ in range(200):
        latexes, boxes, words = _random_instance(rng)
        regions = align_formulas(words, latexes, boxes)
        texts = [box_text(words, b) for b in boxes]
        greedy_total = sum(
            similarity(latexes[i], box_text(words, r.box))
            for i, r in enumerate(regions)
            if r.box is not None
        )
        best_total, _ = _brute_force_best(latexes, texts, SIMILARITY_THRESHOLD)
        assert greedy_total >= best_total - 1e-9
        # no box used twice
        used = [r.box for r in regions if r.box is not None]
        assert len(used) == len(set((b.x, b.y) for b in used))


def test_single_swap_local_optimality():
    rng = random.Random(777)
    for _ in range(50):
        latexes, boxes, words = _random_instance(rng)
        regions = align_formulas(words, latexes, boxes)
        assignment = {i: r.box for i, r in enumerate(regions) if r.box is not None}
        total = sum(similarity(latexes[i], box_text(words, b)) for i, b in assignment.items())
        items = list(assignment.items())
        for (i, bi), (j, bj) in itertools.combinations(items, 2):
            swapped = (
                total
                - similarity(latexes[i], box_text(words, bi))
                - similarity(latexes[j], box_text(words, bj))
                + similarity(latexes[i], box_text(words, bj))
                + similarity(latexes[j], box_text(words, bi))
            )
            assert total >= swapped - 1e-9
