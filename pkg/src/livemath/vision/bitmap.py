"""Binary occupancy grids and grayscale image IO."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..errors import ImageUnreadableError

DEFAULT_THRESHOLD = 128


@dataclass(frozen=True)
class Bitmap:
    """Row-major ink grid; ink[r, c] is True where the page is dark."""

    ink: np.ndarray  # bool, shape (height, width)

    def __post_init__(self):
        if self.ink.ndim != 2 or self.ink.shape[0] < 1 or self.ink.shape[1] < 1:
            raise ValueError("bitmap needs a 2-D grid with positive size")

    @property
    def width(self) -> int:
        return int(self.ink.shape[1])

    @property
    def height(self) -> int:
        return int(self.ink.shape[0])

    @property
    def ink_count(self) -> int:
        return int(self.ink.sum())


def binarize(image: np.ndarray, threshold: int = DEFAULT_THRESHOLD) -> Bitmap:
    """Ink where intensity < threshold (dark-on-light pages)."""
    if image.ndim != 2:
        raise ValueError("expected a grayscale (2-D) image")
    return Bitmap(image < threshold)


def load_grayscale(path: str | Path) -> np.ndarray:
    """Read a PNG or PGM page image as a uint8 grayscale array."""
    from PIL import Image, UnidentifiedImageError

    try:
        with Image.open(path) as img:
            return np.asarray(img.convert("L"), dtype=np.uint8)
    except FileNotFoundError as exc:
        raise ImageUnreadableError(f"image not found: {path}") from exc
    except (UnidentifiedImageError, OSError) as exc:
        raise ImageUnreadableError(f"cannot read image {path}: {exc}") from exc


def save_grayscale(image: np.ndarray, path: str | Path) -> None:
    from PIL import Image

    Image.fromarray(image.astype(np.uint8), mode="L").save(path)
