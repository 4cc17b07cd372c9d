"""Bracketed bisection, the numeric half of bidirectional graph binding."""

from __future__ import annotations

from typing import Callable

from ..errors import NoSignChangeError

DEFAULT_TOL = 1e-9
MAX_DOUBLINGS = 8
_MAX_ITERATIONS = 200


def invert_numeric(
    residual: Callable[[float], float],
    bracket: tuple[float, float],
    tol: float = DEFAULT_TOL,
) -> float:
    """Root of `residual` inside `bracket` by bisection.

    Returns r with |residual(r)| <= tol or with the bracket narrowed to tol.
    Requires residual(lo) * residual(hi) <= 0, else NoSignChangeError.
    Derivative-free and deterministic.
    """
    lo, hi = bracket
    if lo > hi:
        lo, hi = hi, lo
    flo = residual(lo)
    if abs(flo) <= tol:
        return lo
    fhi = residual(hi)
    if abs(fhi) <= tol:
        return hi
    if flo * fhi > 0:
        raise NoSignChangeError(f"no sign change on [{lo}, {hi}]")
    for _ in range(_MAX_ITERATIONS):
        mid = 0.5 * (lo + hi)
        fmid = residual(mid)
        if abs(fmid) <= tol or (hi - lo) <= tol:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    return 0.5 * (lo + hi)


def invert_around(
    residual: Callable[[float], float],
    center: float,
    tol: float = DEFAULT_TOL,
    halfwidth: float = 1.0,
) -> float:
    """Invert near `center`, doubling the bracket up to 8 times on
    NoSignChangeError before giving up (the drag-to-solve policy)."""
    w = halfwidth
    for _ in range(MAX_DOUBLINGS + 1):
        try:
            return invert_numeric(residual, (center - w, center + w), tol)
        except NoSignChangeError:
            w *= 2.0
    raise NoSignChangeError(f"no sign change within {w / 2} of {center}")
