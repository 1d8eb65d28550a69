"""Fold-change coordinate transforms.

MAD-FC maps a fold change ``x`` to "fold change units from no change":
``x - 1`` above one and ``1 - 1/x`` below it, so 2 -> 1 and 1/2 -> -1.
It is built from two pieces, a mirror (``x`` or ``-1/x``) followed by a
contraction that closes the gap between -1 and 1. Axis labels undo the pieces
in reverse order.

Every function accepts a scalar or an array-like. Scalars come back as
``float``, anything else as a float64 ``ndarray``.
"""
from enum import Enum
import math

import numpy as np

from ._backend import kernels
from .errors import DomainError, UndefinedRegionError

__all__ = [
    "ScaleKind",
    "mirror_transform",
    "contraction_transform",
    "mad_forward",
    "inverse_contraction",
    "inverse_mirror",
    "mad_inverse",
    "scale_forward",
    "scale_inverse",
    "reference_coordinate",
    "DYNAMIC_RANGE_LIMIT",
    "exceeds_dynamic_range",
]

# |MAD coordinate| above which a chart has outgrown the linear-like range
# (~ +/- two orders of magnitude).
DYNAMIC_RANGE_LIMIT = 100.0


class ScaleKind(str, Enum):
    LOG2 = "log2"
    LINEAR = "linear"
    MADFC = "madfc"

    def __str__(self):
        return self.value


_REFERENCE = {ScaleKind.LOG2: 0.0, ScaleKind.LINEAR: 1.0, ScaleKind.MADFC: 0.0}


def _coerce(x):
    scalar = np.ndim(x) == 0
    arr = np.asarray(x, dtype=np.float64)
    return arr, scalar


def _out(arr, scalar):
    return float(arr) if scalar else arr


def _check_fold_change(arr):
    bad = ~(np.isfinite(arr) & (arr > 0))
    if bad.any():
        first = arr[bad].flat[0] if arr.ndim else float(arr)
        raise DomainError(f"fold change must be finite and > 0, got {first!r}")


def _check_finite(arr, what="coordinate"):
    bad = ~np.isfinite(arr)
    if bad.any():
        first = arr[bad].flat[0] if arr.ndim else float(arr)
        raise DomainError(f"{what} must be finite, got {first!r}")


def mirror_transform(x):
    """Reflect fold changes below one to ``-1/x``; leave the rest untouched."""
    arr, scalar = _coerce(x)
    _check_fold_change(arr)
    with np.errstate(divide="ignore"):
        res = np.where(arr >= 1.0, arr, -1.0 / arr)
    return _out(res, scalar)


def contraction_transform(m):
    """Shift both mirrored branches one unit toward zero.

    Raises :class:`UndefinedRegionError` for inputs in ``[-1, 1)``.
    """
    arr, scalar = _coerce(m)
    _check_finite(arr, "mirrored value")
    gap = (arr < 1.0) & (arr >= -1.0)
    if gap.any():
        first = arr[gap].flat[0] if arr.ndim else float(arr)
        raise UndefinedRegionError(
            f"contraction is undefined on [-1, 1), got {first!r}")
    res = np.where(arr >= 1.0, arr - 1.0, arr + 1.0)
    return _out(res, scalar)


def mad_forward(x):
    """Fold change -> MAD-FC coordinate (fold change units from no change)."""
    arr, scalar = _coerce(x)
    _check_fold_change(arr)
    if scalar:
        v = float(arr)
        return v - 1.0 if v >= 1.0 else -1.0 / v + 1.0
    flat = np.ascontiguousarray(arr, dtype=np.float64).ravel()
    return np.asarray(kernels.mad_forward(flat)).reshape(arr.shape)


def inverse_contraction(t):
    """Undo the contraction: ``t + 1`` for ``t >= 0`` else ``t - 1``."""
    arr, scalar = _coerce(t)
    _check_finite(arr)
    res = np.where(arr >= 0.0, arr + 1.0, arr - 1.0)
    return _out(res, scalar)


def inverse_mirror(m):
    """Undo the mirror: ``m`` for ``m >= 0`` else ``-1/m``.

    Only the range of :func:`inverse_contraction` is accepted, i.e.
    ``|m| >= 1``; ``m = -1`` maps to 1.
    """
    arr, scalar = _coerce(m)
    _check_finite(arr, "mirrored value")
    gap = (arr > -1.0) & (arr < 1.0)
    if gap.any():
        first = arr[gap].flat[0] if arr.ndim else float(arr)
        raise DomainError(f"inverse mirror expects |m| >= 1, got {first!r}")
    with np.errstate(divide="ignore"):
        res = np.where(arr >= 0.0, arr, -1.0 / arr)
    return _out(res, scalar)


def mad_inverse(t):
    """MAD-FC coordinate -> fold change. Total on the real line."""
    arr, scalar = _coerce(t)
    _check_finite(arr)
    if scalar:
        v = float(arr)
        return v + 1.0 if v >= 0.0 else 1.0 / (1.0 - v)
    flat = np.ascontiguousarray(arr, dtype=np.float64).ravel()
    return np.asarray(kernels.mad_inverse(flat)).reshape(arr.shape)


def _kind(kind):
    try:
        return ScaleKind(kind)
    except ValueError:
        raise DomainError(f"unknown scale {kind!r}; expected one of "
                          f"{', '.join(k.value for k in ScaleKind)}") from None


def scale_forward(kind, x):
    """Fold change -> axis coordinate under ``kind``."""
    kind = _kind(kind)
    if kind is ScaleKind.MADFC:
        return mad_forward(x)
    arr, scalar = _coerce(x)
    _check_fold_change(arr)
    if kind is ScaleKind.LOG2:
        if scalar:
            return math.log2(float(arr))
        return np.log2(arr)
    return _out(arr.copy(), scalar)


def scale_inverse(kind, t):
    """Axis coordinate -> fold change under ``kind``.

    Linear coordinates must be > 0 to denote a fold change.
    """
    kind = _kind(kind)
    if kind is ScaleKind.MADFC:
        return mad_inverse(t)
    arr, scalar = _coerce(t)
    _check_finite(arr)
    if kind is ScaleKind.LOG2:
        if scalar:
            return 2.0 ** float(arr)
        return np.exp2(arr)
    _check_fold_change(arr)
    return _out(arr.copy(), scalar)


def reference_coordinate(kind):
    """Coordinate of "no change" (fold change 1) under ``kind``."""
    return _REFERENCE[_kind(kind)]


def exceeds_dynamic_range(fold_changes, limit=DYNAMIC_RANGE_LIMIT):
    """True when any fold change lies more than ``limit`` MAD units from 1."""
    arr = np.atleast_1d(np.asarray(fold_changes, dtype=np.float64))
    if arr.size == 0:
        return False
    return bool(np.any(np.abs(mad_forward(arr)) > limit))
