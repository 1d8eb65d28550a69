"""Fold changes from groups, five-number summaries, KDE and MAD-space intervals."""
from dataclasses import dataclass, field
import math

import numpy as np

from ._backend import kernels
from .errors import DegenerateInputError, DomainError
from .transform import ScaleKind, mad_forward, mad_inverse, scale_forward

__all__ = [
    "SampleSet",
    "GroupSummary",
    "FiveNumberSummary",
    "DensityCurve",
    "fold_change_of_groups",
    "quantile_summary",
    "silverman_bandwidth",
    "kde_density",
    "interval_from_fcz",
    "KDE_GRID_POINTS",
    "KDE_GRID_PAD",
]

KDE_GRID_POINTS = 256
# grid extends this many bandwidths past the data on each side
KDE_GRID_PAD = 3.0
MIN_SUMMARY_SAMPLES = 5


@dataclass(frozen=True, eq=False)
class SampleSet:
    """Positive measurements of one group."""

    values: np.ndarray
    label: str = ""

    def __post_init__(self):
        arr = np.array(self.values, dtype=np.float64).ravel()
        if arr.size == 0:
            raise DegenerateInputError(f"sample set {self.label!r} is empty")
        if not np.all(np.isfinite(arr) & (arr > 0)):
            raise DomainError(f"sample set {self.label!r} has non-finite or non-positive values")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    def __len__(self):
        return self.values.size

    def __eq__(self, other):
        if not isinstance(other, SampleSet):
            return NotImplemented
        return self.label == other.label and np.array_equal(self.values, other.values)


@dataclass(frozen=True)
class GroupSummary:
    label: str
    point_fc: float
    lower_fc: float
    upper_fc: float
    interval_kind: str = "confidence interval"

    def __post_init__(self):
        vals = (self.point_fc, self.lower_fc, self.upper_fc)
        if not all(math.isfinite(v) and v > 0 for v in vals):
            raise DomainError(f"group {self.label!r}: fold changes must be finite and > 0")
        if not self.lower_fc <= self.point_fc <= self.upper_fc:
            raise DomainError(f"group {self.label!r}: need lower <= point <= upper")


@dataclass(frozen=True)
class FiveNumberSummary:
    min: float
    q1: float
    median: float
    q3: float
    max: float
    label: str = ""

    def __post_init__(self):
        vals = self.as_tuple()
        if not all(math.isfinite(v) and v > 0 for v in vals):
            raise DomainError(f"summary {self.label!r}: fold changes must be finite and > 0")
        if any(b < a for a, b in zip(vals, vals[1:])):
            raise DomainError(f"summary {self.label!r}: need min <= q1 <= median <= q3 <= max")

    def as_tuple(self):
        return (self.min, self.q1, self.median, self.q3, self.max)


@dataclass(frozen=True, eq=False)
class DensityCurve:
    grid: np.ndarray
    density: np.ndarray
    scale: ScaleKind = ScaleKind.MADFC
    bandwidth: float = field(default=float("nan"))

    def integral(self):
        return float(np.trapezoid(self.density, self.grid))


def _as_sample_set(samples):
    return samples if isinstance(samples, SampleSet) else SampleSet(samples)


def fold_change_of_groups(experiment, control):
    """Ratio of the experiment mean to the control mean."""
    exp_vals = np.asarray(getattr(experiment, "values", experiment), dtype=np.float64)
    ctrl_vals = np.asarray(getattr(control, "values", control), dtype=np.float64)
    if exp_vals.size == 0 or ctrl_vals.size == 0:
        raise DegenerateInputError("both groups need at least one sample")
    ctrl_mean = float(np.mean(ctrl_vals))
    if not ctrl_mean > 0:
        raise DegenerateInputError(f"control mean must be > 0, got {ctrl_mean!r}")
    fc = float(np.mean(exp_vals)) / ctrl_mean
    if not (math.isfinite(fc) and fc > 0):
        raise DegenerateInputError(f"fold change {fc!r} is not a positive finite ratio")
    return fc


def quantile_summary(samples, label=None):
    """Min, quartiles and max with linearly interpolated (type 7) quantiles."""
    samples = _as_sample_set(samples)
    if len(samples) < MIN_SUMMARY_SAMPLES:
        raise DegenerateInputError(
            f"need >= {MIN_SUMMARY_SAMPLES} samples for a five-number summary, got {len(samples)}")
    q = np.quantile(samples.values, [0.0, 0.25, 0.5, 0.75, 1.0], method="linear")
    return FiveNumberSummary(*map(float, q), label=samples.label if label is None else label)


def silverman_bandwidth(values):
    """0.9 * min(sd, IQR/1.34) * n^(-1/5); falls back to sd when the IQR is 0."""
    values = np.asarray(values, dtype=np.float64)
    sd = float(np.std(values, ddof=1))
    q75, q25 = np.quantile(values, [0.75, 0.25])
    spread = min(sd, (q75 - q25) / 1.34) or sd
    return 0.9 * spread * values.size ** -0.2


def kde_density(samples, scale=ScaleKind.MADFC, grid_points=KDE_GRID_POINTS):
    """Gaussian KDE of the samples in ``scale``'s transformed space.

    The grid spans the data range padded by three bandwidths and the curve is
    rescaled to integrate to one over it (trapezoid rule).
    """
    samples = _as_sample_set(samples)
    if len(samples) < MIN_SUMMARY_SAMPLES:
        raise DegenerateInputError(
            f"need >= {MIN_SUMMARY_SAMPLES} samples for a density, got {len(samples)}")
    coords = np.ascontiguousarray(scale_forward(scale, samples.values), dtype=np.float64)
    bw = silverman_bandwidth(coords)
    if not bw > 0:
        raise DegenerateInputError(f"samples {samples.label!r} have zero variance")
    lo, hi = coords.min() - KDE_GRID_PAD * bw, coords.max() + KDE_GRID_PAD * bw
    grid = np.linspace(lo, hi, grid_points)
    dens = np.asarray(kernels.gaussian_kde(coords, grid, bw))
    dens = dens / np.trapezoid(dens, grid)
    return DensityCurve(grid=grid, density=dens, scale=ScaleKind(scale), bandwidth=bw)


def interval_from_fcz(point_fc, half_width):
    """Interval reaching ``half_width`` fold-change units either side of the point."""
    if not (math.isfinite(half_width) and half_width >= 0):
        raise DomainError(f"half_width must be finite and >= 0, got {half_width!r}")
    center = mad_forward(float(point_fc))
    if half_width == 0:
        return float(point_fc), float(point_fc)
    return mad_inverse(center - half_width), mad_inverse(center + half_width)
