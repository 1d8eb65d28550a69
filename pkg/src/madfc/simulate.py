"""Synthetic datasets with known structure in MAD-FC space.

* intervals: point estimates on an evenly spaced MAD grid, each with an
  interval reaching 2 fold-change units either side.
* boxes: medians swept from 1/9 to 9 (MAD -8 .. 8, step 2), quartile
  boundaries 2 units apart.
* violins: one shared set of normal deviates, translated to each group
  center, so every group has the same shape in MAD space.

Group placement is a reconstruction: evenly spaced centers
``-(k-1), -(k-3), ..., k-1`` for ``k`` groups.

Random draws use numpy's PCG64 bit generator seeded with the given integer
and ``Generator.standard_normal`` (ziggurat) for normal deviates.
"""
import numpy as np

from .ingest import ExpressionMatrix
from .stats import FiveNumberSummary, GroupSummary, SampleSet, interval_from_fcz
from .transform import mad_inverse

__all__ = [
    "group_centers",
    "make_rng",
    "simulate_interval_dataset",
    "simulate_boxplot_dataset",
    "simulate_violin_dataset",
    "INTERVAL_HALF_WIDTH",
    "BOX_MEDIANS",
    "DEFAULT_SIGMA",
]

INTERVAL_HALF_WIDTH = 2.0
BOX_MEDIANS = tuple(range(-8, 9, 2))
# MAD offsets of (min, q1, median, q3, max) from the median
BOX_OFFSETS = (-4, -2, 0, 2, 4)
DEFAULT_SIGMA = 1.0


def make_rng(seed):
    return np.random.Generator(np.random.PCG64(seed))


def group_centers(group_count):
    """Evenly spaced MAD coordinates -(k-1) .. k-1 in steps of 2."""
    if group_count < 1:
        raise ValueError(f"group_count must be >= 1, got {group_count}")
    return [float(2 * i - (group_count - 1)) for i in range(group_count)]


def simulate_interval_dataset(group_count=5, seed=0, half_width=INTERVAL_HALF_WIDTH):
    """Groups with identical interval widths in MAD units.

    The layout is fully determined by ``group_count``; ``seed`` is accepted
    for interface symmetry with the other simulators.
    """
    if group_count < 2:
        raise ValueError(f"group_count must be >= 2, got {group_count}")
    groups = []
    for i, center in enumerate(group_centers(group_count), start=1):
        point = mad_inverse(center)
        lower, upper = interval_from_fcz(point, half_width)
        groups.append(GroupSummary(f"G{i}", point, lower, upper, "confidence interval"))
    return groups


def simulate_boxplot_dataset(seed=0):
    """Nine five-number summaries with medians 1/9 .. 9."""
    return [
        FiveNumberSummary(*(mad_inverse(float(m + off)) for off in BOX_OFFSETS), label=f"G{i}")
        for i, m in enumerate(BOX_MEDIANS, start=1)
    ]


def simulate_violin_dataset(group_count=5, samples_per_group=200, sigma_fcz=DEFAULT_SIGMA,
                            seed=0):
    """Groups whose MAD-space samples are one deviate vector shifted per group."""
    if samples_per_group < 50:
        raise ValueError(f"samples_per_group must be >= 50, got {samples_per_group}")
    if not sigma_fcz > 0:
        raise ValueError(f"sigma_fcz must be > 0, got {sigma_fcz}")
    deviates = make_rng(seed).standard_normal(samples_per_group) * sigma_fcz
    labels = [f"G{i}" for i in range(1, group_count + 1)]
    gene = "simulated"
    cells = {
        (gene, label): SampleSet(mad_inverse(center + deviates), label=label)
        for label, center in zip(labels, group_centers(group_count))
    }
    return ExpressionMatrix((gene,), tuple(labels), cells)
