"""Numpy fallback for the compiled kernels in ``_kernels.pyx``.

Same formulas and operation order, so the transforms agree bit-for-bit.
"""
import math

import numpy as np

# grid points per block when broadcasting samples x grid
_KDE_BLOCK = 64


def mad_forward(x):
    x = np.asarray(x, dtype=np.float64)
    with np.errstate(divide="ignore"):
        return np.where(x >= 1.0, x - 1.0, -1.0 / x + 1.0)


def mad_inverse(t):
    t = np.asarray(t, dtype=np.float64)
    return np.where(t >= 0.0, t + 1.0, 1.0 / (1.0 - np.minimum(t, 0.0)))


def gaussian_kde(samples, grid, bandwidth):
    samples = np.asarray(samples, dtype=np.float64)
    grid = np.asarray(grid, dtype=np.float64)
    out = np.empty(grid.shape[0])
    inv_h = 1.0 / bandwidth
    norm = 1.0 / (samples.shape[0] * bandwidth * math.sqrt(2.0 * math.pi))
    for start in range(0, grid.shape[0], _KDE_BLOCK):
        block = grid[start:start + _KDE_BLOCK]
        u = (block[:, None] - samples[None, :]) * inv_h
        out[start:start + _KDE_BLOCK] = np.exp(-0.5 * u * u).sum(axis=1) * norm
    return out
