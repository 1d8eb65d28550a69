# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: element-wise MAD-FC transforms and Gaussian KDE evaluation.

Inputs are validated by the Python layer; these loops assume finite values
in the correct domain.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport exp, sqrt, M_PI

cnp.import_array()


def mad_forward(const double[::1] x):
    cdef Py_ssize_t i, n = x.shape[0]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] res = out
    cdef double v
    for i in range(n):
        v = x[i]
        if v >= 1.0:
            res[i] = v - 1.0
        else:
            res[i] = -1.0 / v + 1.0
    return out


def mad_inverse(const double[::1] t):
    cdef Py_ssize_t i, n = t.shape[0]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] res = out
    cdef double v
    for i in range(n):
        v = t[i]
        if v >= 0.0:
            res[i] = v + 1.0
        else:
            res[i] = 1.0 / (1.0 - v)
    return out


def gaussian_kde(const double[::1] samples, const double[::1] grid, double bandwidth):
    """Unnormalized-by-grid Gaussian KDE: mean of N(grid; sample, bandwidth)."""
    cdef Py_ssize_t i, j, n = samples.shape[0], m = grid.shape[0]
    out = np.zeros(m, dtype=np.float64)
    cdef double[::1] res = out
    cdef double inv_h = 1.0 / bandwidth
    cdef double norm = 1.0 / (n * bandwidth * sqrt(2.0 * M_PI))
    cdef double g, u, acc
    for j in range(m):
        g = grid[j]
        acc = 0.0
        for i in range(n):
            u = (g - samples[i]) * inv_h
            acc += exp(-0.5 * u * u)
        res[j] = acc * norm
    return out
