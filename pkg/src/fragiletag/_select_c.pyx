# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled position-selection kernel; _select_py holds the reference twin.

Arithmetic must stay bit-identical to the pure-Python kernel: plain IEEE
doubles in the same evaluation order, libm fmod/floor, and no FMA
contraction (the extension is built with -ffp-contract=off).
"""

from libc.math cimport floor, fmod

import numpy as np

from .errors import CapacityError, ChaosError


cdef inline Py_ssize_t _map_unit(double u, Py_ssize_t extent):
    # round(fmod(u*1000, extent-1)), half away from zero; operands are
    # nonnegative and u < 1, so the cast and comparison are exact
    cdef double v = fmod(u * 1000.0, <double>(extent - 1))
    cdef double f = floor(v)
    cdef Py_ssize_t i = <Py_ssize_t>f
    if v - f >= 0.5:
        i += 1
    return i


def select_positions_kernel(unsigned char[:, ::1] cover, double k, double r, Py_ssize_t count):
    """Claim `count` pixels of an initialized cover, clearing their low nibbles.

    Same contract as _select_py.select_positions_kernel: cover is modified
    in place, zero low nibble is the claim sentinel, returns (count, 2)
    int64 coordinates in draw order.
    """
    cdef Py_ssize_t rows = cover.shape[0]
    cdef Py_ssize_t cols = cover.shape[1]
    cdef Py_ssize_t budget = rows * cols
    claimed_arr = np.zeros((rows, cols), dtype=np.uint8)
    cdef unsigned char[:, ::1] claimed = claimed_arr
    positions_arr = np.empty((count, 2), dtype=np.int64)
    cdef long long[:, ::1] positions = positions_arr
    cdef Py_ssize_t i, row, col, probes, row_tries
    cdef double x, y
    for i in range(count):
        x = r * k * (1.0 - k)
        y = r * x * (1.0 - x)
        if not (0.0 < x < 1.0 and 0.0 < y < 1.0) or x == k:
            raise ChaosError("degenerate chaos state")
        k = x
        row = _map_unit(x, rows)
        col = _map_unit(y, cols)
        probes = 0
        row_tries = 0
        while (cover[row, col] & 0x0F) == 0:
            probes += 1
            if probes > budget:
                raise CapacityError("embedding capacity exceeded")
            # probe down the column (0-based: +2 modulo rows-1); a full
            # fruitless column scan advances the column by the same rule
            row = (row + 2) % (rows - 1)
            row_tries += 1
            if row_tries >= rows:
                col = (col + 2) % (cols - 1)
                row_tries = 0
        if claimed[row, col]:
            raise RuntimeError("claim sentinel violated")
        claimed[row, col] = 1
        cover[row, col] = cover[row, col] & 0xF0
        positions[i, 0] = row
        positions[i, 1] = col
    return positions_arr
