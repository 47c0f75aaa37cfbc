"""Pure-Python position-selection kernel.

Twin of the compiled kernel in _select_c.pyx.  Both walk the keystream one
draw per payload nibble, map each draw onto cover coordinates, probe
forward on collisions, and clear the claimed low nibble.  The two must
stay bit-identical: same expression order, plain IEEE doubles, libm
fmod/floor semantics.  Change one, change both.
"""

from __future__ import annotations

import math

import numpy as np

from .chaos import logistic_pair
from .errors import CapacityError


def map_unit_scalar(u: float, extent: int) -> int:
    """Map a unit-interval draw onto a 0-based coordinate in [0, extent-1].

    Computed as round(fmod(u*1000, extent-1)) with round half away from
    zero; the 1-based +1 and the to-0-based -1 cancel.  Operands are
    nonnegative, so v - floor(v) is exact and the .5 comparison is safe.
    """
    v = math.fmod(u * 1000.0, extent - 1.0)
    f = math.floor(v)
    i = int(f)
    if v - f >= 0.5:
        i += 1
    return i


def select_positions_kernel(cover: np.ndarray, k: float, r: float, count: int) -> np.ndarray:
    """Claim `count` pixels of an initialized cover, clearing their low nibbles.

    cover (2-D uint8) is modified in place.  Every low nibble must be
    nonzero on entry: a zero low nibble is the claim sentinel, so a draw
    landing on one collides and probes forward.  Returns (count, 2) int64
    coordinates in draw order.
    """
    rows, cols = cover.shape
    budget = rows * cols
    claimed = np.zeros((rows, cols), dtype=bool)
    positions = np.empty((count, 2), dtype=np.int64)
    for i in range(count):
        x, y = logistic_pair(k, r)
        k = x
        row = map_unit_scalar(x, rows)
        col = map_unit_scalar(y, cols)
        probes = 0
        row_tries = 0
        while cover[row, col] & 0x0F == 0:
            probes += 1
            if probes > budget:
                raise CapacityError("embedding capacity exceeded")
            # probe down the column: 1-based row' = rem(row+1, rows-1) + 1,
            # i.e. 0-based row advances by 2 modulo rows-1 (the last row is
            # reachable only by a direct draw)
            row = (row + 2) % (rows - 1)
            row_tries += 1
            if row_tries >= rows:
                # column scanned without a free pixel: advance the column by
                # the same rule and start over
                col = (col + 2) % (cols - 1)
                row_tries = 0
        if claimed[row, col]:
            raise RuntimeError("claim sentinel violated")
        claimed[row, col] = True
        cover[row, col] &= 0xF0
        positions[i, 0] = row
        positions[i, 1] = col
    return positions
