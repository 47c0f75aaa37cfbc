"""Image quality and payload corruption metrics."""

from __future__ import annotations

import math

import numpy as np


def psnr(a, b) -> float:
    """Peak signal-to-noise ratio in dB against a 255 peak; +inf when identical."""
    x = np.asarray(a)
    y = np.asarray(b)
    if x.shape != y.shape:
        raise ValueError("dimension mismatch")
    mse = float(np.mean((x.astype(np.float64) - y.astype(np.float64)) ** 2))
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(255.0 ** 2 / mse)


def ber(a, b) -> float:
    """Fraction of positions where two planes disagree."""
    x = np.asarray(a)
    y = np.asarray(b)
    if x.shape != y.shape:
        raise ValueError("dimension mismatch")
    return float(np.mean(x != y))
