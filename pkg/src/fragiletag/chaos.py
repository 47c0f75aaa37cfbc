"""Keyed logistic-map keystream.

Each step produces two consecutive logistic iterates (x, y) in the open
unit interval and advances the state to x; the pair drives pixel-position
selection.  Seeding goes through a SHA-256 digest of caller-supplied key
material so the same passphrase always reproduces the same stream.

Sequences are reproducible only under strict IEEE-754 double arithmetic
(round-to-nearest-even, no FMA, no extended precision); the compiled
kernel is built accordingly.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

from .errors import ChaosError

DEFAULT_R = 3.999  # fully chaotic regime, safely off the r=4 boundary

_TWO_53 = float(2 ** 53)

# Seeds sitting exactly on these values either leave (0,1) within two
# iterations at r=4 or can pin the orbit; chaos_seed nudges off them.
_STATIC_SEEDS = (0.0, 0.25, 0.5, 0.75)


@dataclass(frozen=True)
class ChaosState:
    """Current iterate k and map parameter r; stepping returns a new state."""

    k: float
    r: float = DEFAULT_R

    def __post_init__(self):
        if not 0.0 < self.k < 1.0:
            raise ChaosError(f"degenerate chaos state: k={self.k!r} outside (0,1)")
        if not 0.0 < self.r <= 4.0:
            raise ValueError(f"logistic parameter out of range: r={self.r!r}")


def logistic_pair(k: float, r: float) -> tuple[float, float]:
    """Two consecutive logistic iterates starting from k.

    Raises ChaosError if the orbit degenerates: an iterate leaves (0,1),
    or x equals k exactly, which would freeze the stream.  Any arithmetic
    change here must be mirrored in _select_c.pyx.
    """
    x = r * k * (1.0 - k)
    y = r * x * (1.0 - x)
    if not (0.0 < x < 1.0 and 0.0 < y < 1.0) or x == k:
        raise ChaosError("degenerate chaos state")
    return x, y


def chaos_step(state: ChaosState) -> tuple[float, float, ChaosState]:
    """Draw one (x, y) pair and advance the state to x."""
    x, y = logistic_pair(state.k, state.r)
    return x, y, ChaosState(x, state.r)


def unit_from_digest(digest: bytes) -> float:
    """Top 53 bits of a digest as a dyadic rational in [0, 1)."""
    if len(digest) < 8:
        raise ValueError("digest too short")
    return (int.from_bytes(digest[:8], "big") >> 11) / _TWO_53


def seed_from_digest(digest: bytes, r: float = DEFAULT_R) -> ChaosState:
    """Map a digest into a valid seed, nudging off the static points."""
    k = unit_from_digest(digest)
    banned = _STATIC_SEEDS + (1.0 - 1.0 / r,)
    while k in banned or not 0.0 < k < 1.0:
        k = math.nextafter(k, 1.0)
    return ChaosState(k, r)


def chaos_seed(key_material: bytes, r: float = DEFAULT_R) -> ChaosState:
    """Derive a keystream state from arbitrary key bytes."""
    if not key_material:
        raise ValueError("empty key")
    return seed_from_digest(hashlib.sha256(key_material).digest(), r)
