"""Shared data model: validated rasters, position records, verify reports.

Images and nibble planes are plain 2-D uint8 numpy arrays; the validators
below are the single place their invariants are enforced.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

from .errors import RecordError

DIGEST_SIZE = 32


def as_gray_image(image) -> np.ndarray:
    """Validate an 8-bit single-channel raster (2-D uint8, nonempty)."""
    arr = np.asarray(image)
    if arr.ndim != 2 or arr.dtype != np.uint8:
        raise ValueError("expected a 2-D uint8 grayscale array")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError("image must have at least one row and one column")
    return arr


def as_nibble_plane(plane) -> np.ndarray:
    """Validate a per-pixel 4-bit payload plane (2-D uint8, values in [0, 15])."""
    arr = np.asarray(plane)
    if arr.ndim != 2 or arr.dtype != np.uint8:
        raise ValueError("expected a 2-D uint8 nibble array")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError("nibble plane must have at least one row and one column")
    if int(arr.max()) > 15:
        raise ValueError("nibble values must be in [0, 15]")
    return arr


def payload_digest(plane) -> bytes:
    """SHA-256 over the payload nibbles, one nibble per byte, row-major."""
    arr = as_nibble_plane(plane)
    return hashlib.sha256(np.ascontiguousarray(arr).tobytes()).digest()


@dataclass
class PositionRecord:
    """Ordered cover coordinates carrying the payload; this is the secret key.

    positions[i] is the 0-based (row, col) cover pixel holding payload
    nibble i, in tag row-major order.  tag_digest commits to the embedded
    plane so verification can run without the original tag.
    """

    cover_rows: int
    cover_cols: int
    tag_rows: int
    tag_cols: int
    positions: np.ndarray = field(repr=False)  # (n, 2) int64
    tag_digest: bytes = bytes(DIGEST_SIZE)

    def __post_init__(self):
        self.positions = np.asarray(self.positions, dtype=np.int64)

    @property
    def count(self) -> int:
        return self.tag_rows * self.tag_cols

    def validate(self) -> "PositionRecord":
        """Check every structural invariant; raise RecordError on a breach."""
        for name in ("cover_rows", "cover_cols", "tag_rows", "tag_cols"):
            if int(getattr(self, name)) < 1:
                raise RecordError(f"{name} must be positive")
        if len(self.tag_digest) != DIGEST_SIZE:
            raise RecordError("tag digest must be 32 bytes")
        pos = self.positions
        if pos.ndim != 2 or pos.shape != (self.count, 2):
            raise RecordError("position list does not match tag dimensions")
        rows, cols = pos[:, 0], pos[:, 1]
        if (int(rows.min()) < 0 or int(cols.min()) < 0
                or int(rows.max()) >= self.cover_rows
                or int(cols.max()) >= self.cover_cols):
            raise RecordError("recorded coordinate out of cover bounds")
        # bounds hold, so flat indices fit in uint64 without wrapping
        flat = rows.astype(np.uint64) * np.uint64(self.cover_cols) + cols.astype(np.uint64)
        if np.unique(flat).size != pos.shape[0]:
            raise RecordError("duplicate recorded coordinate")
        return self


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of key-driven verification.

    tampered_positions holds (tag_row, tag_col, cover_row, cover_col) for
    every payload nibble that disagrees with the supplied reference; it is
    empty when no reference was given.
    """

    authentic: bool
    ber: float
    tampered_positions: list[tuple[int, int, int, int]]
