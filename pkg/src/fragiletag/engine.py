"""Core watermarking pipeline.

Embedding forces every cover pixel odd so a zero low nibble can act as a
claim sentinel, walks the keyed logistic stream to pick one cover pixel
per tag nibble (probing forward on collisions), clears the claimed low
nibbles, then writes the tag's high nibbles into them.  The ordered
coordinate list is the extraction key; a digest of the payload rides
along so verification can run without the original tag.

Every pixel write touches only the low nibble, so the watermarked image
and the cover always share their high-nibble planes; any low-nibble
change at a recorded position corrupts exactly one payload nibble, which
is what makes the mark fragile and tampering localizable.
"""

from __future__ import annotations

import numpy as np

from . import backend
from ._select_py import map_unit_scalar
from .chaos import ChaosState, chaos_seed
from .errors import CapacityError, RecordError
from .model import (PositionRecord, VerifyReport, as_gray_image,
                    as_nibble_plane, payload_digest)


def capacity(cover_rows: int, cover_cols: int) -> int:
    """Maximum payload nibbles a cover can host: half its pixels."""
    return (cover_rows * cover_cols) // 2


def initialize_cover(cover) -> np.ndarray:
    """Make every pixel odd: +1 on even values, identity on odd ones.

    Setting bit 0 never carries past bit 3, so high nibbles are untouched
    and every low nibble becomes nonzero (the claim sentinel relies on it).
    """
    return as_gray_image(cover) | np.uint8(1)


def prepare_tag(tag) -> np.ndarray:
    """Payload plane: the high nibble of every tag pixel."""
    return as_gray_image(tag) >> np.uint8(4)


def map_unit_to_coord(u: float, extent: int) -> int:
    """Map a unit-interval draw onto a 0-based axis coordinate.

    Covers narrower than 2 pixels are rejected: the mapping reduces the
    draw modulo extent-1.
    """
    if extent < 2:
        raise CapacityError("cover too small")
    if not 0.0 < u < 1.0:
        raise ValueError("unit draw outside (0,1)")
    return map_unit_scalar(u, extent)


def select_positions(cover_init, tag_shape, state: ChaosState):
    """Pick one cover pixel per tag nibble along the keystream.

    Takes an initialized cover (every low nibble nonzero) and returns a
    copy with the claimed low nibbles cleared plus the position record.
    The record's tag_digest is a placeholder until embed_payload runs.
    """
    img = as_gray_image(cover_init)
    rows, cols = img.shape
    if rows < 2 or cols < 2:
        raise CapacityError("cover too small")
    tag_rows, tag_cols = int(tag_shape[0]), int(tag_shape[1])
    if tag_rows < 1 or tag_cols < 1:
        raise ValueError("tag dimensions must be positive")
    count = tag_rows * tag_cols
    if count > capacity(rows, cols):
        raise CapacityError("embedding capacity exceeded")
    if np.any(img & np.uint8(0x0F) == 0):
        raise ValueError("cover not initialized: zero low nibble present")
    cleared = np.ascontiguousarray(img.copy())
    positions = backend.select_positions_kernel(cleared, state.k, state.r, count)
    record = PositionRecord(rows, cols, tag_rows, tag_cols, positions)
    return cleared, record


def embed_payload(cover_cleared, payload, record: PositionRecord) -> np.ndarray:
    """Write payload nibbles into the cleared low nibbles at recorded positions.

    Sets record.tag_digest to the payload digest as a side effect and
    returns the watermarked image; no other pixel changes.
    """
    img = as_gray_image(cover_cleared)
    plane = as_nibble_plane(payload)
    if plane.shape != (record.tag_rows, record.tag_cols):
        raise RecordError("record/payload mismatch")
    record.validate()
    if img.shape != (record.cover_rows, record.cover_cols):
        raise RecordError("record does not match image dimensions")
    rows = record.positions[:, 0]
    cols = record.positions[:, 1]
    if np.any(img[rows, cols] & np.uint8(0x0F)):
        raise RecordError("recorded pixel has a nonzero low nibble")
    out = img.copy()
    out[rows, cols] = (out[rows, cols] & np.uint8(0xF0)) | plane.reshape(-1)
    record.tag_digest = payload_digest(plane)
    return out


def embed(cover, tag, key_material: bytes):
    """Full pipeline: initialize, select keyed positions, embed the tag's
    high nibbles.  Deterministic in (cover, tag, key_material)."""
    cov = as_gray_image(cover)
    tg = as_gray_image(tag)
    state = chaos_seed(key_material)
    cleared, record = select_positions(initialize_cover(cov), tg.shape, state)
    watermarked = embed_payload(cleared, prepare_tag(tg), record)
    return watermarked, record


def extract(watermarked, record: PositionRecord):
    """Read the payload back through the record.

    Returns (reconstructed_tag, payload): the payload is the low nibble at
    each recorded position, and the reconstruction restores nibbles to the
    high half (low four bits zero).
    """
    img = as_gray_image(watermarked)
    record.validate()
    if img.shape != (record.cover_rows, record.cover_cols):
        raise RecordError("record does not match image dimensions")
    nibbles = img[record.positions[:, 0], record.positions[:, 1]] & np.uint8(0x0F)
    payload = nibbles.reshape(record.tag_rows, record.tag_cols)
    reconstructed = payload << np.uint8(4)
    return reconstructed, payload


def verify(watermarked, record: PositionRecord, reference=None) -> VerifyReport:
    """Re-extract and compare against the record's digest.

    With a reference plane (the prepared original tag), also reports the
    nibble error rate and locates every corrupted nibble on both the tag
    and the cover.  Without one, BER is reported as 0 and no positions are
    listed; authenticity comes from the digest alone either way.
    """
    _, payload = extract(watermarked, record)
    authentic = payload_digest(payload) == record.tag_digest
    if reference is None:
        return VerifyReport(authentic=authentic, ber=0.0, tampered_positions=[])
    ref = as_nibble_plane(reference)
    if ref.shape != payload.shape:
        raise RecordError("record/payload mismatch")
    diff = (payload != ref).reshape(-1)
    tag_cols = record.tag_cols
    tampered = [
        (int(i) // tag_cols, int(i) % tag_cols,
         int(record.positions[i, 0]), int(record.positions[i, 1]))
        for i in np.nonzero(diff)[0]
    ]
    return VerifyReport(authentic=authentic, ber=float(diff.mean()),
                        tampered_positions=tampered)
