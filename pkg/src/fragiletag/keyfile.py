"""Binary key-file codec (magic "FTWK", version 1).

Layout, integers little-endian:

    offset  size  field
    0       4     magic "FTWK"
    4       2     version (= 1)
    6       4     cover_rows
    10      4     cover_cols
    14      4     tag_rows
    18      4     tag_cols
    22      32    tag digest (SHA-256 of the payload nibbles)
    54      8*n   (row, col) uint32 pairs, n = tag_rows * tag_cols

Encoding is canonical, so decode/encode round-trips are byte identities.
Decoding validates the structure and every record invariant before
allocating anything sized from the header; all failures raise
KeyFileError, never a lower-level exception.
"""

from __future__ import annotations

import struct

import numpy as np

from .errors import KeyFileError, RecordError
from .model import DIGEST_SIZE, PositionRecord

MAGIC = b"FTWK"
VERSION = 1

_HEADER = struct.Struct("<4sHIIII")
_PAIR_SIZE = 8
_U32_MAX = 2 ** 32 - 1


def encode_key(record: PositionRecord) -> bytes:
    """Serialize a validated record to canonical key-file bytes."""
    record.validate()
    if max(record.cover_rows, record.cover_cols,
           record.tag_rows, record.tag_cols) > _U32_MAX:
        raise KeyFileError("dimensions exceed the 32-bit key-file range")
    head = _HEADER.pack(MAGIC, VERSION, record.cover_rows, record.cover_cols,
                        record.tag_rows, record.tag_cols)
    return head + record.tag_digest + record.positions.astype("<u4").tobytes()


def decode_key(data: bytes) -> PositionRecord:
    """Parse and validate key-file bytes."""
    if len(data) < 4 or data[:4] != MAGIC:
        raise KeyFileError("not a key file")
    if len(data) < 6:
        raise KeyFileError("corrupt key file: truncated header")
    (version,) = struct.unpack_from("<H", data, 4)
    if version != VERSION:
        raise KeyFileError(f"unsupported version {version}")
    if len(data) < _HEADER.size + DIGEST_SIZE:
        raise KeyFileError("corrupt key file: truncated header")
    _, _, cover_rows, cover_cols, tag_rows, tag_cols = _HEADER.unpack_from(data, 0)
    if min(cover_rows, cover_cols, tag_rows, tag_cols) < 1:
        raise KeyFileError("corrupt key file: zero dimension")
    count = tag_rows * tag_cols
    expected = _HEADER.size + DIGEST_SIZE + _PAIR_SIZE * count
    if len(data) < expected:
        raise KeyFileError("corrupt key file: truncated position list")
    if len(data) > expected:
        raise KeyFileError("corrupt key file: trailing data")
    digest = data[_HEADER.size:_HEADER.size + DIGEST_SIZE]
    pairs = np.frombuffer(data, dtype="<u4", offset=_HEADER.size + DIGEST_SIZE)
    record = PositionRecord(cover_rows, cover_cols, tag_rows, tag_cols,
                            pairs.reshape(count, 2).astype(np.int64), digest)
    try:
        record.validate()
    except RecordError as exc:
        raise KeyFileError(f"corrupt key file: {exc}") from exc
    return record


def write_key(record: PositionRecord, sink) -> None:
    """Write a key file to a path or binary stream."""
    data = encode_key(record)
    if hasattr(sink, "write"):
        sink.write(data)
    else:
        with open(sink, "wb") as fh:
            fh.write(data)


def read_key(source) -> PositionRecord:
    """Read a key file from a path or binary stream."""
    if hasattr(source, "read"):
        data = source.read()
    else:
        with open(source, "rb") as fh:
            data = fh.read()
    return decode_key(data)
