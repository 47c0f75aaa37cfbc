"""Image file I/O: binary PGM (canonical, bit-exact) plus PNG support.

PGM is the canonical format: lossless and trivially byte-stable, so
embed/extract round-trips survive the filesystem.  Lossy formats are
refused outright (they would destroy the watermark on save).  PNG is
accepted on read, and written when the output path ends in .png.  Color
inputs are refused unless the caller asks for BT.601 luma conversion.
"""

from __future__ import annotations

import io
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import ImageFormatError
from .model import as_gray_image

_PNG_MAGIC = b"\x89PNG\r\n\x1a\n"
_WHITESPACE = b" \t\n\r\x0b\x0c"


def bt601_luma(rgb: np.ndarray) -> np.ndarray:
    """Y = round(0.299 R + 0.587 G + 0.114 B), rounding half away from zero."""
    v = 0.299 * rgb[..., 0] + 0.587 * rgb[..., 1] + 0.114 * rgb[..., 2]
    f = np.floor(v)
    return (f + (v - f >= 0.5)).astype(np.uint8)


def _skip_space_and_comments(data: bytes, pos: int) -> int:
    while pos < len(data):
        byte = data[pos]
        if byte in _WHITESPACE:
            pos += 1
        elif byte == 0x23:  # '#' comment runs to end of line
            while pos < len(data) and data[pos] not in (0x0A, 0x0D):
                pos += 1
        else:
            break
    return pos


def _parse_pnm(data: bytes, to_gray: bool) -> np.ndarray:
    channels = 1 if data[:2] == b"P5" else 3
    pos = 2
    fields = []
    while len(fields) < 3:
        pos = _skip_space_and_comments(data, pos)
        start = pos
        while pos < len(data) and data[pos] not in _WHITESPACE and data[pos] != 0x23:
            pos += 1
        token = data[start:pos]
        if not token.isdigit():
            raise ImageFormatError("malformed header")
        fields.append(int(token))
    width, height, maxval = fields
    if maxval != 255:
        raise ImageFormatError(f"unsupported maxval {maxval}")
    if width < 1 or height < 1:
        raise ImageFormatError("malformed header: zero dimension")
    # exactly one whitespace byte separates the maxval from the raster
    if pos >= len(data) or data[pos] not in _WHITESPACE:
        raise ImageFormatError("malformed header")
    pos += 1
    need = width * height * channels
    raster = data[pos:]
    if len(raster) < need:
        raise ImageFormatError("truncated pixel data")
    if len(raster) > need:
        raise ImageFormatError("trailing data after raster")
    arr = np.frombuffer(raster, dtype=np.uint8)
    if channels == 3:
        if not to_gray:
            raise ImageFormatError(
                "unsupported format: color image (pass --to-gray to convert)")
        return bt601_luma(arr.reshape(height, width, 3))
    return arr.reshape(height, width).copy()


def _read_png(data: bytes, to_gray: bool) -> np.ndarray:
    try:
        img = Image.open(io.BytesIO(data))
        img.load()
    except (UnidentifiedImageError, OSError, SyntaxError, ValueError) as exc:
        raise ImageFormatError(f"malformed PNG: {exc}") from exc
    if img.mode == "L":
        return np.asarray(img, dtype=np.uint8)
    if img.mode in ("I", "I;16", "I;16B", "I;16L", "F"):
        raise ImageFormatError(f"unsupported format: {img.mode} PNG is not 8-bit")
    if not to_gray:
        raise ImageFormatError(
            f"unsupported format: PNG mode {img.mode} (pass --to-gray to convert)")
    return bt601_luma(np.asarray(img.convert("RGB"), dtype=np.uint8))


def read_image(path, to_gray: bool = False) -> np.ndarray:
    """Read a grayscale image from a PGM/PPM or PNG file.

    to_gray enables BT.601 luma conversion of color inputs; without it any
    non-8-bit-grayscale pixel format is rejected.
    """
    data = Path(path).read_bytes()
    if data[:2] in (b"P5", b"P6"):
        return _parse_pnm(data, to_gray)
    if data[:2] in (b"P1", b"P2", b"P3", b"P4"):
        raise ImageFormatError("unsupported format: only binary P5/P6 PNM is supported")
    if data[:8] == _PNG_MAGIC:
        return _read_png(data, to_gray)
    raise ImageFormatError("unsupported format")


def write_image(image, path) -> None:
    """Write canonical binary PGM; paths ending in .png get 8-bit gray PNG."""
    img = as_gray_image(image)
    target = Path(path)
    if target.suffix.lower() == ".png":
        Image.fromarray(img, mode="L").save(target, format="PNG")
        return
    rows, cols = img.shape
    header = f"P5\n{cols} {rows}\n255\n".encode("ascii")
    target.write_bytes(header + np.ascontiguousarray(img).tobytes())
