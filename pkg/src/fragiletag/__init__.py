"""Fragile image watermarking toolkit.

Embeds a tag image's high nibbles into a grayscale cover at keystream-
selected pixel positions, emits the position record that doubles as the
extraction key, and later verifies integrity and localizes tampering.
"""

from .attacks import AttackSpec, apply_attack
from .backend import BACKEND
from .chaos import ChaosState, chaos_seed, chaos_step
from .engine import (capacity, embed, embed_payload, extract,
                     initialize_cover, map_unit_to_coord, prepare_tag,
                     select_positions, verify)
from .errors import (AttackSpecError, CapacityError, ChaosError,
                     FragileTagError, ImageFormatError, KeyFileError,
                     RecordError)
from .imgio import read_image, write_image
from .keyfile import decode_key, encode_key, read_key, write_key
from .metrics import ber, psnr
from .model import (PositionRecord, VerifyReport, as_gray_image,
                    as_nibble_plane, payload_digest)

__version__ = "0.1.0"

__all__ = [
    "AttackSpec", "AttackSpecError", "BACKEND", "CapacityError", "ChaosError",
    "ChaosState", "FragileTagError", "ImageFormatError", "KeyFileError",
    "PositionRecord", "RecordError", "VerifyReport", "apply_attack",
    "as_gray_image", "as_nibble_plane", "ber", "capacity", "chaos_seed",
    "chaos_step", "decode_key", "embed", "embed_payload", "encode_key",
    "extract", "initialize_cover", "map_unit_to_coord", "payload_digest",
    "prepare_tag", "psnr", "read_image", "read_key", "select_positions",
    "verify", "write_image", "write_key",
]
