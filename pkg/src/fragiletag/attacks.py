"""Seeded tamper attacks for exercising the fragile watermark.

Every attack owns its randomness through rng_seed, so identical
(image, spec) pairs always produce identical outputs and experiments are
replayable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AttackSpecError
from .model import as_gray_image

KINDS = ("salt_pepper", "additive_noise", "region_overwrite", "bit_flip")


@dataclass
class AttackSpec:
    """Parameters for one deterministic attack; only the selected kind's
    fields are consulted."""

    kind: str
    density: float | None = None   # salt_pepper: per-pixel corruption probability
    sigma: float | None = None     # additive_noise: stddev in intensity units
    rect: tuple[int, int, int, int] | None = None  # region_overwrite: row, col, height, width
    fill: int | None = None        # region_overwrite: value written into rect
    count: int | None = None       # bit_flip: number of distinct pixels hit
    rng_seed: int = 0

    def validate(self, shape: tuple[int, int]) -> None:
        if self.kind not in KINDS:
            raise AttackSpecError(f"unknown attack kind {self.kind!r}")
        if not 0 <= int(self.rng_seed) < 2 ** 64:
            raise AttackSpecError("rng_seed must be an unsigned 64-bit integer")
        rows, cols = shape
        if self.kind == "salt_pepper":
            if self.density is None or not 0.0 <= self.density <= 1.0:
                raise AttackSpecError("salt_pepper needs density in [0, 1]")
        elif self.kind == "additive_noise":
            if self.sigma is None or self.sigma < 0.0:
                raise AttackSpecError("additive_noise needs sigma >= 0")
        elif self.kind == "region_overwrite":
            if self.rect is None or self.fill is None:
                raise AttackSpecError("region_overwrite needs rect and fill")
            row, col, height, width = self.rect
            if height < 1 or width < 1:
                raise AttackSpecError("rect height and width must be positive")
            if row < 0 or col < 0 or row + height > rows or col + width > cols:
                raise AttackSpecError("rect exceeds image bounds")
            if not 0 <= self.fill <= 255:
                raise AttackSpecError("fill must be in [0, 255]")
        elif self.kind == "bit_flip":
            if self.count is None or self.count < 1:
                raise AttackSpecError("bit_flip needs a positive count")
            if self.count > rows * cols:
                raise AttackSpecError("bit_flip count exceeds pixel count")


def apply_attack(image, spec: AttackSpec) -> np.ndarray:
    """Return an attacked copy of the image; the input is never modified."""
    img = as_gray_image(image)
    spec.validate(img.shape)
    rng = np.random.default_rng(int(spec.rng_seed))
    out = img.copy()
    if spec.kind == "salt_pepper":
        hit = rng.random(img.shape) < spec.density
        extremes = rng.integers(0, 2, size=img.shape, dtype=np.uint8) * np.uint8(255)
        out[hit] = extremes[hit]
    elif spec.kind == "additive_noise":
        noise = np.rint(rng.normal(0.0, spec.sigma, size=img.shape)).astype(np.int64)
        out = np.clip(img.astype(np.int64) + noise, 0, 255).astype(np.uint8)
    elif spec.kind == "region_overwrite":
        row, col, height, width = spec.rect
        out[row:row + height, col:col + width] = np.uint8(spec.fill)
    else:  # bit_flip
        flat = rng.choice(img.size, size=spec.count, replace=False)
        bits = rng.integers(0, 8, size=spec.count).astype(np.uint8)
        out.reshape(-1)[flat] ^= np.uint8(1) << bits
    return out
