"""Independent brute-force referees for the embedding pipeline.

These re-derive every expectation with plain Python loops and integer
arithmetic instead of the library's vectorized paths, so a bug in the
engine cannot hide inside its own checker.  Keep them at small scales
(<= 32x32 covers); they trade speed for obviousness.
"""

import numpy as np

from fragiletag.engine import embed, extract


def oracle_roundtrip(cover, tag, key_material) -> bool:
    """Embed then extract; compare element-for-element against first principles.

    True iff every extracted payload nibble equals the tag pixel's high
    nibble AND every watermarked pixel kept the cover pixel's high nibble.
    """
    watermarked, record = embed(cover, tag, key_material)
    _, payload = extract(watermarked, record)

    tag_px = np.asarray(tag).tolist()
    got = payload.tolist()
    for i in range(len(tag_px)):
        for j in range(len(tag_px[0])):
            if got[i][j] != tag_px[i][j] // 16:
                return False

    wm = watermarked.tolist()
    cov = np.asarray(cover).tolist()
    for i in range(len(cov)):
        for j in range(len(cov[0])):
            if wm[i][j] // 16 != cov[i][j] // 16:
                return False
    return True


def _flat_payload(image, record):
    return [int(v) for v in extract(image, record)[1].reshape(-1)]


def oracle_fragility(watermarked, record) -> bool:
    """Exhaustive single-pixel tamper sweep over every recorded position.

    True iff each of the 15 possible low-nibble alterations of each
    recorded pixel changes exactly one extracted nibble: the one whose
    record index owns that pixel.
    """
    baseline = _flat_payload(watermarked, record)
    for idx in range(record.count):
        row = int(record.positions[idx, 0])
        col = int(record.positions[idx, 1])
        original = int(watermarked[row, col])
        for nibble in range(16):
            candidate = (original & 0xF0) | nibble
            if candidate == original:
                continue
            mutated = watermarked.copy()
            mutated[row, col] = candidate
            changed = [m for m, v in enumerate(_flat_payload(mutated, record))
                       if v != baseline[m]]
            if changed != [idx]:
                return False
    return True


def oracle_complement_untouched(watermarked, record) -> bool:
    """True iff altering any non-recorded pixel changes no extracted nibble."""
    recorded = {(int(r), int(c)) for r, c in record.positions}
    baseline = _flat_payload(watermarked, record)
    rows, cols = watermarked.shape
    for row in range(rows):
        for col in range(cols):
            if (row, col) in recorded:
                continue
            original = int(watermarked[row, col])
            for nibble in range(16):
                candidate = (original & 0xF0) | nibble
                if candidate == original:
                    continue
                mutated = watermarked.copy()
                mutated[row, col] = candidate
                if _flat_payload(mutated, record) != baseline:
                    return False
    return True
