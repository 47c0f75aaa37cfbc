"""Command-line interface.

Exit codes: 0 success (and authentic for `verify`), 2 tampered (`verify`
only), 1 usage/IO/format errors with a one-line diagnostic on stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .attacks import KINDS, AttackSpec, apply_attack
from .engine import embed, extract, prepare_tag, verify
from .errors import FragileTagError
from .imgio import read_image, write_image
from .keyfile import read_key, write_key
from .metrics import ber, psnr


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; 2 is reserved for
    # "tampered", so usage failures are remapped to exit 1
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _rect_arg(text: str) -> tuple[int, int, int, int]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("rect must be row,col,height,width")
    try:
        row, col, height, width = (int(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError("rect must be four integers") from exc
    return row, col, height, width


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="fragiletag",
        description="Fragile watermarking: embed a tag image at keyed pixel "
                    "positions, then verify integrity and localize tampering.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("embed", help="embed a tag image into a cover image")
    p.add_argument("--cover", required=True, help="cover image (PGM or PNG)")
    p.add_argument("--tag", required=True, help="tag image whose high nibbles are embedded")
    p.add_argument("--key-phrase", required=True, help="passphrase seeding the position stream")
    p.add_argument("--out", required=True, help="watermarked image output path")
    p.add_argument("--record", required=True, help="position-record (key file) output path")
    p.add_argument("--to-gray", action="store_true",
                   help="convert color inputs via BT.601 luma")
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("extract", help="extract the embedded tag using a key file")
    p.add_argument("--image", required=True, help="watermarked image")
    p.add_argument("--record", required=True, help="key file written by embed")
    p.add_argument("--out", required=True, help="reconstructed tag output path")
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("verify", help="check integrity; exit 0 authentic, 2 tampered")
    p.add_argument("--image", required=True, help="image to verify")
    p.add_argument("--record", required=True, help="key file written by embed")
    p.add_argument("--reference", help="original tag image, enables tamper localization")
    p.add_argument("--report", required=True, help="JSON report output path")
    p.add_argument("--to-gray", action="store_true",
                   help="convert a color reference via BT.601 luma")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("attack", help="apply a seeded tamper attack to an image")
    p.add_argument("--image", required=True)
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--out", required=True)
    p.add_argument("--density", type=float, help="salt_pepper corruption probability")
    p.add_argument("--sigma", type=float, help="additive_noise stddev")
    p.add_argument("--rect", type=_rect_arg, help="region_overwrite rect: row,col,height,width")
    p.add_argument("--fill", type=int, help="region_overwrite fill value")
    p.add_argument("--count", type=int, help="bit_flip pixel count")
    p.add_argument("--seed", type=int, default=0, help="attack RNG seed")
    p.set_defaults(func=_cmd_attack)

    p = sub.add_parser("metrics", help="print PSNR and high-nibble BER of two images")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=_cmd_metrics)

    return parser


def _cmd_embed(args) -> int:
    cover = read_image(args.cover, to_gray=args.to_gray)
    tag = read_image(args.tag, to_gray=args.to_gray)
    watermarked, record = embed(cover, tag, args.key_phrase.encode("utf-8"))
    write_image(watermarked, args.out)
    write_key(record, args.record)
    print(f"PSNR: {psnr(cover, watermarked):.3f} dB")
    return 0


def _cmd_extract(args) -> int:
    reconstructed, _ = extract(read_image(args.image), read_key(args.record))
    write_image(reconstructed, args.out)
    return 0


def _cmd_verify(args) -> int:
    image = read_image(args.image)
    record = read_key(args.record)
    reference = None
    if args.reference:
        reference = prepare_tag(read_image(args.reference, to_gray=args.to_gray))
    report = verify(image, record, reference)
    doc = {
        "authentic": report.authentic,
        "ber": report.ber,
        "tampered": [
            {"tag_row": tr, "tag_col": tc, "cover_row": cr, "cover_col": cc}
            for tr, tc, cr, cc in report.tampered_positions
        ],
    }
    if reference is not None:
        # corruption-only PSNR: reconstruction vs the quantized reference
        _, payload = extract(image, record)
        value = psnr(reference * np.uint8(16), payload * np.uint8(16))
        doc["psnr"] = value if math.isfinite(value) else "inf"
    Path(args.report).write_text(json.dumps(doc, indent=2) + "\n", encoding="ascii")
    print("authentic" if report.authentic else "tampered")
    return 0 if report.authentic else 2


def _cmd_attack(args) -> int:
    image = read_image(args.image)
    spec = AttackSpec(kind=args.kind, density=args.density, sigma=args.sigma,
                      rect=args.rect, fill=args.fill, count=args.count,
                      rng_seed=args.seed)
    write_image(apply_attack(image, spec), args.out)
    return 0


def _cmd_metrics(args) -> int:
    a = read_image(args.a)
    b = read_image(args.b)
    print(f"PSNR: {psnr(a, b):.3f} dB")
    print(f"BER: {ber(prepare_tag(a), prepare_tag(b)):.6f}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (FragileTagError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    raise SystemExit(main())
