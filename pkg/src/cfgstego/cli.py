"""Command-line front end.

    cfgstego encode   --carrier in.bmp --message "..." --out-image out.bmp --out-text out.txt
    cfgstego decode   --image out.bmp --text out.txt --out secret.bin
    cfgstego capacity --carrier in.bmp
    cfgstego validate --lexicon words.txt --grammar rules.cfg

Exit codes: 0 ok, 1 usage/IO, 2 capacity exceeded (encode) or malformed
text (decode), 3 bad image, 4 bad lexicon/grammar, 5 sentence encoding
failed, 6 payload frame inconsistent.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import bmp
from .embed import RAW_RATIO, capacity_bits, max_payload_bytes
from .errors import (
    CapacityExceeded,
    CoordinateOverflow,
    GrammarError,
    ImageError,
    LexiconError,
    MalformedHeader,
    OutOfBounds,
    SentenceEncodingFailed,
    TextError,
    TruncatedStream,
    UnderivableLength,
)
from .grammar import derivable_lengths, load_grammar
from .lexicon import check_coverage, load_lexicon
from .payload import chunk_count, HEADER_BITS
from .stego import hide, reveal

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAPACITY = 2
EXIT_BAD_TEXT = 2
EXIT_BAD_IMAGE = 3
EXIT_BAD_LEXICON = 4
EXIT_ENCODING_FAILED = 5
EXIT_BAD_FRAME = 6

MAX_SEED = 2**64 - 1


@dataclass
class EncodeConfig:
    carrier_path: Path
    out_image_path: Path
    out_text_path: Path
    message: str | None = None
    message_file: Path | None = None
    lexicon_path: Path | None = None
    grammar_path: Path | None = None
    seed: int | None = None

    def read_message(self) -> bytes:
        if (self.message is None) == (self.message_file is None):
            raise ValueError("give exactly one of a message string or a message file")
        if self.message_file is not None:
            return Path(self.message_file).read_bytes()
        return self.message.encode("utf-8")


@dataclass
class DecodeConfig:
    stego_image_path: Path
    text_path: Path
    out_payload_path: Path | str
    lexicon_path: Path | None = None


def _fail(code: int, err: Exception | str) -> int:
    print(f"cfgstego: error: {err}", file=sys.stderr)
    return code


def _load_rules(lexicon_path, grammar_path):
    return load_grammar(grammar_path), load_lexicon(lexicon_path)


def cmd_encode(cfg: EncodeConfig) -> int:
    try:
        payload = cfg.read_message()
    except (ValueError, OSError) as e:
        return _fail(EXIT_USAGE, e)
    try:
        carrier = bmp.read(cfg.carrier_path)
    except (ImageError, OSError) as e:
        return _fail(EXIT_BAD_IMAGE, f"carrier {cfg.carrier_path}: {e}")
    try:
        grammar, lexicon = _load_rules(cfg.lexicon_path, cfg.grammar_path)
    except (LexiconError, GrammarError, OSError) as e:
        return _fail(EXIT_BAD_LEXICON, e)

    needed = chunk_count(HEADER_BITS + 8 * len(payload))
    available = carrier.width * carrier.height
    if needed > available:
        return _fail(EXIT_CAPACITY, CapacityExceeded(
            f"payload of {len(payload)} bytes needs {needed} pixels; carrier has {available} "
            f"(max payload {max_payload_bytes(carrier.width, carrier.height)} bytes)"
        ))
    try:
        result = hide(carrier, payload, grammar, lexicon, cfg.seed)
    except CapacityExceeded as e:
        return _fail(EXIT_CAPACITY, e)
    except (SentenceEncodingFailed, UnderivableLength, CoordinateOverflow) as e:
        return _fail(EXIT_ENCODING_FAILED, e)

    bmp.write(result.image, cfg.out_image_path)
    Path(cfg.out_text_path).write_text(result.text.render() + "\n", encoding="utf-8")
    print(f"pixels used: {len(result.plan)} of {available} "
          f"({100 * len(result.plan) / available:.4f}% of carrier)")
    print(f"sentences: {len(result.text)}")
    return EXIT_OK


def cmd_decode(cfg: DecodeConfig) -> int:
    try:
        stego = bmp.read(cfg.stego_image_path)
    except (ImageError, OSError) as e:
        return _fail(EXIT_BAD_IMAGE, f"image {cfg.stego_image_path}: {e}")
    try:
        lexicon = load_lexicon(cfg.lexicon_path)
    except (LexiconError, OSError) as e:
        return _fail(EXIT_BAD_LEXICON, e)
    try:
        text = Path(cfg.text_path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        return _fail(EXIT_BAD_TEXT, f"text {cfg.text_path}: {e}")
    try:
        payload = reveal(stego, text, lexicon)
    except (TextError, OutOfBounds) as e:
        return _fail(EXIT_BAD_TEXT, e)
    except (MalformedHeader, TruncatedStream) as e:
        return _fail(EXIT_BAD_FRAME, e)

    if str(cfg.out_payload_path) == "-":
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
    else:
        Path(cfg.out_payload_path).write_bytes(payload)
        print(f"recovered {len(payload)} bytes", file=sys.stderr)
    return EXIT_OK


def cmd_capacity(carrier_path) -> int:
    try:
        img = bmp.read(carrier_path)
    except (ImageError, OSError) as e:
        return _fail(EXIT_BAD_IMAGE, f"carrier {carrier_path}: {e}")
    print(f"dimensions: {img.width}x{img.height}")
    print(f"raw embeddable bits: {capacity_bits(img.width, img.height)}")
    print(f"raw ratio: 9/24 = {100 * RAW_RATIO:.1f}%")
    print(f"max payload bytes: {max_payload_bytes(img.width, img.height)}")
    return EXIT_OK


def cmd_validate(lexicon_path, grammar_path) -> int:
    try:
        grammar, lexicon = _load_rules(lexicon_path, grammar_path)
    except (LexiconError, GrammarError, OSError) as e:
        return _fail(EXIT_BAD_LEXICON, e)
    report = check_coverage(lexicon, grammar)
    lengths = sorted(derivable_lengths(grammar, grammar.length_cap))
    print(f"grammar: {len(grammar.productions)} productions, "
          f"tags {', '.join(sorted(map(str, grammar.preterminals)))}")
    print(f"derivable sentence lengths (<= {grammar.length_cap}): {lengths}")
    print(f"lexicon: {len(lexicon)} words in 10 categories")
    if not report.total_coverage:
        for digit, pos in report.missing_slots:
            print(f"missing slot: category {digit} has no {pos}")
        return _fail(EXIT_BAD_LEXICON, f"{len(report.missing_slots)} empty (digit, tag) slots")
    print("coverage: complete")
    return EXIT_OK


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value <= MAX_SEED:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfgstego",
        description="Hide data in BMP pixels and spell their locations as English text.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enc = sub.add_parser("encode", help="hide a message in a carrier image")
    enc.add_argument("--carrier", required=True, type=Path)
    msg = enc.add_mutually_exclusive_group(required=True)
    msg.add_argument("--message", help="literal message (UTF-8)")
    msg.add_argument("--message-file", type=Path)
    enc.add_argument("--lexicon", type=Path, help="defaults to the bundled sample")
    enc.add_argument("--grammar", type=Path, help="defaults to the bundled grammar")
    enc.add_argument("--out-image", required=True, type=Path)
    enc.add_argument("--out-text", required=True, type=Path)
    enc.add_argument("--seed", type=_seed, help="unsigned 64-bit seed; OS entropy if omitted")

    dec = sub.add_parser("decode", help="recover a message from image + text")
    dec.add_argument("--image", required=True, type=Path)
    dec.add_argument("--text", required=True, type=Path)
    dec.add_argument("--lexicon", type=Path)
    dec.add_argument("--out", required=True, help="output file, or '-' for stdout")

    cap = sub.add_parser("capacity", help="report how much a carrier can hold")
    cap.add_argument("--carrier", required=True, type=Path)

    val = sub.add_parser("validate", help="check a lexicon and grammar")
    val.add_argument("--lexicon", type=Path)
    val.add_argument("--grammar", type=Path)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "encode":
        return cmd_encode(EncodeConfig(
            carrier_path=args.carrier, out_image_path=args.out_image,
            out_text_path=args.out_text, message=args.message,
            message_file=args.message_file, lexicon_path=args.lexicon,
            grammar_path=args.grammar, seed=args.seed,
        ))
    if args.command == "decode":
        return cmd_decode(DecodeConfig(
            stego_image_path=args.image, text_path=args.text,
            out_payload_path=args.out, lexicon_path=args.lexicon,
        ))
    if args.command == "capacity":
        return cmd_capacity(args.carrier)
    return cmd_validate(args.lexicon, args.grammar)


if __name__ == "__main__":
    sys.exit(main())
