"""End-to-end hide / reveal over an in-memory image."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bmp import Image
from .embed import PixelPlan, embed_all, extract_all, select_pixels
from .grammar import Grammar
from .lexicon import Lexicon
from .payload import to_chunks, unframe
from .textcodec import DigitLayout, StegoText, decode_text, encode_text


@dataclass
class Hidden:
    image: Image
    text: StegoText
    plan: PixelPlan


def hide(carrier: Image, payload: bytes, grammar: Grammar, lexicon: Lexicon,
         seed: int | None = None) -> Hidden:
    """Hide ``payload`` at random pixels of ``carrier`` and spell their positions.

    One generator seeded from ``seed`` drives both pixel selection and word
    choice, so a fixed seed gives byte-identical output.
    """
    rng = np.random.default_rng(seed)
    chunks = to_chunks(payload)
    plan = select_pixels(carrier.width, carrier.height, len(chunks), rng)
    layout = DigitLayout.for_image(carrier.width, carrier.height)
    text = encode_text(plan, layout, grammar, lexicon, rng)
    return Hidden(embed_all(carrier, plan, chunks), text, plan)


def reveal(stego: Image, text: str, lexicon: Lexicon) -> bytes:
    layout = DigitLayout.for_image(stego.width, stego.height)
    plan = decode_text(text, layout, lexicon)
    return unframe(extract_all(stego, plan))
