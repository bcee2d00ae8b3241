"""Pixel coordinates <-> digit strings <-> sentences <-> stego text.

Each coordinate becomes one sentence. The sentence has one word per digit of
the zero-padded ``x`` followed by the zero-padded ``y``; a word's lexicon
category is the digit it spells. Digit widths come from the image size, so
sender and receiver agree on them without any side channel.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .embed import Coordinate
from .errors import (
    CoordinateOverflow,
    DuplicateCoordinate,
    EmptyText,
    MalformedDigits,
    SentenceEncodingFailed,
    UnderivableLength,
    UnknownWord,
    WrongSentenceLength,
)
from .grammar import Grammar, PosTag, pos_sequences
from .lexicon import Lexicon, pick_words, word_to_digit


@dataclass(frozen=True)
class DigitLayout:
    x_digits: int
    y_digits: int

    def __post_init__(self):
        if self.x_digits < 1 or self.y_digits < 1:
            raise ValueError("digit widths must be at least 1")

    @classmethod
    def for_image(cls, width: int, height: int) -> "DigitLayout":
        return cls(len(str(width - 1)), len(str(height - 1)))

    @property
    def sentence_length(self) -> int:
        return self.x_digits + self.y_digits


@dataclass(frozen=True)
class StegoText:
    sentences: tuple[tuple[str, ...], ...]

    def render(self) -> str:
        return " ".join(render_sentence(s) for s in self.sentences)

    def __str__(self) -> str:
        return self.render()

    def __len__(self) -> int:
        return len(self.sentences)


def render_sentence(words: Sequence[str]) -> str:
    first, *rest = words
    return " ".join([first[:1].upper() + first[1:], *rest]) + "."


def coord_to_digits(c: Coordinate, layout: DigitLayout) -> str:
    x, y = c
    if not (0 <= x < 10**layout.x_digits and 0 <= y < 10**layout.y_digits):
        raise CoordinateOverflow(
            f"({x}, {y}) does not fit {layout.x_digits}+{layout.y_digits} digits"
        )
    return f"{x:0{layout.x_digits}d}{y:0{layout.y_digits}d}"


def digits_to_coord(s: str, layout: DigitLayout) -> Coordinate:
    if len(s) != layout.sentence_length or not (s.isascii() and s.isdigit()):
        raise MalformedDigits(
            f"{s!r} is not {layout.sentence_length} decimal digits"
        )
    return Coordinate(int(s[:layout.x_digits]), int(s[layout.x_digits:]))


@lru_cache(maxsize=None)
def _candidates(g: Grammar, length: int) -> tuple[tuple[PosTag, ...], ...]:
    # sorted so the seeded shuffle below is reproducible across runs
    return tuple(sorted(pos_sequences(g, length)))


def _random_order(items, rng):
    # one draw in the common case where the first pick is usable
    first = int(rng.integers(len(items)))
    yield items[first]
    for i in rng.permutation(len(items) - 1):
        yield items[i + (i >= first)]


def encode_sentence(digits: str, g: Grammar, lex: Lexicon,
                    rng: np.random.Generator) -> list[str]:
    """Pick a grammatical tag sequence whose slots all have words, then words.

    Candidate tag sequences are tried in a seeded random order, so the same
    digits come out as different sentences from run to run.
    """
    length = len(digits)
    candidates = _candidates(g, length) if 1 <= length <= g.length_cap else ()
    if not candidates:
        raise UnderivableLength(f"the grammar derives no sentence of {length} words")
    ds = [int(d) for d in digits]
    blocking: set[tuple[int, PosTag]] = set()
    for tags in _random_order(candidates, rng):
        missing = [(d, t) for d, t in zip(ds, tags) if not lex.slot(d, t)]
        if missing:
            blocking.update(missing)
            continue
        return pick_words(lex, ds, tags, rng)
    raise SentenceEncodingFailed(digits, blocking)


def decode_sentence(words: Sequence[str], lex: Lexicon, *, sentence: int | None = None) -> str:
    if not words:
        raise ValueError("cannot decode an empty sentence")
    out = []
    for i, w in enumerate(words):
        try:
            out.append(str(word_to_digit(lex, w)))
        except UnknownWord:
            raise UnknownWord(w, position=i, sentence=sentence) from None
    return "".join(out)


def encode_text(plan: Sequence[Coordinate], layout: DigitLayout, g: Grammar,
                lex: Lexicon, rng: np.random.Generator) -> StegoText:
    """One sentence per coordinate, in plan order.

    Randomness for the whole plan is drawn up front; a sentence whose first
    tag sequence hits an empty slot falls back to ``encode_sentence``.
    """
    rows = [coord_to_digits(c, layout) for c in plan]
    if not rows:
        return StegoText(())
    length = layout.sentence_length
    candidates = _candidates(g, length) if length <= g.length_cap else ()
    if not candidates:
        raise UnderivableLength(f"the grammar derives no sentence of {length} words")
    picks = rng.integers(len(candidates), size=len(rows))
    uniforms = rng.random((len(rows), length))
    by_slot = lex.by_slot
    sentences = []
    for digits, pick, us in zip(rows, picks, uniforms):
        slots = [by_slot.get((int(d), t), ()) for d, t in zip(digits, candidates[pick])]
        if all(slots):
            words = tuple(s[int(u * len(s))] for s, u in zip(slots, us))
        else:
            words = tuple(encode_sentence(digits, g, lex, rng))
        sentences.append(words)
    return StegoText(tuple(sentences))


def split_sentences(text: str) -> list[list[str]]:
    sentences = []
    for chunk in text.split("."):
        words = [w.lower() for w in chunk.split()]
        if words:
            sentences.append(words)
    return sentences


def decode_text(text: str, layout: DigitLayout, lex: Lexicon) -> list[Coordinate]:
    sentences = split_sentences(text)
    if not sentences:
        raise EmptyText("stego text contains no sentences")
    coords: list[Coordinate] = []
    seen: dict[Coordinate, int] = {}
    entries = lex.entries
    split = layout.x_digits
    for i, words in enumerate(sentences):
        if len(words) != layout.sentence_length:
            raise WrongSentenceLength(
                f"sentence {i + 1} has {len(words)} words, expected {layout.sentence_length}"
            )
        digits = [entries.get(w) for w in words]
        if None in digits:
            decode_sentence(words, lex, sentence=i)  # raises with the position
        x = y = 0
        for d in digits[:split]:
            x = 10 * x + d
        for d in digits[split:]:
            y = 10 * y + d
        c = Coordinate(x, y)
        if c in seen:
            raise DuplicateCoordinate(
                f"sentences {seen[c] + 1} and {i + 1} both point at ({c.x}, {c.y})"
            )
        seen[c] = i
        coords.append(c)
    return coords
