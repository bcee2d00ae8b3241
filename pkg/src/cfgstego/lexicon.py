"""Ten-category word lexicon: each word spells exactly one decimal digit.

File format::

    # comment
    [category 0]
    Det: this that
    Pronoun: i they us
    ...

A word may appear under several tags but only inside one category; the same
word in two categories would make the digit it spells ambiguous, so loading
rejects it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .errors import (
    DuplicateWordAcrossCategories,
    EmptySlot,
    MalformedLine,
    MissingCategory,
    UnknownWord,
)
from .grammar import Grammar, PosTag

DIGITS = range(10)
_WORD = re.compile(r"[A-Za-z']+")
_HEADER = re.compile(r"\[\s*category\s+(\d+)\s*\]", re.IGNORECASE)


@dataclass(frozen=True)
class Lexicon:
    entries: Mapping[str, int]
    by_slot: Mapping[tuple[int, PosTag], tuple[str, ...]]

    def words(self, digit: int) -> frozenset[str]:
        return frozenset(w for w, d in self.entries.items() if d == digit)

    def slot(self, digit: int, pos: PosTag) -> tuple[str, ...]:
        return self.by_slot.get((digit, pos), ())

    def tags(self, word: str) -> frozenset[PosTag]:
        word = word.lower()
        digit = self.entries.get(word)
        return frozenset(t for t in PosTag if word in self.slot(digit, t))

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class CoverageReport:
    missing_slots: tuple[tuple[int, PosTag], ...]

    @property
    def total_coverage(self) -> bool:
        return not self.missing_slots


def parse_lexicon(text: str) -> Lexicon:
    entries: dict[str, int] = {}
    slots: dict[tuple[int, PosTag], list[str]] = {}
    seen_categories: set[int] = set()
    current: int | None = None

    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        header = _HEADER.fullmatch(line)
        if header:
            current = int(header.group(1))
            if current not in DIGITS:
                raise MalformedLine(f"line {lineno}: category must be 0..9, got {current}")
            seen_categories.add(current)
            continue
        if current is None:
            raise MalformedLine(f"line {lineno}: entry before any [category N] header")
        if ":" not in line:
            raise MalformedLine(f"line {lineno}: expected 'POS: words', got {line!r}")
        tag_name, words = line.split(":", 1)
        pos = PosTag.parse(tag_name.strip())
        bucket = slots.setdefault((current, pos), [])
        for word in words.split():
            if not _WORD.fullmatch(word):
                raise MalformedLine(f"line {lineno}: bad word {word!r}")
            word = word.lower()
            prev = entries.get(word)
            if prev is not None and prev != current:
                raise DuplicateWordAcrossCategories(word, prev, current)
            entries[word] = current
            if word not in bucket:
                bucket.append(word)

    for digit in DIGITS:
        if digit not in seen_categories:
            raise MissingCategory(digit)

    return Lexicon(
        entries=MappingProxyType(entries),
        by_slot=MappingProxyType({k: tuple(v) for k, v in slots.items()}),
    )


def load_lexicon(source=None) -> Lexicon:
    """Load from a path, raw bytes, or the bundled sample when ``None``."""
    if source is None:
        text = resources.files("cfgstego.data").joinpath("lexicon.txt").read_text()
    elif isinstance(source, (bytes, bytearray)):
        text = bytes(source).decode("utf-8")
    else:
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    return parse_lexicon(text)


def word_to_digit(lex: Lexicon, word: str) -> int:
    try:
        return lex.entries[word.lower()]
    except KeyError:
        raise UnknownWord(word) from None


def pick_word(lex: Lexicon, digit: int, pos: PosTag, rng: np.random.Generator) -> str:
    choices = lex.slot(digit, pos)
    if not choices:
        raise EmptySlot(digit, pos)
    if len(choices) == 1:
        return choices[0]
    return choices[int(rng.integers(len(choices)))]


def pick_words(lex: Lexicon, digits, tags, rng: np.random.Generator) -> list[str]:
    """``pick_word`` for a whole sentence with a single draw from ``rng``."""
    slots = [lex.slot(d, t) for d, t in zip(digits, tags)]
    for (d, t), words in zip(zip(digits, tags), slots):
        if not words:
            raise EmptySlot(d, t)
    picks = rng.integers(0, [len(w) for w in slots])
    return [words[i] for words, i in zip(slots, picks)]


def check_coverage(lex: Lexicon, g: Grammar) -> CoverageReport:
    tags = sorted(g.preterminals, key=list(PosTag).index)
    missing = tuple((d, t) for d in DIGITS for t in tags if not lex.slot(d, t))
    return CoverageReport(missing)
