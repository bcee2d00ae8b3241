"""Exception hierarchy shared by every layer of the toolkit."""

from __future__ import annotations


class StegoError(Exception):
    """Base class for all toolkit errors."""


# payload framing

class PayloadTooLarge(StegoError):
    pass


class MalformedHeader(StegoError):
    pass


class TruncatedStream(StegoError):
    pass


# images

class ImageError(StegoError):
    """Anything wrong with a carrier or stego image file."""


class NotBmp(ImageError):
    pass


class UnsupportedDepth(ImageError):
    pass


class UnsupportedCompression(ImageError):
    pass


class CorruptFile(ImageError):
    pass


class OutOfBounds(StegoError, IndexError):
    def __init__(self, x: int, y: int, width: int, height: int):
        super().__init__(f"pixel ({x}, {y}) outside {width}x{height} image")
        self.x, self.y = x, y


# embedding

class CapacityExceeded(StegoError):
    pass


class PlanMismatch(StegoError):
    pass


# grammar / lexicon

class GrammarError(StegoError):
    pass


class LengthCapExceeded(GrammarError):
    pass


class EmptyInput(GrammarError):
    pass


class LexiconError(StegoError):
    pass


class DuplicateWordAcrossCategories(LexiconError):
    def __init__(self, word: str, first: int, second: int):
        super().__init__(
            f"word {word!r} appears in category {first} and category {second}"
        )
        self.word, self.first, self.second = word, first, second


class UnknownPosTag(LexiconError, GrammarError):
    pass


class MalformedLine(LexiconError):
    pass


class MissingCategory(LexiconError):
    def __init__(self, digit: int):
        super().__init__(f"lexicon has no [category {digit}] section")
        self.digit = digit


class EmptySlot(LexiconError):
    def __init__(self, digit: int, pos):
        super().__init__(f"no {pos} words in category {digit}")
        self.digit, self.pos = digit, pos


# text codec

class TextError(StegoError):
    """The stego text cannot be turned back into coordinates."""


class UnknownWord(TextError):
    def __init__(self, word: str, position: int | None = None, sentence: int | None = None):
        where = ""
        if sentence is not None:
            where += f" in sentence {sentence + 1}"
        if position is not None:
            where += f" at word {position + 1}"
        super().__init__(f"word {word!r}{where} is not in the lexicon")
        self.word, self.position, self.sentence = word, position, sentence


class WrongSentenceLength(TextError):
    pass


class DuplicateCoordinate(TextError):
    pass


class EmptyText(TextError):
    pass


class MalformedDigits(TextError):
    pass


class CoordinateOverflow(StegoError):
    pass


class SentenceEncodingFailed(StegoError):
    def __init__(self, digits: str, blocking):
        slots = ", ".join(f"({d}, {p})" for d, p in sorted(blocking, key=str))
        super().__init__(
            f"no grammatical tag sequence can spell {digits!r}; empty slots: {slots}"
        )
        self.digits, self.blocking = digits, frozenset(blocking)


class UnderivableLength(StegoError):
    pass
