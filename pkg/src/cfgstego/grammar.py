"""Context-free grammar over part-of-speech preterminals.

Generation works on exact yield lengths: ``pos_sequences(g, n)`` returns every
tag sequence of length ``n`` the start symbol derives. Because every
production is non-erasing, a symbol deriving ``n`` tags can only be split
into parts of strictly smaller length (or handed whole to a unit rule), so a
memo keyed on ``(symbol, length)`` is enough; left recursion such as
``Nominal -> Nominal Noun`` needs no CNF rewrite.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import EmptyInput, GrammarError, LengthCapExceeded, UnknownPosTag

DEFAULT_LENGTH_CAP = 12


class PosTag(str, enum.Enum):
    Det = "Det"
    Pronoun = "Pronoun"
    ProperNoun = "ProperNoun"
    Noun = "Noun"
    Verb = "Verb"
    Preposition = "Preposition"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, name: str) -> "PosTag":
        """Accept ``ProperNoun``, ``Proper-Noun`` and ``proper_noun`` alike."""
        key = name.replace("-", "").replace("_", "").lower()
        for tag in cls:
            if tag.value.lower() == key:
                return tag
        raise UnknownPosTag(f"unknown part-of-speech tag {name!r}")


Symbol = str  # nonterminal name, or a PosTag (which is also a str)
TagSeq = tuple[PosTag, ...]


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All ways to write ``total`` as an ordered sum of ``parts`` positive ints."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first, *rest)


@dataclass(frozen=True)
class Grammar:
    productions: tuple[tuple[Symbol, tuple[Symbol, ...]], ...]
    start: Symbol = "S"
    length_cap: int = DEFAULT_LENGTH_CAP
    _rules: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        rules: dict[Symbol, list[tuple[Symbol, ...]]] = {}
        for lhs, rhs in self.productions:
            if not rhs:
                raise GrammarError(f"erasing production for {lhs}")
            rules.setdefault(lhs, []).append(tuple(rhs))
        if self.start not in rules:
            raise GrammarError(f"start symbol {self.start!r} has no productions")
        for lhs, alts in rules.items():
            for rhs in alts:
                for sym in rhs:
                    if sym not in rules and not isinstance(sym, PosTag):
                        raise UnknownPosTag(
                            f"{sym!r} (in {lhs} -> {' '.join(rhs)}) is neither a "
                            "nonterminal nor a part-of-speech tag"
                        )
        object.__setattr__(self, "_rules", {k: tuple(v) for k, v in rules.items()})
        self._check_unit_cycles()

    def _check_unit_cycles(self) -> None:
        # A -> B -> ... -> A through single-symbol rules would make the
        # (symbol, length) recursion loop forever.
        unit = {
            a: {rhs[0] for rhs in alts if len(rhs) == 1 and rhs[0] in self._rules}
            for a, alts in self._rules.items()
        }
        for a in unit:
            seen, stack = set(), list(unit[a])
            while stack:
                b = stack.pop()
                if b == a:
                    raise GrammarError(f"unit-production cycle through {a}")
                if b not in seen:
                    seen.add(b)
                    stack.extend(unit[b])

    @property
    def nonterminals(self) -> frozenset[Symbol]:
        return frozenset(self._rules)

    @property
    def preterminals(self) -> frozenset[PosTag]:
        return frozenset(
            s for alts in self._rules.values() for rhs in alts for s in rhs
            if isinstance(s, PosTag)
        )

    def rules_for(self, symbol: Symbol) -> tuple[tuple[Symbol, ...], ...]:
        return self._rules.get(symbol, ())

    def is_preterminal(self, symbol: Symbol) -> bool:
        return isinstance(symbol, PosTag)

    @cached_property
    def table(self) -> "LengthTable":
        return LengthTable(self)


class LengthTable:
    """Memo of ``(symbol, length) -> frozenset of tag sequences``."""

    def __init__(self, grammar: Grammar):
        self.grammar = grammar
        self.memo: dict[tuple[Symbol, int], frozenset[TagSeq]] = {}
        self._derivable: dict[tuple[Symbol, int], bool] = {}

    def sequences(self, symbol: Symbol, length: int) -> frozenset[TagSeq]:
        if isinstance(symbol, PosTag):
            return frozenset({(symbol,)}) if length == 1 else frozenset()
        key = (symbol, length)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        out: set[TagSeq] = set()
        for rhs in self.grammar.rules_for(symbol):
            if len(rhs) > length:
                continue
            for split in compositions(length, len(rhs)):
                parts = [self.sequences(s, n) for s, n in zip(rhs, split)]
                if not all(parts):
                    continue
                for combo in product(*parts):
                    out.add(tuple(t for piece in combo for t in piece))
        result = frozenset(out)
        self.memo[key] = result
        return result

    def derivable(self, symbol: Symbol, length: int) -> bool:
        """Boolean version of ``sequences`` that never materialises the sets."""
        if isinstance(symbol, PosTag):
            return length == 1
        key = (symbol, length)
        if key in self._derivable:
            return self._derivable[key]
        ok = any(
            all(self.derivable(s, n) for s, n in zip(rhs, split))
            for rhs in self.grammar.rules_for(symbol) if len(rhs) <= length
            for split in compositions(length, len(rhs))
        )
        self._derivable[key] = ok
        return ok


def pos_sequences(g: Grammar, length: int) -> frozenset[TagSeq]:
    if length < 1:
        return frozenset()
    if length > g.length_cap:
        raise LengthCapExceeded(f"length {length} exceeds cap {g.length_cap}")
    return g.table.sequences(g.start, length)


def derivable_lengths(g: Grammar, max_length: int) -> set[int]:
    return {n for n in range(1, max_length + 1) if g.table.derivable(g.start, n)}


def recognize(g: Grammar, tags: Sequence[PosTag]) -> bool:
    """Chart-style recognition: can the start symbol derive exactly ``tags``?

    Works span by span, so it has no length cap and shares nothing with the
    generator beyond the grammar itself.
    """
    tags = tuple(tags)
    if not tags:
        raise EmptyInput("cannot recognise an empty tag sequence")
    memo: dict[tuple[Symbol, int, int], bool] = {}

    def spans(rhs, i, j):
        # every way to cut tags[i:j] into len(rhs) nonempty consecutive pieces
        for split in compositions(j - i, len(rhs)):
            ok, k = True, i
            for sym, n in zip(rhs, split):
                if not derives(sym, k, k + n):
                    ok = False
                    break
                k += n
            if ok:
                return True
        return False

    def derives(sym, i, j):
        if isinstance(sym, PosTag):
            return j - i == 1 and tags[i] == sym
        key = (sym, i, j)
        if key not in memo:
            memo[key] = any(
                spans(rhs, i, j) for rhs in g.rules_for(sym) if len(rhs) <= j - i
            )
        return memo[key]

    return derives(g.start, 0, len(tags))


def _symbol(name: str, nonterminals: set[str]) -> Symbol:
    if name in nonterminals:
        return name
    return PosTag.parse(name)


def parse_grammar(text: str, *, start: str | None = None,
                  length_cap: int = DEFAULT_LENGTH_CAP) -> Grammar:
    """Parse ``LHS -> A B | C`` lines. ``#`` starts a comment.

    The first left-hand side is the start symbol unless ``start`` is given.
    """
    raw: list[tuple[str, list[str]]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise GrammarError(f"line {lineno}: expected 'LHS -> RHS', got {line!r}")
        lhs, rhs = (s.strip() for s in line.split("->", 1))
        if not lhs or len(lhs.split()) != 1:
            raise GrammarError(f"line {lineno}: bad left-hand side {lhs!r}")
        for alt in rhs.split("|"):
            symbols = alt.split()
            if not symbols:
                raise GrammarError(f"line {lineno}: empty alternative for {lhs}")
            raw.append((lhs, symbols))
    if not raw:
        raise GrammarError("grammar file has no productions")
    nonterminals = {lhs for lhs, _ in raw}
    productions = tuple(
        (lhs, tuple(_symbol(s, nonterminals) for s in rhs)) for lhs, rhs in raw
    )
    return Grammar(productions, start=start or raw[0][0], length_cap=length_cap)


def load_grammar(path=None, **kwargs) -> Grammar:
    if path is None:
        text = resources.files("cfgstego.data").joinpath("grammar.cfg").read_text()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_grammar(text, **kwargs)


def default_grammar() -> Grammar:
    return load_grammar()


def all_tag_sequences(length: int, alphabet: Iterable[PosTag] = tuple(PosTag)):
    return product(tuple(alphabet), repeat=length)
