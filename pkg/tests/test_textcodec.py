import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cfgstego.embed import Coordinate, select_pixels
from cfgstego.errors import (
    CoordinateOverflow,
    DuplicateCoordinate,
    EmptyText,
    MalformedDigits,
    SentenceEncodingFailed,
    UnderivableLength,
    UnknownWord,
    WrongSentenceLength,
)
from cfgstego.grammar import PosTag, recognize
from cfgstego.lexicon import parse_lexicon, word_to_digit
from cfgstego.textcodec import (
    DigitLayout,
    StegoText,
    coord_to_digits,
    decode_sentence,
    decode_text,
    digits_to_coord,
    encode_sentence,
    encode_text,
    split_sentences,
)

from test_lexicon import full_text

L33 = DigitLayout(3, 3)


def tags_of(words, lex):
    """Recover the tag sequence the encoder must have used."""
    slots = {}
    for (d, t), ws in lex.by_slot.items():
        for w in ws:
            slots.setdefault(w, []).append(t)
    return [slots[w.lower()] for w in words]


@pytest.mark.parametrize("coord, digits", [
    ((206, 318), "206318"),
    ((709, 15), "709015"),
    ((0, 0), "000000"),
])
def test_coord_digits(coord, digits):
    assert coord_to_digits(Coordinate(*coord), L33) == digits
    assert digits_to_coord(digits, L33) == coord


def test_overflow():
    with pytest.raises(CoordinateOverflow):
        coord_to_digits(Coordinate(1000, 0), L33)


@pytest.mark.parametrize("bad", ["20631", "2063181", "20631x", "２０６３１８"])
def test_malformed_digits(bad):
    with pytest.raises(MalformedDigits):
        digits_to_coord(bad, L33)


@pytest.mark.parametrize("w, h, layout", [
    (1, 1, (1, 1)), (10, 11, (1, 2)), (800, 400, (3, 3)), (1000, 1001, (3, 4)),
])
def test_layout_for_image(w, h, layout):
    lay = DigitLayout.for_image(w, h)
    assert (lay.x_digits, lay.y_digits) == layout


def test_coord_round_trip_random():
    rng = np.random.default_rng(3)
    for x, y in rng.integers(0, 1000, (10_000, 2)):
        c = Coordinate(int(x), int(y))
        assert digits_to_coord(coord_to_digits(c, L33), L33) == c


def test_encode_sentence_206318(grammar, lexicon, rng):
    words = encode_sentence("206318", grammar, lexicon, rng)
    assert len(words) == 6
    assert decode_sentence(words, lexicon) == "206318"


def test_encode_empty_digits(grammar, lexicon, rng):
    with pytest.raises(UnderivableLength):
        encode_sentence("", grammar, lexicon, rng)


def test_encode_blocked_slots(grammar, rng):
    # category 2 keeps only its Verb words: "22" would need Verb Verb
    lex = parse_lexicon(full_text(drop={(2, t) for t in PosTag if t is not PosTag.Verb}))
    with pytest.raises(SentenceEncodingFailed) as exc:
        encode_sentence("22", grammar, lex, rng)
    assert {(2, PosTag.Pronoun), (2, PosTag.ProperNoun)} <= exc.value.blocking


def test_encode_uses_only_coverable_sequence(grammar, rng):
    # category 2 has only Verbs, category 0 only Pronouns: "20" is Verb Pronoun
    drop = {(2, t) for t in PosTag if t is not PosTag.Verb}
    drop |= {(0, t) for t in PosTag if t is not PosTag.Pronoun}
    lex = parse_lexicon(full_text(drop=drop))
    for _ in range(20):
        words = encode_sentence("20", grammar, lex, rng)
        assert words[0] in lex.slot(2, PosTag.Verb)
        assert words[1] in lex.slot(0, PosTag.Pronoun)


def test_encoded_sentence_is_grammatical(grammar, lexicon, rng):
    for _ in range(200):
        digits = "".join(map(str, rng.integers(0, 10, 6)))
        words = encode_sentence(digits, grammar, lexicon, rng)
        options = tags_of(words, lexicon)
        # bundled lexicon: each word has one tag
        assert all(len(o) == 1 for o in options)
        assert recognize(grammar, [o[0] for o in options])


def test_decode_sentence_unknown(lexicon):
    with pytest.raises(UnknownWord) as exc:
        decode_sentence(["the", "zeppelin"], lexicon)
    assert exc.value.position == 1


def test_encode_text_empty(grammar, lexicon, rng):
    text = encode_text([], L33, grammar, lexicon, rng)
    assert text == StegoText(()) and text.render() == ""


def test_render_format(grammar, lexicon, rng):
    text = encode_text([Coordinate(1, 2), Coordinate(3, 4)], DigitLayout(1, 1),
                       grammar, lexicon, rng).render()
    assert text.endswith(".") and text.count(".") == 2
    s1, s2 = text[:-1].split(". ")
    for s in (s1, s2):
        assert s[0].isupper() and len(s.split(" ")) == 2


def test_seven_coordinates(grammar, lexicon, rng):
    plan = [Coordinate(*c) for c in
            [(206, 318), (407, 192), (321, 129), (709, 15), (501, 0), (712, 200), (309, 108)]]
    text = encode_text(plan, L33, grammar, lexicon, rng)
    assert len(text) == 7 and len(split_sentences(text.render())) == 7
    assert decode_text(text.render(), L33, lexicon) == plan


def test_decode_wrong_length(grammar, lexicon, rng):
    text = encode_text([Coordinate(1, 2)], L33, grammar, lexicon, rng).render()
    short = " ".join(text.rstrip(".").split()[:-1]) + "."
    with pytest.raises(WrongSentenceLength):
        decode_text(short, L33, lexicon)


def test_decode_duplicate(grammar, lexicon, rng):
    a = encode_text([Coordinate(5, 6)], L33, grammar, lexicon, rng).render()
    b = encode_text([Coordinate(5, 6)], L33, grammar, lexicon, rng).render()
    with pytest.raises(DuplicateCoordinate):
        decode_text(a + " " + b, L33, lexicon)


@pytest.mark.parametrize("text", ["", "   \n", ". . ."])
def test_decode_empty(lexicon, text):
    with pytest.raises(EmptyText):
        decode_text(text, L33, lexicon)


def test_decode_unknown_word_position(grammar, lexicon, rng):
    text = encode_text([Coordinate(1, 2), Coordinate(3, 4)], L33, grammar, lexicon, rng).render()
    words = text.split()
    words[8] = "zeppelin"
    with pytest.raises(UnknownWord) as exc:
        decode_text(" ".join(words), L33, lexicon)
    assert (exc.value.sentence, exc.value.position) == (1, 2)


def test_decode_ignores_presentation(grammar, lexicon, rng):
    plan = [Coordinate(12, 34), Coordinate(56, 78)]
    text = encode_text(plan, DigitLayout(2, 2), grammar, lexicon, rng).render()
    messy = "\n\n" + text.upper().replace(" ", "   \t") + "  \n"
    assert decode_text(messy, DigitLayout(2, 2), lexicon) == plan


def test_seed_varies_surface_text(grammar, lexicon):
    plan = [Coordinate(206, 318)]
    texts = {encode_text(plan, L33, grammar, lexicon, np.random.default_rng(s)).render()
             for s in range(20)}
    assert len(texts) > 1


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 2000), st.integers(1, 2000), st.integers(0, 2**32), st.data())
def test_text_round_trip(grammar, lexicon, w, h, seed, data):
    rng = np.random.default_rng(seed)
    n = data.draw(st.integers(1, min(40, w * h)))
    plan = select_pixels(w, h, n, rng)
    layout = DigitLayout.for_image(w, h)
    text = encode_text(plan, layout, grammar, lexicon, rng)
    assert decode_text(text.render(), layout, lexicon) == plan
    for words, c in zip(text.sentences, plan):
        assert "".join(str(word_to_digit(lexicon, wd)) for wd in words) == coord_to_digits(c, layout)


def test_encode_text_falls_back_on_blocked_slots(grammar):
    # no Det or Noun anywhere: sequences built from NP -> Det Nominal are
    # blocked, the Pronoun/ProperNoun/Verb/Preposition ones still work
    drop = {(d, t) for d in range(10) for t in (PosTag.Det, PosTag.Noun)}
    lex = parse_lexicon(full_text(drop=drop))
    rng = np.random.default_rng(12)
    plan = select_pixels(100, 100, 300, rng)
    text = encode_text(plan, DigitLayout(2, 2), grammar, lex, rng)
    assert decode_text(text.render(), DigitLayout(2, 2), lex) == plan
    for words in text.sentences:
        assert recognize(grammar, [next(iter(lex.tags(w))) for w in words])


def test_encode_text_failure_propagates(grammar):
    lex = parse_lexicon(full_text(drop={(d, t) for d in range(10) for t in PosTag
                                        if t is not PosTag.Det}))
    with pytest.raises(SentenceEncodingFailed):
        encode_text([Coordinate(1, 1)], DigitLayout(1, 1), grammar, lex,
                    np.random.default_rng(0))


def test_pick_words_matches_slots(lexicon, rng):
    from cfgstego.lexicon import pick_words
    tags = (PosTag.Det, PosTag.Noun, PosTag.Verb)
    words = pick_words(lexicon, [2, 0, 6], tags, rng)
    assert [lexicon.slot(d, t).count(w) for d, t, w in zip([2, 0, 6], tags, words)] == [1, 1, 1]
