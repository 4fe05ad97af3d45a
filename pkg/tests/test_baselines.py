import random
import statistics

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shapestego.baselines import (DEFAULT_PAIR, DesignatedPair,
                                  designated_capacity, designated_embed,
                                  designated_extract, eligible_words,
                                  feature_embed, feature_extract,
                                  intersentence_embed, intersentence_extract,
                                  interword_embed, interword_extract,
                                  sentence_boundaries, word_gaps)
from shapestego.bitstream import bytes_to_bits, deframe, frame
from shapestego.covergen import gen_sentence_corpus, gen_word_corpus
from shapestego.errors import (MalformedGapError, NotEnoughGapsError,
                               NotEnoughSentencesError, NotEnoughWordsError)


def random_bits(rng, count):
    return "".join(rng.choice("01") for _ in range(count))


# --- feature coding ---------------------------------------------------------

def test_feature_examples():
    assert feature_embed("10", "hello world").stego == "Hello world"
    assert feature_embed("", "abc").stego == "abc"
    assert feature_embed("", "ABC").stego == "abc"  # unused words lowercased
    with pytest.raises(NotEnoughWordsError):
        feature_embed("1", "")


def test_feature_extract_examples():
    assert feature_extract("Hello world") == "10"
    assert feature_extract("") == ""
    assert feature_extract("A b C") == "101"


def test_feature_ignores_nonletter_tokens():
    result = feature_embed("11", "123 hello 456 world")
    assert result.stego == "123 Hello 456 World"
    assert feature_extract(result.stego) == "11"


def test_feature_casefold_invariant():
    cover = gen_word_corpus(17, 600)
    payload = random_bits(random.Random(17), 40)
    stego = feature_embed(payload, cover).stego
    assert stego.lower() == cover.lower()  # letters equal modulo case, spaces intact
    assert len(stego) == len(cover)


@settings(max_examples=40, deadline=None)
@given(st.binary(max_size=60), st.integers(0, 2**32))
def test_feature_roundtrip(message, seed):
    payload = frame(message)
    cover = gen_word_corpus(seed, 6 * len(payload) + 20)
    stego = feature_embed(payload, cover).stego
    assert deframe(feature_extract(stego)) == message


# --- inter-word space -------------------------------------------------------

def test_interword_examples():
    assert interword_embed("1", "a b").stego == "a  b"
    assert interword_embed("0", "a b").stego == "a b"
    with pytest.raises(NotEnoughGapsError):
        interword_embed("11", "a b")


def test_interword_extract_examples():
    assert interword_extract("a  b c") == "10"
    assert interword_extract("a b") == "0"
    with pytest.raises(MalformedGapError):
        interword_extract("a   b")


def test_interword_skips_sentence_boundaries():
    stego = interword_embed("11", "One two. Three four.").stego
    assert stego == "One  two. Three  four."
    assert interword_extract(stego) == "11"
    # the boundary after "two." is untouched and not read back


def test_intersentence_examples():
    assert intersentence_embed("1", "Hi. Yo.").stego == "Hi.  Yo."
    assert intersentence_embed("0", "Hi. Yo.").stego == "Hi. Yo."
    with pytest.raises(NotEnoughSentencesError):
        intersentence_embed("11", "Hi. Yo.")


def test_intersentence_extract():
    assert intersentence_extract("Hi.  Yo. Ok.") == "10"
    with pytest.raises(MalformedGapError):
        intersentence_extract("Hi.   Yo.")


def test_boundary_counting_matches_capacity():
    # 48 boundaries hold floor(48/8) = 6 bytes
    cover = "Word one two. " * 48
    assert sentence_boundaries(cover) == 48
    message = bytes(range(6))
    stego = intersentence_embed(bytes_to_bits(message), cover).stego
    assert intersentence_extract(stego)[:48] == bytes_to_bits(message)


def test_counting_helpers():
    text = "Big cats run. Fast dogs sleep. "
    assert eligible_words(text) == 6
    assert word_gaps(text) == 4
    assert sentence_boundaries(text) == 2
    assert eligible_words("1x a 2b c") == 2  # "1x"/"2b" start with digits


def test_whitespace_methods_only_touch_spaces():
    cover = gen_sentence_corpus(23, 6000)
    payload = random_bits(random.Random(23), 64)
    for embed in (interword_embed, intersentence_embed):
        stego = embed(payload, cover).stego
        assert [c for c in stego if not c.isspace()] == [
            c for c in cover if not c.isspace()
        ]


@settings(max_examples=30, deadline=None)
@given(st.binary(max_size=40), st.integers(0, 2**32))
def test_interword_roundtrip(message, seed):
    payload = frame(message)
    cover = gen_sentence_corpus(seed, 7 * len(payload) + 120)
    stego = interword_embed(payload, cover).stego
    assert deframe(interword_extract(stego)) == message


@settings(max_examples=10, deadline=None)
@given(st.binary(max_size=6), st.integers(0, 2**32))
def test_intersentence_roundtrip(message, seed):
    payload = frame(message)
    cover = gen_sentence_corpus(seed, 80 * (len(payload) + 2))
    stego = intersentence_embed(payload, cover).stego
    assert deframe(intersentence_extract(stego)) == message


# --- designated characters ---------------------------------------------------

def test_designated_degenerate_gap():
    pair = DesignatedPair("F", "K", gap_mean=0)
    assert designated_embed("01", pair, seed=1).stego == "FK"
    assert designated_embed("", pair, seed=1).stego == ""


def test_designated_empty_payload_is_noise_only():
    pair = DesignatedPair("F", "K", gap_mean=4.9)
    stego = designated_embed("", pair, seed=9).stego
    assert "F" not in stego and "K" not in stego
    assert designated_extract(stego, pair) == ""


def test_designated_extract_examples():
    pair = DesignatedPair("F", "K")
    assert designated_extract("XQFZZK", pair) == "01"
    assert designated_extract("", pair) == ""
    assert designated_extract("XYZQW", pair) == ""


def test_designated_noise_avoids_pair():
    pair = DesignatedPair("A", "B", gap_mean=8)
    payload = "10" * 50
    stego = designated_embed(payload, pair, seed=77).stego
    assert stego.count("A") + stego.count("B") == len(payload)
    assert designated_extract(stego, pair) == payload


def test_designated_mean_output_length():
    # oracle: each bit costs gap_mean + 1 characters on average
    pair = DesignatedPair("F", "K", gap_mean=4.9)
    lengths = [
        len(designated_embed("1" * 200, pair, seed).stego) / 200
        for seed in range(50)
    ]
    assert abs(statistics.mean(lengths) - 5.9) / 5.9 < 0.05


def test_designated_capacity_mirrors_embed():
    pair = DesignatedPair("F", "K", gap_mean=4.9)
    for seed in range(10):
        bits = designated_capacity(600, pair, seed)
        fits = designated_embed("1" * bits, pair, seed).stego
        overflow = designated_embed("1" * (bits + 1), pair, seed).stego
        assert len(fits) <= 600 < len(overflow)


def test_designated_validation():
    with pytest.raises(ValueError):
        DesignatedPair("F", "F")
    with pytest.raises(ValueError):
        DesignatedPair("f", "K")
    with pytest.raises(ValueError):
        DesignatedPair("F", "K", gap_mean=-1)
    with pytest.raises(ValueError):
        DesignatedPair("FK", "L")


@settings(max_examples=30, deadline=None)
@given(st.binary(max_size=60), st.integers(0, 2**32))
def test_designated_roundtrip(message, seed):
    payload = frame(message)
    stego = designated_embed(payload, DEFAULT_PAIR, seed).stego
    assert deframe(designated_extract(stego, DEFAULT_PAIR)) == message
