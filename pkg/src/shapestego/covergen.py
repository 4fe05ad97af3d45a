"""Seeded cover text generation: letter streams, word corpora, sentence corpora.

All generators are driven by Python's Mersenne Twister (``random.Random``)
seeded with the caller's integer, so identical arguments give byte-identical
output on every run and platform. Output never exceeds ``target_bytes``;
the letter stream hits it exactly, word and sentence corpora stop at the
last whole unit that fits.
"""

from __future__ import annotations

import random
import string

LETTERS = string.ascii_uppercase
DEFAULT_WORD_LEN_RANGE = (2, 6)
DEFAULT_WORDS_PER_SENTENCE = 14


def _check_target(target_bytes: int) -> None:
    if target_bytes <= 0:
        raise ValueError(f"target_bytes must be positive, got {target_bytes}")


def _check_word_len_range(word_len_range: tuple[int, int]) -> None:
    lo, hi = word_len_range
    if lo < 1 or lo > hi:
        raise ValueError(f"bad word length range {word_len_range}")


def gen_letter_stream(seed: int, target_bytes: int) -> str:
    """Exactly ``target_bytes`` characters drawn uniformly from A-Z."""
    _check_target(target_bytes)
    rng = random.Random(seed)
    return "".join(rng.choices(LETTERS, k=target_bytes))


def _word(rng: random.Random, lo: int, hi: int) -> str:
    return "".join(rng.choices(string.ascii_lowercase, k=rng.randint(lo, hi)))


def gen_word_corpus(
    seed: int,
    target_bytes: int,
    word_len_range: tuple[int, int] = DEFAULT_WORD_LEN_RANGE,
) -> str:
    """Space-separated lowercase pseudo-words, truncated at the last word that fits."""
    _check_target(target_bytes)
    _check_word_len_range(word_len_range)
    lo, hi = word_len_range
    rng = random.Random(seed)
    words: list[str] = []
    size = 0
    while True:
        word = _word(rng, lo, hi)
        grown = size + len(word) + (1 if words else 0)
        if grown > target_bytes:
            break
        words.append(word)
        size = grown
    return " ".join(words)


def gen_sentence_corpus(
    seed: int,
    target_bytes: int,
    words_per_sentence: int = DEFAULT_WORDS_PER_SENTENCE,
    word_len_range: tuple[int, int] = DEFAULT_WORD_LEN_RANGE,
) -> str:
    """Fixed-width pseudo-word sentences, each ``"Xxx yyy zzz. "``.

    Every sentence has exactly ``words_per_sentence`` words, a capitalised
    first word, and a ``". "`` terminator (the trailing space included);
    generation stops at the last whole sentence that fits.
    """
    _check_target(target_bytes)
    _check_word_len_range(word_len_range)
    if words_per_sentence < 1:
        raise ValueError(f"words_per_sentence must be >= 1, got {words_per_sentence}")
    lo, hi = word_len_range
    rng = random.Random(seed)
    sentences: list[str] = []
    size = 0
    while True:
        words = [_word(rng, lo, hi) for _ in range(words_per_sentence)]
        words[0] = words[0][:1].upper() + words[0][1:]
        sentence = " ".join(words) + ". "
        if size + len(sentence) > target_bytes:
            break
        sentences.append(sentence)
        size += len(sentence)
    return "".join(sentences)
