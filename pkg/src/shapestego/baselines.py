"""The four comparison methods: word-case coding, open-space widths, and
designated-character random sequences.

The whitespace methods distinguish two kinds of space runs: a *boundary*
follows a sentence terminator (``.`` ``!`` ``?``) and belongs to the
inter-sentence method; a *gap* sits between two words inside a sentence
and belongs to the inter-word method. Each embedder rewrites only its
own runs, so letter content is never touched.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .carriers import DEFAULT_SEED, EmbedResult, SENTENCE_TERMINATORS, _is_ascii_letter
from .covergen import LETTERS
from .errors import (
    MalformedGapError,
    NotEnoughGapsError,
    NotEnoughSentencesError,
    NotEnoughWordsError,
)

_WS_SPLIT = re.compile(r"(\s+)")


def _proper(word: str) -> str:
    return word[:1].upper() + word[1:].lower()


def _parts(text: str) -> list[str]:
    """Split into alternating token/whitespace chunks, preserving everything."""
    return _WS_SPLIT.split(text)


def _is_carrier_word(part: str) -> bool:
    return bool(part) and _is_ascii_letter(part[0])


def feature_embed(payload: str, word_cover: str) -> EmbedResult:
    """Word i carries bit i: proper case for 1, all-lowercase for 0.

    Tokens that do not start with a letter pass through unchanged and
    carry nothing; carrier words past the payload are lowercased.
    ``cover_consumed`` counts carrier words used.
    """
    parts = _parts(word_cover)
    carriers = [i for i, part in enumerate(parts) if _is_carrier_word(part)]
    if len(payload) > len(carriers):
        raise NotEnoughWordsError(
            f"payload needs {len(payload)} words, cover has {len(carriers)}"
        )
    for bit, index in zip(payload, carriers):
        parts[index] = _proper(parts[index]) if bit == "1" else parts[index].lower()
    for index in carriers[len(payload) :]:
        parts[index] = parts[index].lower()
    return EmbedResult("".join(parts), len(payload), len(payload), 0)


def feature_extract(stego: str) -> str:
    """One bit per letter-initial word: 1 if its first letter is uppercase."""
    return "".join(
        "1" if part[0].isupper() else "0"
        for part in _parts(stego)
        if _is_carrier_word(part)
    )


def eligible_words(text: str) -> int:
    """How many words can carry a feature-coding bit."""
    return sum(1 for part in _parts(text) if _is_carrier_word(part))


def _runs(text: str) -> list[tuple[str, int]]:
    """Classify each whitespace run as ``gap``/``boundary``/``other``.

    Returns ``(kind, part_index)`` pairs over the ``_parts`` split. A run
    after a terminator-ending token is a boundary (trailing runs count);
    a run between two tokens is a gap; leading runs and trailing runs
    after a plain word are neither.
    """
    parts = _parts(text)
    runs = []
    for i in range(1, len(parts), 2):
        prev_token = parts[i - 1]
        if not prev_token:
            kind = "other"
        elif prev_token[-1] in SENTENCE_TERMINATORS:
            kind = "boundary"
        elif i + 1 < len(parts) and parts[i + 1]:
            kind = "gap"
        else:
            kind = "other"
        runs.append((kind, i))
    return runs


def word_gaps(text: str) -> int:
    """How many intra-sentence word gaps the text offers."""
    return sum(1 for kind, _ in _runs(text) if kind == "gap")


def sentence_boundaries(text: str) -> int:
    """How many terminator-plus-space boundaries the text offers."""
    return sum(1 for kind, _ in _runs(text) if kind == "boundary")


def _space_embed(payload: str, cover: str, kind: str) -> EmbedResult:
    parts = _parts(cover)
    slots = [i for k, i in _runs(cover) if k == kind]
    if len(payload) > len(slots):
        if kind == "gap":
            raise NotEnoughGapsError(
                f"payload needs {len(payload)} gaps, cover has {len(slots)}"
            )
        raise NotEnoughSentencesError(
            f"payload needs {len(payload)} boundaries, cover has {len(slots)}"
        )
    for bit, index in zip(payload, slots):
        parts[index] = "  " if bit == "1" else " "
    for index in slots[len(payload) :]:
        parts[index] = " "
    return EmbedResult("".join(parts), len(payload), len(payload), 0)


def _space_extract(stego: str, kind: str) -> str:
    parts = _parts(stego)
    bits = []
    for k, index in _runs(stego):
        if k != kind:
            continue
        run = parts[index]
        if run == " ":
            bits.append("0")
        elif run == "  ":
            bits.append("1")
        else:
            raise MalformedGapError(f"gap {run!r} is not one or two spaces")
    return "".join(bits)


def interword_embed(payload: str, cover: str) -> EmbedResult:
    """Gap i carries bit i: one space for 0, two for 1; unused gaps become one."""
    return _space_embed(payload, cover, "gap")


def interword_extract(stego: str) -> str:
    return _space_extract(stego, "gap")


def intersentence_embed(payload: str, cover: str) -> EmbedResult:
    """Boundary i carries bit i: one space after the terminator for 0, two for 1."""
    return _space_embed(payload, cover, "boundary")


def intersentence_extract(stego: str) -> str:
    return _space_extract(stego, "boundary")


@dataclass(frozen=True)
class DesignatedPair:
    """Two letters that stand for the 0 and 1 bits, plus the noise density."""

    zero_char: str
    one_char: str
    gap_mean: float = 4.9

    def __post_init__(self):
        for ch in (self.zero_char, self.one_char):
            if len(ch) != 1 or not _is_ascii_letter(ch) or ch != ch.upper():
                raise ValueError(f"designated character must be one of A-Z, got {ch!r}")
        if self.zero_char == self.one_char:
            raise ValueError("designated characters must differ")
        if self.gap_mean < 0:
            raise ValueError(f"gap_mean must be >= 0, got {self.gap_mean}")

    @property
    def noise_alphabet(self) -> str:
        return "".join(c for c in LETTERS if c not in (self.zero_char, self.one_char))


DEFAULT_PAIR = DesignatedPair("F", "K")


def _gap_length(rng: random.Random, mean: float) -> int:
    # geometric on {0,1,2,...} with the given mean
    if mean <= 0:
        return 0
    stop = 1.0 / (1.0 + mean)
    count = 0
    while rng.random() >= stop:
        count += 1
    return count


def _noise(rng: random.Random, alphabet: str, count: int) -> str:
    return "".join(rng.choice(alphabet) for _ in range(count))


def designated_embed(
    payload: str, pair: DesignatedPair = DEFAULT_PAIR, seed: int = DEFAULT_SEED
) -> EmbedResult:
    """Emit noise-letter gaps with one designated character per bit.

    Gap lengths are seeded-geometric with mean ``pair.gap_mean``; a final
    noise gap closes the text so the last payload character is not the
    last character of the stego.
    """
    rng = random.Random(seed)
    alphabet = pair.noise_alphabet
    chunks = []
    for bit in payload:
        chunks.append(_noise(rng, alphabet, _gap_length(rng, pair.gap_mean)))
        chunks.append(pair.one_char if bit == "1" else pair.zero_char)
    chunks.append(_noise(rng, alphabet, _gap_length(rng, pair.gap_mean)))
    return EmbedResult("".join(chunks), len(payload), 0, 0)


def designated_extract(stego: str, pair: DesignatedPair = DEFAULT_PAIR) -> str:
    """Each designated character maps back to its bit; noise is ignored."""
    bits = []
    for ch in stego:
        if ch == pair.zero_char:
            bits.append("0")
        elif ch == pair.one_char:
            bits.append("1")
    return "".join(bits)


def designated_capacity(budget_chars: int, pair: DesignatedPair, seed: int) -> int:
    """Bits a character budget can hold; mirrors ``designated_embed`` draws.

    ``designated_embed`` of the returned bit count produces a stego of at
    most ``budget_chars`` characters under the same seed, and one more
    bit would overflow it.
    """
    rng = random.Random(seed)
    alphabet = pair.noise_alphabet
    gap = _gap_length(rng, pair.gap_mean)
    _noise(rng, alphabet, gap)
    total = gap  # length with zero bits: the closing gap alone
    bits = 0
    while True:
        gap = _gap_length(rng, pair.gap_mean)
        _noise(rng, alphabet, gap)
        grown = total + 1 + gap
        if grown > budget_chars:
            return bits
        bits += 1
        total = grown
