"""Embedders and blind extractors for the three letter-shape schemes.

Two carrier families are implemented:

* random character sequences, either *sifted* (scan an existing letter
  stream and keep only letters whose group matches the next payload
  symbol; mismatches are dropped, which is what keeps extraction blind)
  or *direct* (generate one letter per symbol from the required group);
* sentence case (the first letter of each sentence carries a symbol;
  mismatching sentences get their first word substituted, or a word
  prepended, from a per-group lexicon).

Extraction never needs the original cover: it maps letters (or sentence
initials) straight back through the scheme tables.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable

from .alphabet import SCHEMES, Scheme, bits_of, group_for_code, group_of
from .errors import (
    CoverExhaustedError,
    EmptyLexiconGroupError,
    LexiconFormatError,
    NotEnoughSentencesError,
)

DEFAULT_SEED = 42

SENTENCE_TERMINATORS = ".!?"


@dataclass
class EmbedResult:
    """Stego text plus accounting.

    ``cover_consumed`` and ``skipped`` count cover characters for the
    character-stream carriers; for the sentence carrier they count
    sentences (letterless sentences passed over are ``skipped``). Purely
    generative embedders report zero for both.
    """

    stego: str
    bits_embedded: int
    cover_consumed: int
    skipped: int


def _is_ascii_letter(ch: str) -> bool:
    return "a" <= ch <= "z" or "A" <= ch <= "Z"


def pad_payload(payload: str, scheme: Scheme) -> str:
    """Zero-pad the tail so the length is a whole number of symbols."""
    overhang = len(payload) % scheme.bits_per_symbol
    return payload if overhang == 0 else payload + "0" * (scheme.bits_per_symbol - overhang)


def _symbols(payload: str, scheme: Scheme) -> list[str]:
    if payload.strip("01"):
        raise ValueError(f"payload is not a bit string: {payload[:32]!r}...")
    padded = pad_payload(payload, scheme)
    width = scheme.bits_per_symbol
    return [padded[i : i + width] for i in range(0, len(padded), width)]


def sift_embed(payload: str, scheme: Scheme, cover: Iterable[str]) -> EmbedResult:
    """Embed by sieving the cover: keep matching letters, drop the rest.

    Each payload symbol consumes cover characters until one classifies
    into the symbol's group; that character is emitted and everything
    drawn before it is discarded (non-letters included, counted in
    ``skipped``). Raises :class:`CoverExhaustedError` with the number of
    bits already placed if the cover runs out.
    """
    symbols = _symbols(payload, scheme)
    width = scheme.bits_per_symbol
    chars = iter(cover)
    out: list[str] = []
    consumed = 0
    skipped = 0
    for done, symbol in enumerate(symbols):
        for ch in chars:
            consumed += 1
            if _is_ascii_letter(ch) and bits_of(ch, scheme) == symbol:
                out.append(ch)
                break
            skipped += 1
        else:
            raise CoverExhaustedError(bits_done=done * width)
    return EmbedResult("".join(out), len(symbols) * width, consumed, skipped)


def direct_embed(payload: str, scheme: Scheme, seed: int = DEFAULT_SEED) -> EmbedResult:
    """Generate one letter per symbol, drawn uniformly from the symbol's group."""
    symbols = _symbols(payload, scheme)
    rng = random.Random(seed)
    out = [rng.choice(group_for_code(symbol, scheme).letters) for symbol in symbols]
    return EmbedResult("".join(out), len(symbols) * scheme.bits_per_symbol, 0, 0)


def scheme_extract(stego: str, scheme: Scheme) -> str:
    """Concatenate the bit codes of every letter in the stego text."""
    return "".join(bits_of(ch, scheme) for ch in stego if _is_ascii_letter(ch))


def split_sentences(text: str) -> tuple[str, list[tuple[str, str]]]:
    """Split text into ``(lead_whitespace, [(sentence, trailing_ws), ...])``.

    A sentence ends at ``.``, ``!`` or ``?`` followed by whitespace or
    end of text; an unterminated trailing fragment counts as a final
    sentence. Joining ``lead`` with all pairs reproduces the input
    exactly.
    """
    n = len(text)
    pos = 0
    while pos < n and text[pos].isspace():
        pos += 1
    lead = text[:pos]
    segments: list[tuple[str, str]] = []
    start = pos
    while pos < n:
        ch = text[pos]
        if ch in SENTENCE_TERMINATORS and (pos + 1 == n or text[pos + 1].isspace()):
            sentence = text[start : pos + 1]
            pos += 1
            ws_start = pos
            while pos < n and text[pos].isspace():
                pos += 1
            segments.append((sentence, text[ws_start:pos]))
            start = pos
        else:
            pos += 1
    if start < n:
        segments.append((text[start:], ""))
    return lead, segments


def _first_letter(sentence: str) -> str | None:
    for ch in sentence:
        if _is_ascii_letter(ch):
            return ch
    return None


def _capitalize(word: str) -> str:
    return word[:1].upper() + word[1:]


def _lower_first_letter(word: str) -> str:
    for i, ch in enumerate(word):
        if _is_ascii_letter(ch):
            return word[:i] + ch.lower() + word[i + 1 :]
    return word


# ---------------------------------------------------------------------------
# Lexicon: words usable as sentence starters, grouped per scheme group.
# ---------------------------------------------------------------------------

_DEFAULT_WORDS: dict[tuple[str, str], tuple[str, ...]] = {
    ("curve", "A"): ("so", "but", "clearly", "despite", "generally", "just",
                     "overall", "perhaps", "quite", "rather", "still"),
    ("curve", "B"): ("this", "also", "even", "however", "indeed", "maybe",
                     "naturally", "then", "well"),
    ("vertical", "A"): ("also", "clearly", "generally", "however", "maybe",
                        "now", "often", "so", "usually", "very", "well"),
    ("vertical", "B"): ("but", "despite", "even", "first", "indeed", "just",
                        "kindly", "likewise", "perhaps", "rather", "this"),
    ("quadruple", "A"): ("so", "clearly", "despite", "generally", "often",
                         "quite", "usually"),
    ("quadruple", "B"): ("also", "but", "even", "first", "however", "perhaps",
                         "rather"),
    ("quadruple", "C"): ("this", "indeed", "just", "kindly", "likewise",
                         "truly", "yet"),
    ("quadruple", "D"): ("maybe", "now", "very", "well", "while", "nearly"),
}


@dataclass(frozen=True)
class Lexicon:
    """Per-group word lists used to rewrite sentence starts.

    Keys are ``(scheme_name, group_id)``. Every word's first letter must
    classify into the group it is listed under; construction validates
    this.
    """

    entries: dict[tuple[str, str], tuple[str, ...]]

    def __post_init__(self):
        for (scheme_name, group_id), words in self.entries.items():
            scheme = SCHEMES.get(scheme_name)
            if scheme is None:
                raise LexiconFormatError(f"unknown scheme {scheme_name!r}")
            if group_id not in {g.id for g in scheme.groups}:
                raise LexiconFormatError(f"unknown group {scheme_name}:{group_id}")
            for word in words:
                first = _first_letter(word)
                if first is None or group_of(first, scheme).id != group_id:
                    raise LexiconFormatError(
                        f"word {word!r} does not start in group {scheme_name}:{group_id}"
                    )

    def words_for(self, scheme: Scheme, group_id: str) -> tuple[str, ...]:
        words = self.entries.get((scheme.name, group_id), ())
        if not words:
            raise EmptyLexiconGroupError(f"no lexicon words for {scheme.name}:{group_id}")
        return words

    @classmethod
    def from_text(cls, text: str) -> "Lexicon":
        """Parse ``<scheme>:<group-id>:<word>`` lines; ``#`` starts a comment."""
        entries: dict[tuple[str, str], list[str]] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split(":")
            if len(parts) != 3 or not all(parts):
                raise LexiconFormatError(f"line {lineno}: expected scheme:group:word")
            scheme_name, group_id, word = parts
            entries.setdefault((scheme_name, group_id), []).append(word)
        return cls({key: tuple(words) for key, words in entries.items()})

    @classmethod
    def from_file(cls, path) -> "Lexicon":
        with open(path, encoding="utf-8") as handle:
            return cls.from_text(handle.read())


DEFAULT_LEXICON = Lexicon(_DEFAULT_WORDS)

_FIRST_WORD = re.compile(r"(\S+)(.*)", re.S)


def sentence_embed(
    payload: str,
    scheme: Scheme,
    sentences: str,
    lexicon: Lexicon | None = None,
    mode: str = "substitute",
    seed: int = DEFAULT_SEED,
) -> EmbedResult:
    """Carry one symbol per sentence via the sentence's first letter.

    Sentences whose first letter already classifies into the required
    group are kept verbatim. Otherwise ``substitute`` mode replaces the
    first word with the group's first lexicon word, and ``prepend`` mode
    inserts a seeded-random lexicon word in front (lowercasing the first
    letter of the old first word). Sentences beyond the payload pass
    through unchanged.
    """
    if mode not in ("substitute", "prepend"):
        raise ValueError(f"mode must be 'substitute' or 'prepend', got {mode!r}")
    lexicon = DEFAULT_LEXICON if lexicon is None else lexicon
    symbols = _symbols(payload, scheme)
    lead, segments = split_sentences(sentences)
    carrier_indexes = [i for i, (text, _) in enumerate(segments) if _first_letter(text)]
    if len(carrier_indexes) < len(symbols):
        raise NotEnoughSentencesError(
            f"payload needs {len(symbols)} sentences, cover has {len(carrier_indexes)}"
        )
    rng = random.Random(seed)
    rewritten = [text for text, _ in segments]
    for symbol, index in zip(symbols, carrier_indexes):
        text = rewritten[index]
        if bits_of(_first_letter(text), scheme) == symbol:
            continue
        words = lexicon.words_for(scheme, group_for_code(symbol, scheme).id)
        match = _FIRST_WORD.match(text)
        first, rest = match.group(1), match.group(2)
        if mode == "substitute":
            rewritten[index] = _capitalize(words[0]) + rest
        else:
            rewritten[index] = (
                _capitalize(rng.choice(words)) + " " + _lower_first_letter(first) + rest
            )
    stego = lead + "".join(
        new + sep for new, (_, sep) in zip(rewritten, segments)
    )
    span = carrier_indexes[len(symbols) - 1] + 1 if symbols else 0
    return EmbedResult(
        stego,
        len(symbols) * scheme.bits_per_symbol,
        cover_consumed=span,
        skipped=span - len(symbols),
    )


def sentence_extract(stego: str, scheme: Scheme) -> str:
    """Map each sentence's first letter through the scheme table."""
    _, segments = split_sentences(stego)
    bits = []
    for text, _ in segments:
        first = _first_letter(text)
        if first is not None:
            bits.append(bits_of(first, scheme))
    return "".join(bits)
