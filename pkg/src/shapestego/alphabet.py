"""Letter classification schemes that map A-Z onto bit codes.

Three codebooks are shipped, each partitioning the 26 uppercase letters
by a visual feature of the letterform:

* ``CURVE``         - has any curved stroke vs. straight strokes only (1 bit)
* ``VERTICAL_LINE`` - has exactly one vertical stroke vs. none/several (1 bit)
* ``QUADRUPLE``     - curved / horizontal midbar / one vertical / diagonal (2 bits)

Each scheme is a self-contained codebook: the same letter may sit in
differently-flavoured groups across schemes (e.g. J counts as curved in
``CURVE`` but as a one-vertical-stroke letter in ``QUADRUPLE``), and the
tables are used as-is. Classification is case-insensitive; lowercase
letters classify like their uppercase forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import NonLetterError, UnknownCodeError


class SchemeKind(Enum):
    CURVE = "curve"
    VERTICAL_LINE = "vertical"
    QUADRUPLE = "quadruple"


@dataclass(frozen=True)
class Group:
    """One letter group: its label, the bit code it hides, and its letters."""

    id: str
    code: str
    letters: str  # uppercase, in table order


@dataclass
class Scheme:
    """An ordered set of disjoint groups covering all 26 letters."""

    kind: SchemeKind
    groups: tuple[Group, ...]
    _by_letter: dict[str, Group] = field(init=False, repr=False)
    _by_code: dict[str, Group] = field(init=False, repr=False)

    def __post_init__(self):
        by_letter: dict[str, Group] = {}
        by_code: dict[str, Group] = {}
        width = len(self.groups[0].code)
        for group in self.groups:
            if len(group.code) != width:
                raise ValueError(f"group {group.id}: code width != {width}")
            if group.code in by_code:
                raise ValueError(f"duplicate group code {group.code}")
            by_code[group.code] = group
            for letter in group.letters:
                if letter in by_letter:
                    raise ValueError(f"letter {letter} in two groups")
                by_letter[letter] = group
        self._by_letter = by_letter
        self._by_code = by_code

    @property
    def name(self) -> str:
        return self.kind.value

    @property
    def bits_per_symbol(self) -> int:
        return len(self.groups[0].code)


CURVE = Scheme(
    SchemeKind.CURVE,
    (
        Group("A", "0", "BCDGJOPQRSU"),  # any curved stroke
        Group("B", "1", "AEFHIKLMNTVWXYZ"),  # straight strokes only
    ),
)

VERTICAL_LINE = Scheme(
    SchemeKind.VERTICAL_LINE,
    (
        Group("A", "0", "ACGHMNOQSUVWXYZ"),  # zero or several vertical strokes
        Group("B", "1", "BDEFIJKLPRT"),  # exactly one vertical stroke
    ),
)

QUADRUPLE = Scheme(
    SchemeKind.QUADRUPLE,
    (
        Group("A", "00", "CDGOQSU"),  # curved
        Group("B", "01", "ABEFHPR"),  # horizontal midbar
        Group("C", "10", "IJKLTY"),  # one vertical stroke
        Group("D", "11", "MNVWXZ"),  # diagonal stroke
    ),
)

SCHEMES: dict[str, Scheme] = {s.name: s for s in (CURVE, VERTICAL_LINE, QUADRUPLE)}


def _upper_letter(letter: str) -> str:
    if len(letter) != 1 or not ("a" <= letter <= "z" or "A" <= letter <= "Z"):
        raise NonLetterError(f"not an ASCII letter: {letter!r}")
    return letter.upper()


def group_of(letter: str, scheme: Scheme) -> Group:
    """Return the scheme group containing the (case-folded) letter."""
    return scheme._by_letter[_upper_letter(letter)]


def bits_of(letter: str, scheme: Scheme) -> str:
    """Return the bit code the letter hides under the scheme."""
    return group_of(letter, scheme).code


def letters_for(code: str, scheme: Scheme) -> frozenset[str]:
    """Return the full letter set of the group carrying ``code``."""
    group = scheme._by_code.get(code)
    if group is None:
        raise UnknownCodeError(f"no group of {scheme.name} carries code {code!r}")
    return frozenset(group.letters)


def group_for_code(code: str, scheme: Scheme) -> Group:
    group = scheme._by_code.get(code)
    if group is None:
        raise UnknownCodeError(f"no group of {scheme.name} carries code {code!r}")
    return group
