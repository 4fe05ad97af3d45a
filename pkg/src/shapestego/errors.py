"""Exception types shared across the toolkit."""


class ShapestegoError(Exception):
    """Base class for all toolkit errors."""


class NonLetterError(ShapestegoError):
    """A character outside A-Z/a-z was given where a letter is required."""


class UnknownCodeError(ShapestegoError):
    """A bit code that no group of the scheme carries."""


class RaggedLengthError(ShapestegoError):
    """A bit string whose length is not a multiple of 8."""


class MessageTooLongError(ShapestegoError):
    """Message exceeds the 65535-byte frame limit."""


class TruncatedFrameError(ShapestegoError):
    """Fewer bits available than the frame header declares."""


class CoverExhaustedError(ShapestegoError):
    """The cover ran out mid-payload.

    ``bits_done`` reports how many payload bits were placed before the
    cover ended.
    """

    def __init__(self, bits_done: int):
        super().__init__(f"cover exhausted after embedding {bits_done} bits")
        self.bits_done = bits_done


class NotEnoughWordsError(ShapestegoError):
    """Cover has fewer carrier words than payload bits."""


class NotEnoughGapsError(ShapestegoError):
    """Cover has fewer intra-sentence word gaps than payload bits."""


class NotEnoughSentencesError(ShapestegoError):
    """Cover has fewer sentences (or sentence boundaries) than needed."""


class EmptyLexiconGroupError(ShapestegoError):
    """The lexicon has no word for a required scheme group."""


class LexiconFormatError(ShapestegoError):
    """A lexicon file line is malformed or misclassifies its word."""


class MalformedGapError(ShapestegoError):
    """A whitespace gap in stego text is not one or two spaces."""


class EmptyInputError(ShapestegoError):
    """An operation that needs at least one record received none."""
