"""shapestego: hide messages in letter shapes, word case, and whitespace.

The toolkit classifies English letters by visual features (curves,
vertical strokes, midbars, diagonals) and uses those classes to carry
bits through innocuous-looking text, alongside four classic baseline
methods and a capacity benchmark harness.
"""

from .alphabet import (CURVE, QUADRUPLE, SCHEMES, VERTICAL_LINE, Group, Scheme,
                       bits_of, group_of, letters_for)
from .baselines import (DEFAULT_PAIR, DesignatedPair, designated_embed,
                        designated_extract, feature_embed, feature_extract,
                        intersentence_embed, intersentence_extract,
                        interword_embed, interword_extract)
from .bench import BenchConfig, BenchRecord, capacity_of, render_chart, run_suite, write_csv
from .bitstream import bits_to_bytes, bytes_to_bits, deframe, frame
from .carriers import (DEFAULT_LEXICON, DEFAULT_SEED, EmbedResult, Lexicon,
                       direct_embed, scheme_extract, sentence_embed,
                       sentence_extract, sift_embed, split_sentences)
from .covergen import gen_letter_stream, gen_sentence_corpus, gen_word_corpus

__version__ = "0.1.0"

__all__ = [
    "CURVE", "VERTICAL_LINE", "QUADRUPLE", "SCHEMES", "Group", "Scheme",
    "bits_of", "group_of", "letters_for",
    "bytes_to_bits", "bits_to_bytes", "frame", "deframe",
    "gen_letter_stream", "gen_word_corpus", "gen_sentence_corpus",
    "EmbedResult", "Lexicon", "DEFAULT_LEXICON", "DEFAULT_SEED",
    "sift_embed", "direct_embed", "scheme_extract",
    "sentence_embed", "sentence_extract", "split_sentences",
    "feature_embed", "feature_extract", "interword_embed", "interword_extract",
    "intersentence_embed", "intersentence_extract",
    "DesignatedPair", "DEFAULT_PAIR", "designated_embed", "designated_extract",
    "BenchConfig", "BenchRecord", "capacity_of", "run_suite", "write_csv",
    "render_chart",
]
