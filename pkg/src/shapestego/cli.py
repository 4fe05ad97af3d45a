"""Command-line front end: embed, extract, classify, gen-cover, capacity, bench.

Exit codes: 0 success, 2 cover too small (exhausted / not enough
words/sentences/gaps), 3 malformed or truncated frame on extraction,
4 bad arguments, 5 I/O failure. Output files are written to a temp file
and renamed so failures never leave partial output behind.
"""

from __future__ import annotations

import argparse
import io
import os
import statistics
import sys
import tempfile

from . import baselines, bench, carriers, covergen
from .alphabet import SCHEMES, group_of
from .baselines import DesignatedPair
from .bitstream import deframe, frame
from .errors import (
    CoverExhaustedError,
    EmptyLexiconGroupError,
    LexiconFormatError,
    MalformedGapError,
    NotEnoughGapsError,
    NotEnoughSentencesError,
    NotEnoughWordsError,
    RaggedLengthError,
    TruncatedFrameError,
)

EXIT_OK = 0
EXIT_COVER = 2
EXIT_FRAME = 3
EXIT_ARGS = 4
EXIT_IO = 5

_COVER_ERRORS = (CoverExhaustedError, NotEnoughWordsError, NotEnoughGapsError,
                 NotEnoughSentencesError)
_FRAME_ERRORS = (TruncatedFrameError, RaggedLengthError, MalformedGapError)

SCHEME_METHODS = bench.SCHEME_METHODS
ALL_METHODS = bench.METHODS
CARRIERS = ("sift", "direct", "sentence-substitute", "sentence-prepend")


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit 2; we reserve that
        self.print_usage(sys.stderr)
        self.exit(EXIT_ARGS, f"{self.prog}: error: {message}\n")


def _write_atomic(path: str, data: bytes) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _read_bytes(path: str) -> bytes:
    with open(path, "rb") as handle:
        return handle.read()


def _read_text(path: str) -> str:
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _parse_pair(text: str, gap_mean: float) -> DesignatedPair:
    if len(text) != 2:
        raise ValueError(f"--pair wants exactly two letters, got {text!r}")
    return DesignatedPair(text[0].upper(), text[1].upper(), gap_mean)


def _gen_cover_for(args) -> str:
    """Generate the natural cover kind for the selected method and carrier."""
    size = args.gen_cover
    if args.method in SCHEME_METHODS and args.carrier == "sift":
        return covergen.gen_letter_stream(args.seed, size)
    if args.method in SCHEME_METHODS:  # sentence carriers
        return covergen.gen_sentence_corpus(args.seed, size)
    if args.method == "feature":
        return covergen.gen_word_corpus(args.seed, size)
    return covergen.gen_sentence_corpus(args.seed, size)


def _cmd_embed(args) -> int:
    method = args.method
    carrier = args.carrier
    if method not in SCHEME_METHODS and args.carrier_given:
        raise _Usage(f"--carrier only applies to scheme methods, not {method!r}")
    needs_cover = not (method == "designated"
                       or (method in SCHEME_METHODS and carrier == "direct"))
    if needs_cover and args.cover is None and args.gen_cover is None:
        raise _Usage(f"method {method!r} needs --cover or --gen-cover")
    if not needs_cover and (args.cover is not None or args.gen_cover is not None):
        raise _Usage(f"{method}/{carrier} generates its own text; drop the cover flags")

    message = _read_bytes(args.infile)
    payload = frame(message)
    cover = ""
    if needs_cover:
        cover = _read_text(args.cover) if args.cover else _gen_cover_for(args)

    if method in SCHEME_METHODS:
        scheme = SCHEMES[method]
        if carrier == "sift":
            result = carriers.sift_embed(payload, scheme, cover)
        elif carrier == "direct":
            result = carriers.direct_embed(payload, scheme, args.seed)
        else:
            lexicon = (carriers.Lexicon.from_file(args.lexicon)
                       if args.lexicon else None)
            mode = "substitute" if carrier == "sentence-substitute" else "prepend"
            result = carriers.sentence_embed(payload, scheme, cover, lexicon,
                                             mode, args.seed)
    elif method == "feature":
        result = baselines.feature_embed(payload, cover)
    elif method == "interword":
        result = baselines.interword_embed(payload, cover)
    elif method == "intersentence":
        result = baselines.intersentence_embed(payload, cover)
    else:
        pair = _parse_pair(args.pair, args.gap_mean)
        result = baselines.designated_embed(payload, pair, args.seed)

    _write_atomic(args.outfile, result.stego.encode("utf-8"))
    print(f"embedded={result.bits_embedded} consumed={result.cover_consumed} "
          f"skipped={result.skipped}", file=sys.stderr)
    return EXIT_OK


def _cmd_extract(args) -> int:
    method = args.method
    if method not in SCHEME_METHODS and args.carrier_given:
        raise _Usage(f"--carrier only applies to scheme methods, not {method!r}")
    stego = _read_text(args.infile)
    if method in SCHEME_METHODS:
        scheme = SCHEMES[method]
        if args.carrier in ("sift", "direct"):
            bits = carriers.scheme_extract(stego, scheme)
        else:
            bits = carriers.sentence_extract(stego, scheme)
    elif method == "feature":
        bits = baselines.feature_extract(stego)
    elif method == "interword":
        bits = baselines.interword_extract(stego)
    elif method == "intersentence":
        bits = baselines.intersentence_extract(stego)
    else:
        pair = _parse_pair(args.pair, args.gap_mean)
        bits = baselines.designated_extract(stego, pair)
    message = deframe(bits)
    _write_atomic(args.outfile, message)
    return EXIT_OK


def _cmd_classify(args) -> int:
    scheme = SCHEMES[args.scheme]
    tokens = [
        f"{ch}:{group_of(ch, scheme).id}:{group_of(ch, scheme).code}"
        for ch in args.text
        if ch.isascii() and ch.isalpha()
    ]
    print(" ".join(tokens))
    return EXIT_OK


def _cmd_gen_cover(args) -> int:
    word_len_range = (args.word_len_min, args.word_len_max)
    if args.kind == "letters":
        text = covergen.gen_letter_stream(args.seed, args.bytes)
    elif args.kind == "words":
        text = covergen.gen_word_corpus(args.seed, args.bytes, word_len_range)
    else:
        text = covergen.gen_sentence_corpus(args.seed, args.bytes,
                                            args.words_per_sentence, word_len_range)
    if args.outfile:
        _write_atomic(args.outfile, text.encode("utf-8"))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_capacity(args) -> int:
    config = bench.BenchConfig(pair=_parse_pair(args.pair, args.gap_mean))
    methods = [args.method] if args.method else list(ALL_METHODS)
    for method in methods:
        values = [
            bench.capacity_of(method, args.cover_bytes, args.seed + i, config)
            for i in range(args.seeds)
        ]
        mean = statistics.mean(values)
        stdev = statistics.stdev(values) if len(values) > 1 else 0.0
        print(f"{method} mean={mean:.1f} stddev={stdev:.1f} n={len(values)} "
              f"cover={args.cover_bytes}")
    return EXIT_OK


def _int_list(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(","))


def _cmd_bench(args) -> int:
    config = bench.BenchConfig(
        message_sizes=args.sizes,
        cover_sizes=args.covers,
        seeds=args.seeds,
        methods=tuple(args.methods.split(",")) if args.methods else bench.METHODS,
        pair=_parse_pair(args.pair, args.gap_mean),
    )
    records = bench.run_suite(config)
    for record in records:
        if record.note:
            print(f"bench: {record.method}@{record.message_bytes}: {record.note}",
                  file=sys.stderr)
    if args.out == "-":
        bench.write_csv(records, sys.stdout)
    else:
        buffer = io.StringIO()
        bench.write_csv(records, buffer)
        _write_atomic(args.out, buffer.getvalue().encode("utf-8"))
    if args.svg:
        _write_atomic(args.svg,
                      bench.render_chart(records, args.metric).encode("utf-8"))
    return EXIT_OK


class _Usage(Exception):
    """Flag combination errors detected after parsing."""


def _build_parser() -> _Parser:
    parser = _Parser(prog="shapestego",
                     description="Hide and recover messages in text carriers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_seed(p):
        p.add_argument("--seed", type=int, default=carriers.DEFAULT_SEED,
                       help="deterministic seed (default %(default)s)")

    def add_pair(p):
        p.add_argument("--pair", default="FK",
                       help="designated zero/one characters (default %(default)s)")
        p.add_argument("--gap-mean", type=float, default=4.9,
                       help="mean noise letters between designated characters")

    embed = sub.add_parser("embed", help="hide a message file in a stego text")
    embed.add_argument("--method", required=True, choices=ALL_METHODS)
    embed.add_argument("--carrier", choices=CARRIERS, default=None)
    embed.add_argument("--in", dest="infile", required=True, metavar="FILE")
    embed.add_argument("--out", dest="outfile", required=True, metavar="FILE")
    embed.add_argument("--cover", metavar="FILE", help="existing cover text")
    embed.add_argument("--gen-cover", type=int, metavar="BYTES",
                       help="generate this many bytes of cover instead")
    embed.add_argument("--lexicon", metavar="FILE",
                       help="scheme:group:word lines for sentence carriers")
    add_seed(embed)
    add_pair(embed)

    extract = sub.add_parser("extract", help="recover a message from stego text")
    extract.add_argument("--method", required=True, choices=ALL_METHODS)
    extract.add_argument("--carrier", choices=CARRIERS, default=None)
    extract.add_argument("--in", dest="infile", required=True, metavar="FILE")
    extract.add_argument("--out", dest="outfile", required=True, metavar="FILE")
    add_pair(extract)

    classify = sub.add_parser("classify", help="show group and bits per letter")
    classify.add_argument("--scheme", required=True, choices=tuple(SCHEMES))
    classify.add_argument("--text", required=True)

    gen = sub.add_parser("gen-cover", help="write deterministic cover text")
    gen.add_argument("--kind", required=True, choices=("letters", "words", "sentences"))
    gen.add_argument("--bytes", type=int, required=True)
    gen.add_argument("--out", dest="outfile", metavar="FILE",
                     help="default: standard output")
    gen.add_argument("--word-len-min", type=int, default=2)
    gen.add_argument("--word-len-max", type=int, default=6)
    gen.add_argument("--words-per-sentence", type=int, default=14)
    add_seed(gen)

    capacity = sub.add_parser("capacity", help="mean capacity per method")
    capacity.add_argument("--cover-bytes", type=int, required=True)
    capacity.add_argument("--method", choices=ALL_METHODS)
    capacity.add_argument("--seeds", type=int, default=20,
                          help="number of seeds to average over")
    add_seed(capacity)
    add_pair(capacity)

    bench_p = sub.add_parser("bench", help="run the capacity suite, write CSV/SVG")
    bench_p.add_argument("--sizes", type=_int_list, default=(200, 400, 600, 800, 1000),
                         help="comma-separated message sizes")
    bench_p.add_argument("--covers", type=_int_list,
                         default=(660, 1320, 1980, 2640, 3564),
                         help="matched comma-separated cover sizes")
    bench_p.add_argument("--seeds", type=_int_list, default=(carriers.DEFAULT_SEED,),
                         help="comma-separated seed values")
    bench_p.add_argument("--methods", help="comma-separated method subset")
    bench_p.add_argument("--out", default="-", help="CSV path, - for stdout")
    bench_p.add_argument("--svg", metavar="FILE", help="also render a bar chart")
    bench_p.add_argument("--metric", choices=("bytes_hidden", "elapsed_micros"),
                         default="bytes_hidden")
    add_pair(bench_p)
    return parser


_HANDLERS = {
    "embed": _cmd_embed,
    "extract": _cmd_extract,
    "classify": _cmd_classify,
    "gen-cover": _cmd_gen_cover,
    "capacity": _cmd_capacity,
    "bench": _cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "carrier"):
        args.carrier_given = args.carrier is not None
        if args.carrier is None:
            args.carrier = "sift"
    try:
        return _HANDLERS[args.command](args)
    except _COVER_ERRORS as exc:
        print(f"shapestego: {exc}", file=sys.stderr)
        return EXIT_COVER
    except _FRAME_ERRORS as exc:
        print(f"shapestego: {exc}", file=sys.stderr)
        return EXIT_FRAME
    except (_Usage, ValueError, LexiconFormatError, EmptyLexiconGroupError) as exc:
        print(f"shapestego: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except OSError as exc:
        print(f"shapestego: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
