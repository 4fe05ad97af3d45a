"""Capacity benchmark across all seven methods, with CSV and SVG reports.

Capacity is measured the raw way: feed an unbounded random bit stream
into the method's natural cover until the carrier is exhausted and count
whole bytes, with no frame header included. Wall-clock embed time is
recorded per row for regression tracking only; it is the one
non-deterministic column.
"""

from __future__ import annotations

import csv
import io
import random
import time
from dataclasses import dataclass, field

from . import baselines, carriers, covergen
from .alphabet import SCHEMES
from .baselines import DEFAULT_PAIR, DesignatedPair
from .bitstream import bytes_to_bits
from .errors import CoverExhaustedError, EmptyInputError

SCHEME_METHODS = ("curve", "vertical", "quadruple")
BASELINE_METHODS = ("feature", "interword", "intersentence", "designated")
METHODS = SCHEME_METHODS + BASELINE_METHODS

CSV_HEADER = ["method", "scheme", "message_bytes", "cover_bytes", "bytes_hidden",
              "elapsed_micros", "seed"]


@dataclass
class BenchRecord:
    method: str
    scheme: str
    message_bytes: int
    cover_bytes: int
    bytes_hidden: int
    elapsed_micros: int
    seed: int
    note: str = ""


@dataclass
class BenchConfig:
    message_sizes: tuple[int, ...] = (200, 400, 600, 800, 1000)
    cover_sizes: tuple[int, ...] = (660, 1320, 1980, 2640, 3564)
    seeds: tuple[int, ...] = (carriers.DEFAULT_SEED,)
    methods: tuple[str, ...] = METHODS
    word_len_range: tuple[int, int] = covergen.DEFAULT_WORD_LEN_RANGE
    words_per_sentence: int = covergen.DEFAULT_WORDS_PER_SENTENCE
    pair: DesignatedPair = field(default_factory=lambda: DEFAULT_PAIR)

    def __post_init__(self):
        if len(self.message_sizes) != len(self.cover_sizes):
            raise ValueError("message_sizes and cover_sizes must pair up")
        unknown = set(self.methods) - set(METHODS)
        if unknown:
            raise ValueError(f"unknown methods: {sorted(unknown)}")


def _random_bits(tag: str, count: int) -> str:
    rng = random.Random(tag)
    return f"{rng.getrandbits(count):0{count}b}" if count else ""


def _natural_cover(method: str, cover_bytes: int, seed: int, config: BenchConfig) -> str:
    if method in SCHEME_METHODS:
        return covergen.gen_letter_stream(seed, cover_bytes)
    if method == "feature":
        return covergen.gen_word_corpus(seed, cover_bytes, config.word_len_range)
    if method in ("interword", "intersentence"):
        return covergen.gen_sentence_corpus(
            seed, cover_bytes, config.words_per_sentence, config.word_len_range
        )
    return ""  # designated generates its own text


def capacity_of(
    method: str, cover_bytes: int, seed: int, config: BenchConfig | None = None
) -> int:
    """Whole bytes the method can hide in a cover of ``cover_bytes``."""
    if cover_bytes <= 0:
        raise ValueError(f"cover_bytes must be positive, got {cover_bytes}")
    config = config or BenchConfig()
    if method in SCHEME_METHODS:
        scheme = SCHEMES[method]
        cover = covergen.gen_letter_stream(seed, cover_bytes)
        # one more symbol than the cover could ever carry, so it must exhaust
        probe = _random_bits(f"{seed}/capacity/{method}/{cover_bytes}",
                             scheme.bits_per_symbol * (cover_bytes + 1))
        try:
            carriers.sift_embed(probe, scheme, cover)
        except CoverExhaustedError as exc:
            return exc.bits_done // 8
        raise AssertionError("capacity probe cannot fit")
    cover = _natural_cover(method, cover_bytes, seed, config)
    if method == "feature":
        return baselines.eligible_words(cover) // 8
    if method == "interword":
        return baselines.word_gaps(cover) // 8
    if method == "intersentence":
        return baselines.sentence_boundaries(cover) // 8
    if method == "designated":
        return baselines.designated_capacity(cover_bytes, config.pair, seed) // 8
    raise ValueError(f"unknown method {method!r}")


def _timed_embed(method: str, payload: str, cover: str, seed: int,
                 config: BenchConfig) -> int:
    start = time.perf_counter()
    if method in SCHEME_METHODS:
        try:
            carriers.sift_embed(payload, SCHEMES[method], cover)
        except CoverExhaustedError:
            pass  # capacity edge: the probe stream fit a byte this one misses
    elif method == "feature":
        baselines.feature_embed(payload, cover)
    elif method == "interword":
        baselines.interword_embed(payload, cover)
    elif method == "intersentence":
        baselines.intersentence_embed(payload, cover)
    else:
        baselines.designated_embed(payload, config.pair, seed)
    return int((time.perf_counter() - start) * 1e6)


def run_suite(config: BenchConfig | None = None) -> list[BenchRecord]:
    """One record per (size pair, method, seed); failures annotate, never abort."""
    config = config or BenchConfig()
    records = []
    for message_bytes, cover_bytes in zip(config.message_sizes, config.cover_sizes):
        for method in config.methods:
            for seed in config.seeds:
                scheme = method if method in SCHEME_METHODS else ""
                record = BenchRecord(method, scheme, message_bytes, cover_bytes,
                                     0, 0, seed)
                try:
                    capacity = capacity_of(method, cover_bytes, seed, config)
                    hidden = min(message_bytes, capacity)
                    message = random.Random(
                        f"{seed}/message/{message_bytes}"
                    ).randbytes(hidden)
                    cover = _natural_cover(method, cover_bytes, seed, config)
                    record.elapsed_micros = _timed_embed(
                        method, bytes_to_bits(message), cover, seed, config
                    )
                    record.bytes_hidden = hidden
                except Exception as exc:  # noqa: BLE001 - annotate and move on
                    record.note = f"{type(exc).__name__}: {exc}"
                records.append(record)
    return records


def write_csv(records: list[BenchRecord], destination) -> None:
    """Write the pinned-header CSV to a path or text stream."""
    if hasattr(destination, "write"):
        _write_csv_stream(records, destination)
    else:
        with open(destination, "w", encoding="utf-8", newline="") as handle:
            _write_csv_stream(records, handle)


def _write_csv_stream(records: list[BenchRecord], stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow([r.method, r.scheme, r.message_bytes, r.cover_bytes,
                         r.bytes_hidden, r.elapsed_micros, r.seed])


def read_csv(source) -> list[BenchRecord]:
    """Parse a file produced by :func:`write_csv` (notes are not round-tripped)."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, encoding="utf-8") as handle:
            text = handle.read()
    reader = csv.DictReader(io.StringIO(text))
    return [
        BenchRecord(
            row["method"], row["scheme"], int(row["message_bytes"]),
            int(row["cover_bytes"]), int(row["bytes_hidden"]),
            int(row["elapsed_micros"]), int(row["seed"]),
        )
        for row in reader
    ]


# ---------------------------------------------------------------------------
# SVG bar chart
# ---------------------------------------------------------------------------

_COLORS = {
    "curve": "#4a90d9",
    "vertical": "#7bb661",
    "quadruple": "#9467bd",
    "feature": "#d98f4a",
    "interword": "#c94f4f",
    "intersentence": "#8c8c8c",
    "designated": "#3aa6a6",
}
_METRIC_LABELS = {"bytes_hidden": "bytes hidden", "elapsed_micros": "elapsed (us)"}


def render_chart(records: list[BenchRecord], metric: str = "bytes_hidden",
                 destination=None) -> str:
    """Grouped bar chart: one group per message size, one bar per method.

    Values are averaged over seeds. The SVG is a standalone 1.1 document
    and is byte-identical for identical records.
    """
    if not records:
        raise EmptyInputError("no records to chart")
    if metric not in _METRIC_LABELS:
        raise ValueError(f"metric must be one of {sorted(_METRIC_LABELS)}")

    by_cell: dict[tuple[str, int], list[int]] = {}
    for r in records:
        by_cell.setdefault((r.method, r.message_bytes), []).append(getattr(r, metric))
    means = {cell: sum(vals) / len(vals) for cell, vals in by_cell.items()}
    sizes = sorted({size for _, size in means})
    present = {method for method, _ in means}
    methods = [m for m in METHODS if m in present] + sorted(present - set(METHODS))

    margin_left, margin_right, margin_top, margin_bottom = 70, 20, 50, 55
    chart_w, chart_h = max(440, 110 * len(sizes)), 260
    width = margin_left + chart_w + margin_right
    height = margin_top + chart_h + margin_bottom
    top = max(means.values()) * 1.1 or 1.0

    group_w = chart_w / len(sizes)
    bar_w = group_w * 0.8 / max(len(methods), 1)

    svg = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif">',
        f'  <rect width="{width}" height="{height}" fill="#ffffff"/>',
        f'  <text x="{width / 2:.1f}" y="20" text-anchor="middle" font-size="14" '
        f'fill="#333">{_METRIC_LABELS[metric]} by method and message size</text>',
    ]
    for tick in range(6):
        y = margin_top + chart_h - tick / 5 * chart_h
        value = tick / 5 * top
        svg.append(f'  <line x1="{margin_left}" y1="{y:.1f}" '
                   f'x2="{margin_left + chart_w}" y2="{y:.1f}" '
                   f'stroke="#e0e0e0" stroke-width="1"/>')
        svg.append(f'  <text x="{margin_left - 6}" y="{y + 4:.1f}" text-anchor="end" '
                   f'font-size="10" fill="#666">{value:.0f}</text>')
    for gi, size in enumerate(sizes):
        group_x = margin_left + gi * group_w + group_w * 0.1
        for mi, method in enumerate(methods):
            if (method, size) not in means:
                continue
            value = means[(method, size)]
            bar_h = value / top * chart_h
            x = group_x + mi * bar_w
            y = margin_top + chart_h - bar_h
            color = _COLORS.get(method, "#555555")
            svg.append(f'  <rect id="bar-{method}-{size}" x="{x:.1f}" y="{y:.1f}" '
                       f'width="{bar_w:.1f}" height="{bar_h:.1f}" fill="{color}"/>')
            svg.append(f'  <text x="{x + bar_w / 2:.1f}" y="{y - 3:.1f}" '
                       f'text-anchor="middle" font-size="8" '
                       f'fill="#444">{value:.1f}</text>')
        svg.append(f'  <text x="{group_x + group_w * 0.4:.1f}" '
                   f'y="{margin_top + chart_h + 16}" text-anchor="middle" '
                   f'font-size="11" fill="#333">{size}</text>')
    legend_x = margin_left
    legend_y = height - 22
    for mi, method in enumerate(methods):
        x = legend_x + mi * 86
        color = _COLORS.get(method, "#555555")
        svg.append(f'  <rect x="{x}" y="{legend_y}" width="9" height="9" '
                   f'fill="{color}"/>')
        svg.append(f'  <text x="{x + 12}" y="{legend_y + 8}" font-size="9" '
                   f'fill="#333">{method}</text>')
    svg.append(f'  <text x="{margin_left + chart_w / 2:.1f}" '
               f'y="{margin_top + chart_h + 32}" text-anchor="middle" '
               f'font-size="11" fill="#666">message size (bytes)</text>')
    svg.append(f'  <line x1="{margin_left}" y1="{margin_top}" x2="{margin_left}" '
               f'y2="{margin_top + chart_h}" stroke="#333" stroke-width="1"/>')
    svg.append(f'  <line x1="{margin_left}" y1="{margin_top + chart_h}" '
               f'x2="{margin_left + chart_w}" y2="{margin_top + chart_h}" '
               f'stroke="#333" stroke-width="1"/>')
    svg.append("</svg>")
    text = "\n".join(svg) + "\n"
    if destination is not None:
        with open(destination, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    return text
