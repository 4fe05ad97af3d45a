"""Acceptance suite: one test per shipping criterion, tolerances pinned.

Each test prints a single ``criterion N ...: PASS/FAIL`` line so the
suite doubles as a checklist. Criterion 5's three-way scheme ordering is
expected to fail; see the assertion message there for the measured
numbers (the three schemes are statistical ties whose expected order is
the reverse of the required one, a direct consequence of the waiting
time oracle that criterion 3 pins).
"""

import random
import statistics
import string
import time

import pytest

from shapestego import baselines, bench, carriers, cli, covergen
from shapestego.alphabet import CURVE, QUADRUPLE, SCHEMES, VERTICAL_LINE
from shapestego.bitstream import deframe, frame

SEEDS = tuple(range(20))
TABLE_SIZES = ((200, 660), (400, 1320), (600, 1980), (800, 2640), (1000, 3564))

# waiting-time oracle: E[cover chars per embedded bit] from the group sizes
CHARS_PER_BIT = {
    "curve": (26 / 11 + 26 / 15) / 2,
    "vertical": (26 / 15 + 26 / 11) / 2,
    "quadruple": (26 / 7 + 26 / 7 + 26 / 6 + 26 / 6) / 8,
}
TABLE8_CAPACITY = {"curve": 232, "vertical": 220, "quadruple": 205}


def report(number, label, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    suffix = f" - {detail}" if detail else ""
    print(f"criterion {number} ({label}): {status}{suffix}")


# -- criterion 1 -------------------------------------------------------------

def test_criterion_1_classification_tables():
    def check():
        expected_sizes = {
            "curve": [11, 15],
            "vertical": [15, 11],
            "quadruple": [7, 7, 6, 6],
        }
        for name, scheme in SCHEMES.items():
            sets = [set(group.letters) for group in scheme.groups]
            assert [len(s) for s in sets] == expected_sizes[name]
            union = set().union(*sets)
            assert union == set(string.ascii_uppercase)
            assert sum(len(s) for s in sets) == 26

    timings = []
    for _ in range(3):
        t0 = time.perf_counter()
        check()
        timings.append(time.perf_counter() - t0)
    best = min(timings)
    ok = best < 0.001
    report(1, "classification tables", ok, f"enumeration in {best * 1e6:.0f}us")
    assert ok


# -- criterion 2 -------------------------------------------------------------

def _scheme_roundtrip(scheme, carrier, message, seed):
    payload = frame(message)
    if carrier == "sift":
        cover = covergen.gen_letter_stream(seed, int(len(payload) * 2.6) + 60)
        stego = carriers.sift_embed(payload, scheme, cover).stego
        return deframe(carriers.scheme_extract(stego, scheme))
    if carrier == "direct":
        stego = carriers.direct_embed(payload, scheme, seed).stego
        return deframe(carriers.scheme_extract(stego, scheme))
    symbols = -(-len(payload) // scheme.bits_per_symbol)
    cover = covergen.gen_sentence_corpus(seed, 80 * (symbols + 4))
    mode = "substitute" if carrier == "sentence-substitute" else "prepend"
    stego = carriers.sentence_embed(payload, scheme, cover, mode=mode, seed=seed).stego
    return deframe(carriers.sentence_extract(stego, scheme))


def _baseline_roundtrip(method, message, seed):
    payload = frame(message)
    if method == "feature":
        cover = covergen.gen_word_corpus(seed, 6 * (len(payload) + 20))
        stego = baselines.feature_embed(payload, cover).stego
        return deframe(baselines.feature_extract(stego))
    if method == "interword":
        cover = covergen.gen_sentence_corpus(seed, 7 * (len(payload) + 60))
        stego = baselines.interword_embed(payload, cover).stego
        return deframe(baselines.interword_extract(stego))
    if method == "intersentence":
        cover = covergen.gen_sentence_corpus(seed, 80 * (len(payload) + 4))
        stego = baselines.intersentence_embed(payload, cover).stego
        return deframe(baselines.intersentence_extract(stego))
    stego = baselines.designated_embed(payload, baselines.DEFAULT_PAIR, seed).stego
    return deframe(baselines.designated_extract(stego, baselines.DEFAULT_PAIR))


def test_criterion_2_roundtrip_suite():
    start = time.perf_counter()
    rng = random.Random("acceptance/roundtrips")
    combos = []
    for scheme_name in SCHEMES:
        combos.append((f"{scheme_name}+sift", 100, 1000))
        combos.append((f"{scheme_name}+direct", 100, 1000))
        combos.append((f"{scheme_name}+sentence-substitute", 24, 200))
        combos.append((f"{scheme_name}+sentence-prepend", 24, 200))
    combos += [("feature", 100, 1000), ("interword", 100, 1000),
               ("designated", 100, 1000), ("intersentence", 24, 200)]

    total = 0
    for combo, trials, random_cap in combos:
        lengths = [0, 1, 1000] + [rng.randint(0, random_cap) for _ in range(trials - 3)]
        for i, size in enumerate(lengths):
            message = rng.randbytes(size)
            if "+" in combo:
                scheme_name, carrier = combo.split("+")
                back = _scheme_roundtrip(SCHEMES[scheme_name], carrier, message, i)
            else:
                back = _baseline_roundtrip(combo, message, i)
            assert back == message, f"{combo} corrupted a {size}-byte message"
            total += 1

    elapsed = time.perf_counter() - start
    ok = total >= 1000 and elapsed < 30
    report(2, "round-trip property suite", ok,
           f"{total} framed messages over {len(combos)} combos in {elapsed:.1f}s")
    assert total >= 1000
    assert elapsed < 30


# -- criterion 3 -------------------------------------------------------------

def test_criterion_3_sift_capacity_oracle():
    start = time.perf_counter()
    details = []
    ok = True
    for method, rate in CHARS_PER_BIT.items():
        values = [bench.capacity_of(method, 3564, seed) for seed in SEEDS]
        mean = statistics.mean(values)
        oracle = 3564 / (8 * rate)
        oracle_ok = abs(mean - oracle) / oracle <= 0.10
        paper_ok = abs(TABLE8_CAPACITY[method] - mean) / mean <= 0.15
        ok = ok and oracle_ok and paper_ok
        details.append(f"{method}: mean={mean:.1f} oracle={oracle:.1f} "
                       f"ref={TABLE8_CAPACITY[method]}")
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 5
    report(3, "sift capacity vs oracle", ok,
           "; ".join(details) + f" ({elapsed:.1f}s)")
    assert ok


# -- criterion 4 -------------------------------------------------------------

def test_criterion_4_baseline_capacities():
    start = time.perf_counter()
    feature = statistics.mean(
        bench.capacity_of("feature", 3564, seed) for seed in SEEDS
    )
    intersentence = [bench.capacity_of("intersentence", 3564, s) for s in SEEDS]
    interword = statistics.mean(
        bench.capacity_of("interword", 3564, seed) for seed in SEEDS
    )
    designated = statistics.mean(
        bench.capacity_of("designated", 3564, seed) for seed in SEEDS
    )
    elapsed = time.perf_counter() - start
    checks = {
        "feature": abs(feature - 90) / 90 <= 0.05,
        "intersentence": all(4 <= v <= 7 for v in intersentence),
        "interword": abs(interword - 79) / 79 <= 0.10,
        "designated": abs(designated - 76) / 76 <= 0.15,
    }
    ok = all(checks.values()) and elapsed < 5
    report(4, "baseline capacities", ok,
           f"feature={feature:.1f}/90 intersentence={statistics.mean(intersentence):.1f}/6 "
           f"interword={interword:.1f}/79 designated={designated:.1f}/76 "
           f"({elapsed:.1f}s)")
    assert ok, checks
    assert elapsed < 5


# -- criterion 5 -------------------------------------------------------------

def test_criterion_5_capacity_ordering():
    caps = {
        (method, cover): [bench.capacity_of(method, cover, seed) for seed in SEEDS]
        for _, cover in TABLE_SIZES
        for method in bench.METHODS
    }

    beats_feature = all(
        caps[(scheme, cover)][i] > caps[("feature", cover)][i]
        for _, cover in TABLE_SIZES
        for scheme in ("curve", "vertical", "quadruple")
        for i in range(len(SEEDS))
    )
    intersentence_min = all(
        caps[("intersentence", cover)][i] < caps[(other, cover)][i]
        for _, cover in TABLE_SIZES
        for other in bench.METHODS
        if other != "intersentence"
        for i in range(len(SEEDS))
    )

    majority = len(SEEDS) // 2 + 1
    votes = {}
    for upper, lower in (("curve", "vertical"), ("vertical", "quadruple")):
        votes[(upper, lower)] = {
            cover: sum(
                caps[(upper, cover)][i] >= caps[(lower, cover)][i]
                for i in range(len(SEEDS))
            )
            for _, cover in TABLE_SIZES
        }
    scheme_chain = all(
        count >= majority
        for per_cover in votes.values()
        for count in per_cover.values()
    )

    ok = beats_feature and intersentence_min and scheme_chain
    report(5, "capacity ordering", ok,
           f"schemes>feature={beats_feature} intersentence-min={intersentence_min} "
           f"chain-votes={votes}")
    assert beats_feature, "a scheme failed to beat feature coding"
    assert intersentence_min, "inter-sentence was not the minimum"
    assert scheme_chain, (
        "curve >= vertical >= quadruple failed the per-seed majority vote: "
        f"{votes} (need >= {majority}/20 at every cover size). The three "
        "schemes are statistical ties; the waiting-time rates 2.0485 vs "
        "2.0119 chars/bit make quadruple's expected capacity the largest, "
        "so this ordering is not reproducible from uniform covers."
    )


# -- criterion 6 -------------------------------------------------------------

def test_criterion_6_sentence_walkthrough():
    cover = "All birds can fly. Ostrich is a bird. Ostrich can also fly."
    result = carriers.sentence_embed("110", CURVE, cover, mode="substitute")
    expected = "All birds can fly. This is a bird. Ostrich can also fly."
    decoded = carriers.sentence_extract(result.stego, CURVE)
    _, cover_segments = carriers.split_sentences(cover)
    _, stego_segments = carriers.split_sentences(result.stego)
    unchanged_1_and_3 = (stego_segments[0] == cover_segments[0]
                         and stego_segments[2] == cover_segments[2])
    ok = result.stego == expected and decoded == "110" and unchanged_1_and_3
    report(6, "sentence-case walkthrough", ok, repr(result.stego))
    assert result.stego == expected
    assert decoded == "110"
    assert unchanged_1_and_3


# -- criterion 7 -------------------------------------------------------------

def _strip_elapsed(csv_text):
    rows = [line.split(",") for line in csv_text.splitlines()]
    return [row[:5] + row[6:] for row in rows]


def test_criterion_7_determinism(tmp_path):
    (tmp_path / "msg").write_bytes(bytes(range(64)))
    stegos, csvs, svgs = [], [], []
    for run in ("one", "two"):
        stego = tmp_path / f"stego-{run}"
        code = cli.main(["embed", "--method", "curve", "--carrier", "sift",
                         "--gen-cover", "2400", "--seed", "99",
                         "--in", str(tmp_path / "msg"), "--out", str(stego)])
        assert code == 0
        stegos.append(stego.read_bytes())

        csv_path = tmp_path / f"bench-{run}.csv"
        svg_path = tmp_path / f"bench-{run}.svg"
        code = cli.main(["bench", "--sizes", "80,160", "--covers", "660,1320",
                         "--seeds", "5,6", "--out", str(csv_path),
                         "--svg", str(svg_path)])
        assert code == 0
        csvs.append(csv_path.read_text())
        svgs.append(svg_path.read_bytes())

    ok = (stegos[0] == stegos[1]
          and _strip_elapsed(csvs[0]) == _strip_elapsed(csvs[1])
          and svgs[0] == svgs[1])
    report(7, "determinism", ok,
           "stego, CSV (minus timing), and SVG byte-identical across runs")
    assert stegos[0] == stegos[1]
    assert _strip_elapsed(csvs[0]) == _strip_elapsed(csvs[1])
    assert svgs[0] == svgs[1]


# -- criterion 8 -------------------------------------------------------------

def test_criterion_8_performance_bound():
    # Absolute time/memory overhead reproduction is excluded by design
    # (machine- and profiler-specific); the substitute is determinism
    # (criterion 7) plus this soft bound on a 1000-byte embed.
    message = random.Random("perf").randbytes(1000)
    payload = frame(message)
    cover = covergen.gen_letter_stream(1, 18500)
    start = time.perf_counter()
    result = carriers.sift_embed(payload, CURVE, cover)
    elapsed = time.perf_counter() - start
    assert deframe(carriers.scheme_extract(result.stego, CURVE)) == message
    ok = elapsed < 1.0
    report(8, "performance bound", ok,
           f"1000-byte embed in {elapsed * 1000:.0f}ms; absolute overhead "
           "columns excluded by design")
    assert ok
