"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line; conftest prints them all in the
terminal summary. Run alone with ``pytest tests/test_acceptance.py -v``.
"""

from __future__ import annotations

import itertools
import math
import random
import subprocess
import sys
import time

import pytest

from hybridsim.baselines import (
    CorpusStats,
    jaccard_tokens,
    monge_elkan_hybrid,
    soft_tfidf,
    taglink,
    tfidf_cosine,
)
from hybridsim.evalharness import ScoredRanking, avg_precision, golden_dataset, rank_metrics
from hybridsim.hybrid import HybridConfig, LiuppaMetric, enumerate_combinations, liuppa_score
from hybridsim.registry import parse_metric
from hybridsim.seqmetrics import METRICS, MetricCode, jaro_winkler, levenshtein_distance
from hybridsim.symbolizer import symbolize_pair, tokenize

from oracles import recursive_levenshtein

RESULTS: dict[int, str] = {}

EX1 = ("centre de formation professionnelle des adultes", "centre de formation des adultes")
EX2 = ("bureau de poste", "poste de radio")
PISTE = ("piste de ski", "ski de piste")
CASES = 1000


def record(number, ok, detail):
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[number] = line
    print(line)
    assert ok, line


def _cells(pair, expected):
    misses = []
    for code, want in expected.items():
        got = liuppa_score(HybridConfig(1, code, 0.84), *pair)
        if abs(got - want) > 0.005:
            misses.append(f"{MetricCode(code).name.lower()}={got:.4f} (want {want})")
    return misses


def test_criterion_01_example_one_cells():
    start = time.perf_counter()
    misses = _cells(
        EX1,
        {
            MetricCode.LEVENSHTEIN: 0.83,
            MetricCode.NEEDLEMAN_WUNSCH: 0.83,
            MetricCode.SMITH_WATERMAN: 0.90,
            MetricCode.JARO: 0.94,
            MetricCode.JARO_WINKLER: 0.96,
            MetricCode.QGRAM: 0.67,
            MetricCode.MONGE_ELKAN: 0.833,
        },
    )
    elapsed = time.perf_counter() - start
    if elapsed >= 1:
        misses.append(f"runtime {elapsed:.2f}s")
    record(1, not misses, "; ".join(misses) or f"7 cells within 0.005 in {elapsed:.3f}s")


def test_criterion_02_example_two_cells():
    start = time.perf_counter()
    misses = _cells(
        EX2,
        {
            MetricCode.LEVENSHTEIN: 0.33,
            MetricCode.NEEDLEMAN_WUNSCH: 0.67,
            MetricCode.SMITH_WATERMAN: 0.33,
            MetricCode.JARO: 0.0,
            MetricCode.JARO_WINKLER: 0.0,
            MetricCode.QGRAM: 0.0,
            MetricCode.MONGE_ELKAN: 0.33,
        },
    )
    elapsed = time.perf_counter() - start
    if elapsed >= 1:
        misses.append(f"runtime {elapsed:.2f}s")
    record(2, not misses, "; ".join(misses) or f"7 cells within 0.005 in {elapsed:.3f}s")


def test_criterion_03_symbol_sequences():
    got1 = symbolize_pair(tokenize(EX1[0]), tokenize(EX1[1]), jaro_winkler, 0.84)
    got2 = symbolize_pair(tokenize(EX2[0]), tokenize(EX2[1]), jaro_winkler, 0.84)
    ok = got1 == ([0, 1, 2, 3, 1, 4], [0, 1, 2, 1, 4]) and got2 == ([0, 1, 2], [2, 1, 3])
    record(3, ok, f"{got1} {got2}")


def test_criterion_04_token_threshold():
    score = jaro_winkler("de", "des")
    record(4, abs(score - 0.91) <= 0.005 and score >= 0.84, f"JW(de, des) = {score:.4f}")


def test_criterion_05_average_precision():
    a = avg_precision([True, False, False, True], 2)
    b = avg_precision([True, True, False, False], 2)
    ok = abs(a - 0.75) <= 1e-12 and abs(b - 1.0) <= 1e-12
    record(5, ok, f"{a!r}, {b!r}")


def test_criterion_06_order_sensitivity():
    stats = CorpusStats.from_strings(PISTE)
    scores = {
        "jaccard": jaccard_tokens(*PISTE),
        "tfidf": tfidf_cosine(stats, *PISTE),
        "mongeelkan_hybrid": monge_elkan_hybrid(*PISTE),
        "taglink": taglink(*PISTE),
    }
    liuppa = liuppa_score(HybridConfig(1, 1), *PISTE)
    ok = all(v == 1.0 for v in scores.values()) and liuppa <= 0.6
    detail = ", ".join(f"{k}={v:.4f}" for k, v in scores.items())
    record(6, ok, f"{detail}; liuppa:1,1={liuppa:.4f} (bound 0.6)")


# -- criterion 7: property suites ------------------------------------------

WORDS = ["de", "des", "poste", "radio", "bureau", "centre", "fer", "ferree", "voie",
         "nation", "national", "haras", "piste", "ski", "adultes", "formation"]


def _seq(rng, alphabet=4, max_len=7):
    return [rng.randrange(alphabet) for _ in range(rng.randrange(max_len))]


def _phrase(rng):
    return " ".join(rng.choices(WORDS, k=rng.randint(1, 4)))


def _suite_base_range(rng):
    for code, metric in METRICS.items():
        for _ in range(CASES):
            a, b = _seq(rng), _seq(rng)
            s = metric(a, b)
            if not 0 <= s <= 1 or (a and metric(a, a) != 1.0):
                return f"{code.name} on {a}, {b}"
    return None


def _suite_liuppa_range(rng):
    for config in enumerate_combinations():
        metric = LiuppaMetric(config)
        for _ in range(CASES):
            a, b = _phrase(rng), _phrase(rng)
            if not 0 <= metric(a, b) <= 1 or metric(a, a) != 1.0:
                return f"{config.name} on {a!r}, {b!r}"
    return None


def _baselines(stats):
    return {
        "jaccard": jaccard_tokens,
        "tfidf": lambda a, b: tfidf_cosine(stats, a, b),
        "softtfidf": lambda a, b: soft_tfidf(stats, a, b),
        "mongeelkan_hybrid": monge_elkan_hybrid,
        "taglink": taglink,
    }


def _suite_baseline_range(rng):
    strings = [_phrase(rng) for _ in range(200)]
    for name, metric in _baselines(CorpusStats.from_strings(strings)).items():
        for _ in range(CASES):
            a, b = rng.choice(strings), rng.choice(strings)
            if not 0 <= metric(a, b) <= 1 + 1e-12 or abs(metric(a, a) - 1) > 1e-12:
                return f"{name} on {a!r}, {b!r}"
    return None


def _suite_symmetry(rng):
    for code, metric in METRICS.items():
        if code == MetricCode.MONGE_ELKAN:
            continue
        for _ in range(CASES):
            a, b = _seq(rng), _seq(rng)
            if abs(metric(a, b) - metric(b, a)) > 1e-12:
                return f"{code.name} on {a}, {b}"
    strings = [_phrase(rng) for _ in range(200)]
    table = _baselines(CorpusStats.from_strings(strings))
    for name in ("jaccard", "tfidf", "taglink"):
        for _ in range(CASES):
            a, b = rng.choice(strings), rng.choice(strings)
            if abs(table[name](a, b) - table[name](b, a)) > 1e-12:
                return f"{name} on {a!r}, {b!r}"
    return None


def _suite_renaming(rng):
    for code, metric in METRICS.items():
        for _ in range(CASES):
            a, b = _seq(rng), _seq(rng)
            relabel = dict(zip(range(4), rng.sample(range(100, 200), 4)))
            renamed = metric([relabel[x] for x in a], [relabel[x] for x in b])
            if abs(renamed - metric(a, b)) > 1e-12:
                return f"{code.name} on {a}, {b}"
    return None


def _classes(seq1, seq2):
    symbols = seq1 + seq2
    return {(i, j) for i in range(len(symbols)) for j in range(len(symbols)) if symbols[i] == symbols[j]}


def _suite_refinement(rng):
    for code, metric in METRICS.items():
        for _ in range(CASES):
            t1 = rng.choices(WORDS, k=rng.randint(1, 5))
            t2 = rng.choices(WORDS, k=rng.randint(1, 5))
            low, high = sorted(rng.uniform(0.05, 1.0) for _ in range(2))
            coarse = _classes(*symbolize_pair(t1, t2, metric, low))
            fine = _classes(*symbolize_pair(t1, t2, metric, high))
            if not fine <= coarse:
                return f"{code.name} on {t1}, {t2}, eps {low:.3f} < {high:.3f}"
    return None


def _suite_swaps(rng):
    done = 0
    while done < CASES:
        labels = [rng.random() < 0.5 for _ in range(rng.randint(2, 12))]
        k = rng.randrange(len(labels) - 1)
        if not (labels[k + 1] and not labels[k]):
            continue
        swapped = labels[:k] + [True, False] + labels[k + 2 :]
        if not avg_precision(swapped) > avg_precision(labels):
            return f"{labels} at {k}"
        done += 1
    return None


def _suite_monotone(rng):
    transforms = [math.sqrt, lambda x: x**3, lambda x: math.log1p(x), lambda x: 2 * x - 1]
    for _ in range(CASES):
        n = rng.randint(1, 12)
        scores = [rng.choice([0.0, 0.2, 0.4, 0.6, 0.8, 1.0]) for _ in range(n)]
        labels = [rng.random() < 0.5 for _ in range(n)]
        labels[rng.randrange(n)] = True
        base = avg_precision(ScoredRanking.from_scores(scores, labels))
        for f in transforms:
            if avg_precision(ScoredRanking.from_scores([f(s) for s in scores], labels)) != base:
                return f"{scores} {labels}"
    return None


SUITES = [
    ("range+reflexivity: 9 base metrics", _suite_base_range),
    ("range+reflexivity: 81 liuppa configs", _suite_liuppa_range),
    ("range+reflexivity: 5 baselines", _suite_baseline_range),
    ("symmetry: symmetric subset", _suite_symmetry),
    ("alphabet renaming", _suite_renaming),
    ("epsilon refinement", _suite_refinement),
    ("avg_precision adjacent swaps", _suite_swaps),
    ("avg_precision monotone transforms", _suite_monotone),
]


def test_criterion_07_property_suites():
    failures = []
    for k, (name, suite) in enumerate(SUITES):
        counterexample = suite(random.Random(700 + k))
        if counterexample:
            failures.append(f"{name}: {counterexample}")
    record(7, not failures, "; ".join(failures) or f"{len(SUITES)} suites, {CASES} cases per subject")


def test_criterion_08_levenshtein_exhaustive():
    start = time.perf_counter()
    seqs = [s for n in range(7) for s in itertools.product(range(3), repeat=n)]
    mismatches = 0
    for a in seqs:
        for b in seqs:
            if levenshtein_distance(a, b) != recursive_levenshtein(a, b):
                mismatches += 1
    elapsed = time.perf_counter() - start
    recursive_levenshtein.cache_clear()
    ok = mismatches == 0 and elapsed < 30
    record(8, ok, f"{len(seqs) ** 2} pairs, {mismatches} mismatches, {elapsed:.1f}s")


def test_criterion_09_golden_leaderboard():
    reports = rank_metrics([parse_metric("liuppa:1,1"), parse_metric("jarowinkler")], golden_dataset())
    by_name = {r.metric: r.avg_precision for r in reports}
    liuppa, jw = by_name["liuppa:1,1"], by_name["jarowinkler"]
    ok = liuppa == 1.0 and liuppa > jw
    record(9, ok, f"liuppa:1,1 AP={liuppa:.4f}, jarowinkler AP={jw:.4f}")


def test_criterion_10_determinism(tmp_path):
    source = golden_dataset()
    path = tmp_path / "golden.tsv"
    path.write_text("".join(f"{p.s1}\t{p.s2}\t{int(p.correct)}\n" for p in source), encoding="utf-8")
    argv = [sys.executable, "-m", "hybridsim", "eval", "--dataset", str(path), "--all"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    rows = first.decode().count("\n") - 1
    record(10, first == second and rows == 94, f"{rows} rows, identical={first == second}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
