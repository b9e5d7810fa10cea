"""Sequence similarity metrics over arbitrary element alphabets.

Every metric accepts either a character string or any sequence of hashable
elements (typically small non-negative integers such as symbol ids) and only
ever compares elements for equality. The same function therefore scores a
pair of tokens character by character and a pair of symbol sequences symbol
by symbol.

All metrics return a float in [0, 1] and score identical non-empty inputs
exactly 1.0.
"""

from __future__ import annotations

from enum import IntEnum
from typing import Callable, Hashable, Sequence

Elements = Sequence[Hashable]
SequenceMetric = Callable[[Elements, Elements], float]

# q-gram padding ids; never produced by tokenization (code points) or by the
# symbolizer (ids >= 0)
_PAD_START = -1
_PAD_END = -2


class MetricCode(IntEnum):
    JARO_WINKLER = 1
    LEVENSHTEIN = 2
    NEEDLEMAN_WUNSCH = 3
    SMITH_WATERMAN = 4
    QGRAM = 5
    MONGE_ELKAN = 6
    JARO = 7
    JACCARD2 = 8
    ISUB = 9


def as_elements(seq: Elements) -> tuple:
    """Return ``seq`` as a tuple; strings become tuples of code points."""
    if isinstance(seq, str):
        return tuple(map(ord, seq))
    return tuple(seq)


def _trivial(a: tuple, b: tuple) -> float | None:
    # shared empty/identity conventions
    if a == b:
        return 1.0
    if not a or not b:
        return 0.0
    return None


def _common(s: tuple, t: tuple, half: int) -> list:
    # elements of s found (unused) in t within [i - half, i + half)
    free = list(t)
    common = []
    for i, x in enumerate(s):
        for j in range(max(0, i - half), min(len(t), i + half)):
            if free[j] == x:
                free[j] = None
                common.append(x)
                break
    return common


def jaro(a: Elements, b: Elements) -> float:
    """Jaro similarity, as implemented in the SecondString toolkit.

    Common elements are collected in both directions: element ``i`` of one
    sequence takes the first unused equal element of the other at a
    position in ``[i - h, i + h)`` with ``h = min(len(a), len(b)) // 2 + 1``.
    If the two directions disagree on the number of common elements the
    score is 0. Transpositions are half the number of out-of-order common
    elements, rounded down.

    >>> round(jaro("MARTHA", "MARHTA"), 4)
    0.9444
    >>> jaro([0, 1, 2], [2, 1, 3])
    0.0
    """
    a, b = as_elements(a), as_elements(b)
    trivial = _trivial(a, b)
    if trivial is not None:
        return trivial

    half = min(len(a), len(b)) // 2 + 1
    common_a = _common(a, b, half)
    common_b = _common(b, a, half)
    m = len(common_a)
    if m == 0 or m != len(common_b):
        return 0.0
    t = sum(x != y for x, y in zip(common_a, common_b)) // 2
    return (m / len(a) + m / len(b) + (m - t) / m) / 3


def jaro_winkler(
    a: Elements, b: Elements, prefix_scale: float = 0.1, max_prefix: int = 4
) -> float:
    """Jaro similarity boosted by the length of the common prefix."""
    a, b = as_elements(a), as_elements(b)
    j = jaro(a, b)
    prefix = 0
    for x, y in zip(a[:max_prefix], b[:max_prefix]):
        if x != y:
            break
        prefix += 1
    return j + prefix * prefix_scale * (1.0 - j)


def levenshtein_distance(a: Elements, b: Elements) -> int:
    """Unit-cost edit distance (insert, delete, substitute)."""
    a, b = as_elements(a), as_elements(b)
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    previous = list(range(len(b) + 1))
    for i, x in enumerate(a, 1):
        diag, left = previous[0], i
        current = [i]
        for j, y in enumerate(b):
            up = previous[j + 1]
            cost = diag if x == y else diag + 1
            if up + 1 < cost:
                cost = up + 1
            if left + 1 < cost:
                cost = left + 1
            current.append(cost)
            diag, left = up, cost
        previous = current
    return previous[-1]


def levenshtein_sim(a: Elements, b: Elements) -> float:
    a, b = as_elements(a), as_elements(b)
    if not a and not b:
        return 1.0
    return 1.0 - levenshtein_distance(a, b) / max(len(a), len(b))


def needleman_wunsch_sim(
    a: Elements, b: Elements, gap_cost: float = 2.0, mismatch_cost: float = 1.0
) -> float:
    """Global alignment cost turned into a similarity.

    The minimal alignment cost is divided by the worst case for the longer
    sequence, ``max(len) * max(gap_cost, mismatch_cost)``.
    """
    a, b = as_elements(a), as_elements(b)
    if not a and not b:
        return 1.0
    previous = [j * gap_cost for j in range(len(b) + 1)]
    for i, x in enumerate(a, 1):
        current = [i * gap_cost]
        for j, y in enumerate(b, 1):
            current.append(
                min(
                    previous[j - 1] + (0.0 if x == y else mismatch_cost),
                    previous[j] + gap_cost,
                    current[j - 1] + gap_cost,
                )
            )
        previous = current
    worst = max(len(a), len(b)) * max(gap_cost, mismatch_cost)
    return max(0.0, 1.0 - previous[-1] / worst)


def smith_waterman_sim(
    a: Elements,
    b: Elements,
    match: float = 1.0,
    mismatch: float = -2.0,
    gap: float = -0.5,
) -> float:
    """Best local alignment score divided by the shorter length."""
    a, b = as_elements(a), as_elements(b)
    trivial = _trivial(a, b)
    if trivial is not None:
        return trivial
    best = 0.0
    previous = [0.0] * (len(b) + 1)
    for x in a:
        current = [0.0]
        for j, y in enumerate(b, 1):
            h = max(
                0.0,
                previous[j - 1] + (match if x == y else mismatch),
                previous[j] + gap,
                current[j - 1] + gap,
            )
            current.append(h)
            if h > best:
                best = h
        previous = current
    return min(1.0, max(0.0, best / (match * min(len(a), len(b)))))


def qgram_counts(seq: Elements, q: int = 3) -> dict[tuple, int]:
    """Multiset of q-grams after padding with ``q - 1`` sentinels per side."""
    padded = (_PAD_START,) * (q - 1) + as_elements(seq) + (_PAD_END,) * (q - 1)
    counts: dict[tuple, int] = {}
    for i in range(len(padded) - q + 1):
        gram = padded[i : i + q]
        counts[gram] = counts.get(gram, 0) + 1
    return counts


def qgram_sim(a: Elements, b: Elements, q: int = 3) -> float:
    """Block distance between padded q-gram profiles, normalized by the total
    number of q-grams."""
    a, b = as_elements(a), as_elements(b)
    if not a and not b:
        return 1.0
    ca, cb = qgram_counts(a, q), qgram_counts(b, q)
    distance = sum(abs(ca.get(g, 0) - cb.get(g, 0)) for g in ca.keys() | cb.keys())
    total = (len(a) + q - 1) + (len(b) + q - 1)
    return 1.0 - distance / total


def monge_elkan_seq(
    a: Elements,
    b: Elements,
    match: float = 5.0,
    mismatch: float = -3.0,
    gap_open: float = 5.0,
    gap_extend: float = 1.0,
) -> float:
    """Monge-Elkan's affine-gap variant of Smith-Waterman.

    A gap of length k costs ``gap_open + (k - 1) * gap_extend``. The best
    local score is divided by ``match * min(len(a), len(b))``. Monge and
    Elkan also gave partial credit to "similar" characters; that table is
    alphabet specific and is left out so the metric stays a pure function of
    element equality.
    """
    a, b = as_elements(a), as_elements(b)
    trivial = _trivial(a, b)
    if trivial is not None:
        return trivial

    neg = float("-inf")
    n = len(b)
    h_prev = [0.0] * (n + 1)
    f_prev = [neg] * (n + 1)  # gap in `b` running down column j
    best = 0.0
    for x in a:
        h_cur = [0.0] * (n + 1)
        f_cur = [neg] * (n + 1)
        e = neg  # gap in `a` running along the row
        for j in range(1, n + 1):
            e = max(h_cur[j - 1] - gap_open, e - gap_extend)
            f_cur[j] = max(h_prev[j] - gap_open, f_prev[j] - gap_extend)
            diag = h_prev[j - 1] + (match if x == b[j - 1] else mismatch)
            h = max(0.0, diag, e, f_cur[j])
            h_cur[j] = h
            if h > best:
                best = h
        h_prev, f_prev = h_cur, f_cur
    return min(1.0, best / (match * min(len(a), len(b))))


def jaccard2(a: Elements, b: Elements) -> float:
    """Jaccard index of the two element sets."""
    sa, sb = set(as_elements(a)), set(as_elements(b))
    if not sa and not sb:
        return 1.0
    return len(sa & sb) / len(sa | sb)


def longest_common_substring(a: tuple, b: tuple) -> tuple[int, int, int]:
    """Return ``(length, start_a, start_b)`` of a longest common substring.

    Ties go to the earliest start in ``a``, then the earliest start in ``b``.
    """
    best = (0, 0, 0)
    previous = [0] * (len(b) + 1)
    for i, x in enumerate(a, 1):
        current = [0] * (len(b) + 1)
        for j, y in enumerate(b, 1):
            if x == y:
                k = previous[j - 1] + 1
                current[j] = k
                # strict improvement, or same length with an earlier a-start
                start = (i - k, j - k)
                if k > best[0] or (k == best[0] and start < best[1:]):
                    best = (k, i - k, j - k)
        previous = current
    return best


def _substring_overlap(a: tuple, b: tuple, min_substring: int) -> int:
    # total length of longest common substrings removed one after another
    common = 0
    while a and b:
        k, i, j = longest_common_substring(a, b)
        if k < min_substring:
            break
        common += k
        a = a[:i] + a[i + k :]
        b = b[:j] + b[j + k :]
    return common


def isub(
    a: Elements,
    b: Elements,
    hamacher: float = 0.6,
    min_substring: int = 3,
    mapped: bool = True,
) -> float:
    """I-Sub similarity.

    Common substrings of at least ``min_substring`` elements are removed
    repeatedly (longest first, remainders rejoined) to measure commonality; the unmatched
    remainders feed a Hamacher-product dissimilarity, and a Winkler prefix
    bonus is added. The raw value lies in [-1, 1]; with ``mapped`` it is
    returned as ``(raw + 1) / 2``.
    """
    a, b = as_elements(a), as_elements(b)
    if a == b:
        return 1.0
    if not a or not b:
        return 0.0 if mapped else -1.0

    len_a, len_b = len(a), len(b)
    # removal order depends on which argument breaks ties; take the better
    # of both orders so the score is symmetric
    common = max(
        _substring_overlap(a, b, min_substring),
        _substring_overlap(b, a, min_substring),
    )
    commonality = 2.0 * common / (len_a + len_b)

    unmatched_a = (len_a - common) / len_a
    unmatched_b = (len_b - common) / len_b
    total = unmatched_a + unmatched_b
    product = unmatched_a * unmatched_b
    dissimilarity = 0.0
    if total - product != 0:
        dissimilarity = product / (hamacher + (1 - hamacher) * (total - product))

    prefix = 0
    for x, y in zip(a[:4], b[:4]):
        if x != y:
            break
        prefix += 1
    winkler = prefix * 0.1 * (1.0 - commonality)

    raw = commonality - dissimilarity + winkler
    if not mapped:
        return raw
    return min(1.0, max(0.0, (raw + 1.0) / 2.0))


METRICS: dict[MetricCode, SequenceMetric] = {
    MetricCode.JARO_WINKLER: jaro_winkler,
    MetricCode.LEVENSHTEIN: levenshtein_sim,
    MetricCode.NEEDLEMAN_WUNSCH: needleman_wunsch_sim,
    MetricCode.SMITH_WATERMAN: smith_waterman_sim,
    MetricCode.QGRAM: qgram_sim,
    MetricCode.MONGE_ELKAN: monge_elkan_seq,
    MetricCode.JARO: jaro,
    MetricCode.JACCARD2: jaccard2,
    MetricCode.ISUB: isub,
}

METRIC_NAMES: dict[MetricCode, str] = {
    MetricCode.JARO_WINKLER: "jarowinkler",
    MetricCode.LEVENSHTEIN: "levenshtein",
    MetricCode.NEEDLEMAN_WUNSCH: "needlemanwunch",
    MetricCode.SMITH_WATERMAN: "smithwaterman",
    MetricCode.QGRAM: "qgram",
    MetricCode.MONGE_ELKAN: "mongeelkan",
    MetricCode.JARO: "jaro",
    MetricCode.JACCARD2: "jaccard2",
    MetricCode.ISUB: "isub",
}


def to_code(code: int) -> MetricCode:
    try:
        return MetricCode(int(code))
    except (ValueError, TypeError):
        raise ValueError(f"unknown metric code: {code!r}") from None


def metric_by_code(code: int) -> SequenceMetric:
    """Look up a base metric (with its default parameters) by its 1..9 code."""
    return METRICS[to_code(code)]
