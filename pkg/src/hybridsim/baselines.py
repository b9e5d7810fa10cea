"""Token-based and classic hybrid string metrics used for comparison.

These all treat a string as a bag of tokens and ignore token order.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .seqmetrics import jaro_winkler
from .symbolizer import tokenize

TokenMetric = Callable[[str, str], float]

# exact assignment up to this many tokens per side, greedy beyond
ASSIGNMENT_CUTOFF = 16


@dataclass(frozen=True)
class CorpusStats:
    """Document frequencies over a corpus of strings (one document each)."""

    document_count: int
    document_frequency: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.document_count < 1:
            raise ValueError("corpus must contain at least one document")

    @classmethod
    def from_strings(cls, strings: Iterable[str]) -> CorpusStats:
        df: Counter[str] = Counter()
        n = 0
        for s in strings:
            n += 1
            df.update(set(tokenize(s)))
        return cls(max(n, 1), dict(df))

    def idf(self, token: str) -> float:
        df = self.document_frequency.get(token, 1)
        return math.log(self.document_count / df)

    def weights(self, tokens: Iterable[str]) -> dict[str, float]:
        """Unnormalized ``log(tf + 1) * log(N / df)`` weights."""
        return {t: math.log(tf + 1) * self.idf(t) for t, tf in Counter(tokens).items()}


def _unit(weights: dict[str, float]) -> dict[str, float] | None:
    norm = math.sqrt(sum(w * w for w in weights.values()))
    if norm == 0:
        return None
    return {t: w / norm for t, w in weights.items()}


def jaccard_tokens(s1: str, s2: str) -> float:
    a, b = set(tokenize(s1)), set(tokenize(s2))
    if not a and not b:
        return 1.0
    return len(a & b) / len(a | b)


def tfidf_cosine(stats: CorpusStats, s1: str, s2: str) -> float:
    """Cosine similarity of TF-IDF token vectors.

    Identical token bags score 1 even when every weight is zero (a token
    present in all documents); otherwise an all-zero vector scores 0.
    """
    t1, t2 = tokenize(s1), tokenize(s2)
    if Counter(t1) == Counter(t2):
        return 1.0
    v1, v2 = _unit(stats.weights(t1)), _unit(stats.weights(t2))
    if v1 is None or v2 is None:
        return 0.0
    dot = sum(w * v2[t] for t, w in v1.items() if t in v2)
    return min(1.0, max(0.0, dot))


def soft_tfidf(
    stats: CorpusStats,
    s1: str,
    s2: str,
    inner: TokenMetric = jaro_winkler,
    theta: float = 0.9,
) -> float:
    """SoftTFIDF (Cohen, Ravikumar & Fienberg, 2003).

    Every token ``w`` of ``s1`` is paired with its most similar token ``v``
    of ``s2`` under ``inner``. Pairs with similarity at least ``theta``
    contribute ``V(w, s1) * V(v, s2) * sim``, where ``V`` are the unit-length
    TF-IDF vectors.
    """
    t1, t2 = tokenize(s1), tokenize(s2)
    if Counter(t1) == Counter(t2):
        return 1.0
    v1, v2 = _unit(stats.weights(t1)), _unit(stats.weights(t2))
    if v1 is None or v2 is None:
        return 0.0
    total = 0.0
    for w, weight in v1.items():
        best, closest = -1.0, None
        for v in v2:
            sim = inner(w, v)
            if sim > best:
                best, closest = sim, v
        if best >= theta:
            total += weight * v2[closest] * best
    return min(1.0, max(0.0, total))


def monge_elkan_hybrid(s1: str, s2: str, inner: TokenMetric = jaro_winkler) -> float:
    """Mean over tokens of ``s1`` of their best ``inner`` match in ``s2``."""
    t1, t2 = tokenize(s1), tokenize(s2)
    if not t1:
        raise ValueError("empty left operand")
    if not t2:
        return 0.0
    return sum(max(inner(a, b) for b in t2) for a in t1) / len(t1)


def taglink_token(t: str, u: str) -> float:
    """Character-level token comparison used by :func:`taglink`.

    Equal characters within ``max(len) // 2`` positions of each other are
    paired one-to-one, closest pairs first. The score is the share of
    characters covered by pairs, ``2 * pairs / (len(t) + len(u))``.
    """
    if t == u:
        return 1.0
    if not t or not u:
        return 0.0
    window = max(len(t), len(u)) // 2
    candidates = sorted(
        (abs(i - j), i, j)
        for i, x in enumerate(t)
        for j in range(max(0, i - window), min(len(u), i + window + 1))
        if u[j] == x
    )
    used_t, used_u = set(), set()
    for _, i, j in candidates:
        if i not in used_t and j not in used_u:
            used_t.add(i)
            used_u.add(j)
    return 2 * len(used_t) / (len(t) + len(u))


def _length_weights(tokens: list[str]) -> list[float]:
    norm = math.sqrt(sum(len(t) ** 2 for t in tokens))
    return [len(t) / norm for t in tokens]


def greedy_assignment(matrix: list[list[float]]) -> list[tuple[int, int]]:
    """Best-first one-to-one assignment; ties by row then column."""
    cells = sorted(
        ((-v, i, j) for i, row in enumerate(matrix) for j, v in enumerate(row)),
    )
    rows, cols, chosen = set(), set(), []
    for _, i, j in cells:
        if i not in rows and j not in cols:
            rows.add(i)
            cols.add(j)
            chosen.append((i, j))
    return chosen


def optimal_assignment(matrix: list[list[float]]) -> list[tuple[int, int]]:
    from scipy.optimize import linear_sum_assignment

    rows, cols = linear_sum_assignment(matrix, maximize=True)
    return list(zip(rows.tolist(), cols.tolist()))


def taglink(
    s1: str,
    s2: str,
    inner: TokenMetric = taglink_token,
    cutoff: int = ASSIGNMENT_CUTOFF,
) -> float:
    """TagLink-style assignment score (after Camacho & Salhi, 2006).

    Each token occurrence is weighted by its character length, scaled so the
    weights of a string have unit L2 norm; longer tokens therefore carry more
    of the score. Token pairs are worth ``inner(t, u) * w_t * w_u`` and the
    one-to-one token assignment of maximal total worth is the score. By
    Cauchy-Schwarz the result never exceeds 1, and a string scores exactly 1
    against any reordering of its own tokens.
    """
    t1, t2 = tokenize(s1), tokenize(s2)
    if Counter(t1) == Counter(t2):
        return 1.0
    if not t1 or not t2:
        return 0.0
    w1, w2 = _length_weights(t1), _length_weights(t2)
    matrix = [[inner(a, b) * wa * wb for b, wb in zip(t2, w2)] for a, wa in zip(t1, w1)]
    if max(len(t1), len(t2)) <= cutoff:
        pairs = optimal_assignment(matrix)
    else:
        pairs = greedy_assignment(matrix)
    return min(1.0, max(0.0, sum(matrix[i][j] for i, j in pairs)))
