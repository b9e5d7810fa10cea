"""Two-level hybrid metric: token symbolization followed by a sequence metric.

``Liuppa(i, j)`` tokenizes both strings, merges tokens whose metric-``i``
similarity reaches the threshold into shared symbols, and scores the two
symbol sequences with metric ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .seqmetrics import MetricCode, metric_by_code, to_code
from .symbolizer import symbolize_pair, tokenize

DEFAULT_THRESHOLDS: dict[MetricCode, float] = {
    MetricCode.JARO_WINKLER: 0.84,
    MetricCode.LEVENSHTEIN: 0.79,
    MetricCode.NEEDLEMAN_WUNSCH: 0.88,
    MetricCode.SMITH_WATERMAN: 0.83,
    MetricCode.QGRAM: 0.60,
    MetricCode.MONGE_ELKAN: 0.84,
    MetricCode.JARO: 0.80,
    MetricCode.JACCARD2: 0.80,
    MetricCode.ISUB: 0.80,
}


def default_threshold(code: int) -> float:
    return DEFAULT_THRESHOLDS[to_code(code)]


@dataclass(frozen=True)
class HybridConfig:
    mu1: MetricCode
    mu2: MetricCode
    epsilon: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "mu1", to_code(self.mu1))
        object.__setattr__(self, "mu2", to_code(self.mu2))
        if self.epsilon is None:
            object.__setattr__(self, "epsilon", default_threshold(self.mu1))
        if not 0 < self.epsilon <= 1:
            raise ValueError(f"epsilon must lie in (0, 1], got {self.epsilon!r}")

    @property
    def name(self) -> str:
        base = f"liuppa:{int(self.mu1)},{int(self.mu2)}"
        if self.epsilon != default_threshold(self.mu1):
            base += f":eps={self.epsilon:g}"
        return base


def hybrid_symbols(
    config: HybridConfig, s1: str, s2: str
) -> tuple[list[int], list[int]]:
    return symbolize_pair(
        tokenize(s1), tokenize(s2), metric_by_code(config.mu1), config.epsilon
    )


def liuppa_score(config: HybridConfig, s1: str, s2: str) -> float:
    """Score two strings with the hybrid metric described by ``config``."""
    tokens1, tokens2 = tokenize(s1), tokenize(s2)
    if not tokens1 and not tokens2:
        return 1.0
    if not tokens1 or not tokens2:
        return 0.0
    seq1, seq2 = symbolize_pair(
        tokens1, tokens2, metric_by_code(config.mu1), config.epsilon
    )
    return metric_by_code(config.mu2)(seq1, seq2)


class LiuppaMetric:
    """Callable ``(s1, s2) -> score`` for one configuration.

    Token-level scores are memoized per instance, which pays off when the
    same vocabulary recurs across many pairs.
    """

    def __init__(self, config: HybridConfig, cache_size: int = 1 << 16):
        self.config = config
        self.name = config.name
        self._mu1: Callable[[str, str], float] = lru_cache(maxsize=cache_size)(
            metric_by_code(config.mu1)
        )
        self._mu2 = metric_by_code(config.mu2)

    def __call__(self, s1: str, s2: str) -> float:
        tokens1, tokens2 = tokenize(s1), tokenize(s2)
        if not tokens1 and not tokens2:
            return 1.0
        if not tokens1 or not tokens2:
            return 0.0
        seq1, seq2 = symbolize_pair(tokens1, tokens2, self._mu1, self.config.epsilon)
        return self._mu2(seq1, seq2)

    def __repr__(self):
        return f"LiuppaMetric({self.name})"


def enumerate_combinations() -> list[HybridConfig]:
    """All 81 ``(mu1, mu2)`` pairs with default thresholds, mu1-major."""
    return [HybridConfig(i, j) for i in MetricCode for j in MetricCode]
