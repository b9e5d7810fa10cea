"""Named metrics and the textual selector syntax used by the CLI.

Selectors::

    liuppa:1,1            hybrid metric, default threshold for mu1
    liuppa:1,1:eps=0.9    hybrid metric with an explicit threshold
    jarowinkler, levenshtein, ...   base metric on the whole (lowercased) string
    jaccard, tfidf, softtfidf[:theta=0.85], taglink, mongeelkan_hybrid
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import partial
from typing import Callable

from . import baselines
from .baselines import CorpusStats
from .hybrid import HybridConfig, LiuppaMetric, enumerate_combinations
from .seqmetrics import METRIC_NAMES, METRICS, MetricCode

StringMetric = Callable[[str, str], float]

CHARACTER_BASELINES = [
    MetricCode.JARO_WINKLER,
    MetricCode.MONGE_ELKAN,
    MetricCode.JARO,
    MetricCode.LEVENSHTEIN,
    MetricCode.NEEDLEMAN_WUNSCH,
    MetricCode.SMITH_WATERMAN,
    MetricCode.QGRAM,
    MetricCode.ISUB,
]
TOKEN_BASELINES = ["jaccard", "tfidf"]
HYBRID_BASELINES = ["softtfidf", "taglink", "mongeelkan_hybrid"]

BASELINE_NAMES = (
    [METRIC_NAMES[c] for c in CHARACTER_BASELINES] + TOKEN_BASELINES + HYBRID_BASELINES
)

_LIUPPA = re.compile(r"^liuppa:(\d+),(\d+)(?::eps=([0-9.]+))?$")
_SOFT = re.compile(r"^softtfidf(?::theta=([0-9.]+))?$")
_BY_NAME = {name: code for code, name in METRIC_NAMES.items()}


class UnknownMetric(ValueError):
    pass


@dataclass(frozen=True)
class NamedMetric:
    name: str
    fn: StringMetric

    def __call__(self, s1: str, s2: str) -> float:
        return self.fn(s1, s2)


def _whole_string(code: MetricCode) -> StringMetric:
    metric = METRICS[code]

    def score(s1: str, s2: str) -> float:
        return metric(s1.lower(), s2.lower())

    return score


def parse_metric(selector: str, stats: CorpusStats | None = None) -> NamedMetric:
    """Build the metric named by ``selector``.

    ``stats`` supplies document frequencies for ``tfidf`` and ``softtfidf``;
    it is required for those two.
    """
    selector = selector.strip()
    if m := _LIUPPA.match(selector):
        i, j, eps = m.groups()
        try:
            config = HybridConfig(int(i), int(j), float(eps) if eps else None)
        except ValueError as exc:
            raise UnknownMetric(f"bad metric {selector!r}: {exc}") from None
        return NamedMetric(selector, LiuppaMetric(config))
    if selector in _BY_NAME:
        return NamedMetric(selector, _whole_string(_BY_NAME[selector]))
    if selector == "jaccard":
        return NamedMetric(selector, baselines.jaccard_tokens)
    if selector == "taglink":
        return NamedMetric(selector, baselines.taglink)
    if selector == "mongeelkan_hybrid":
        return NamedMetric(selector, baselines.monge_elkan_hybrid)
    soft = _SOFT.match(selector)
    if selector == "tfidf" or soft:
        if stats is None:
            raise ValueError(f"metric {selector!r} needs corpus statistics")
        if selector == "tfidf":
            return NamedMetric(selector, partial(baselines.tfidf_cosine, stats))
        theta = float(soft.group(1)) if soft.group(1) else 0.9
        return NamedMetric(selector, partial(baselines.soft_tfidf, stats, theta=theta))
    raise UnknownMetric(f"unknown metric {selector!r}")


def liuppa_metrics() -> list[NamedMetric]:
    out = []
    for config in enumerate_combinations():
        metric = LiuppaMetric(config)
        out.append(NamedMetric(metric.name, metric))
    return out


def baseline_metrics(stats: CorpusStats) -> list[NamedMetric]:
    return [parse_metric(name, stats) for name in BASELINE_NAMES]


def all_metrics(stats: CorpusStats) -> list[NamedMetric]:
    """The 81 hybrid configurations followed by the 13 baselines."""
    return liuppa_metrics() + baseline_metrics(stats)
