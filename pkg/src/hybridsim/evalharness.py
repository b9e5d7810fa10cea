"""Labeled pair datasets, ranking evaluation and related utilities.

A metric is evaluated by scoring every labeled pair, sorting the pairs by
descending score and computing the (non-interpolated) average precision of
the correct pairs. Equal scores keep their dataset order, so rankings are
reproducible.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterable, Sequence, TextIO

from .seqmetrics import metric_by_code
from .symbolizer import tokenize

StringMetric = Callable[[str, str], float]


class DataError(ValueError):
    """Malformed input file."""


class MetricError(RuntimeError):
    """A metric failed on a specific pair."""


@dataclass(frozen=True)
class LabeledPair:
    s1: str
    s2: str
    correct: bool

    def __post_init__(self):
        if not self.s1.strip() or not self.s2.strip():
            raise ValueError("pair strings must be non-empty")


@dataclass
class PairDataset:
    pairs: list[LabeledPair] = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.pairs)

    @property
    def m(self) -> int:
        return sum(p.correct for p in self.pairs)

    def strings(self) -> list[str]:
        """Both sides of every pair, in order (the IDF corpus)."""
        return [s for p in self.pairs for s in (p.s1, p.s2)]

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


@dataclass(frozen=True)
class ScoredRanking:
    """``(pair index, score, correct)`` sorted by score, then index."""

    entries: tuple[tuple[int, float, bool], ...]

    @classmethod
    def from_scores(
        cls, scores: Sequence[float], labels: Sequence[bool]
    ) -> ScoredRanking:
        if len(scores) != len(labels):
            raise ValueError("scores and labels differ in length")
        order = sorted(range(len(scores)), key=lambda i: (-scores[i], i))
        return cls(tuple((i, scores[i], bool(labels[i])) for i in order))

    @property
    def labels(self) -> list[bool]:
        return [correct for _, _, correct in self.entries]


@dataclass(frozen=True)
class EvalReport:
    metric: str
    avg_precision: float
    n: int
    m: int


def _read_tsv(path: str | Path, columns: int) -> Iterable[tuple[int, list[str]]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise DataError(f"cannot read {path}: {exc}") from None
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != columns:
            raise DataError(
                f"{path}:{lineno}: expected {columns} tab-separated fields, "
                f"got {len(fields)}"
            )
        yield lineno, fields


def load_pairs(path: str | Path) -> PairDataset:
    """Read ``s1<TAB>s2<TAB>label`` lines (label 1 or 0; ``#`` comments)."""
    pairs = []
    for lineno, (s1, s2, label) in _read_tsv(path, 3):
        label = label.strip()
        if label not in ("0", "1"):
            raise DataError(f"{path}:{lineno}: label must be 0 or 1, got {label!r}")
        try:
            pairs.append(LabeledPair(s1, s2, label == "1"))
        except ValueError as exc:
            raise DataError(f"{path}:{lineno}: {exc}") from None
    return PairDataset(pairs)


def load_records(path: str | Path) -> list[tuple[str, str]]:
    """Read ``id<TAB>text`` lines."""
    records = []
    for lineno, (rid, text) in _read_tsv(path, 2):
        if not rid.strip():
            raise DataError(f"{path}:{lineno}: empty record id")
        records.append((rid, text))
    return records


def load_lines(path: str | Path) -> list[str]:
    """Non-blank, non-comment lines of a UTF-8 file, stripped."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise DataError(f"cannot read {path}: {exc}") from None
    return [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    ]


def write_pairs(dataset: PairDataset, stream: TextIO) -> None:
    for p in dataset:
        stream.write(f"{p.s1}\t{p.s2}\t{int(p.correct)}\n")


def golden_dataset() -> PairDataset:
    """The small labeled dataset shipped with the package."""
    source = resources.files("hybridsim") / "data" / "golden.tsv"
    with resources.as_file(source) as path:
        return load_pairs(path)


def generate_pairs_from_records(records: Sequence[tuple[str, str]]) -> PairDataset:
    """Candidate pairs of records sharing at least one token.

    A pair is correct when both records carry the same id. Pairs come out
    ordered by (first record index, second record index).
    """
    postings: dict[str, list[int]] = {}
    for idx, (_, text) in enumerate(records):
        for token in set(tokenize(text)):
            postings.setdefault(token, []).append(idx)
    candidates: set[tuple[int, int]] = set()
    for indices in postings.values():
        candidates.update(combinations(indices, 2))
    return PairDataset(
        [
            LabeledPair(records[i][1], records[j][1], records[i][0] == records[j][0])
            for i, j in sorted(candidates)
        ]
    )


def avg_precision(
    ranking: ScoredRanking | Sequence[bool], m: int | None = None
) -> float:
    """Average precision of the correct items in a ranking.

    ``sum(precision@i for each rank i holding a correct item) / m`` where
    ``precision@i`` is the share of correct items among the first ``i``.

    >>> avg_precision([True, False, False, True])
    0.75
    """
    labels = ranking.labels if isinstance(ranking, ScoredRanking) else list(ranking)
    if m is None:
        m = sum(bool(x) for x in labels)
    if m <= 0:
        raise ValueError("undefined average precision: no correct pairs")
    hits = 0
    total = 0.0
    for i, correct in enumerate(labels, 1):
        if correct:
            hits += 1
            total += hits / i
    return total / m


def score_dataset(metric: StringMetric, dataset: PairDataset) -> list[float]:
    name = getattr(metric, "name", getattr(metric, "__name__", repr(metric)))
    scores = []
    for idx, pair in enumerate(dataset):
        try:
            scores.append(float(metric(pair.s1, pair.s2)))
        except Exception as exc:
            raise MetricError(
                f"{name} failed on pair {idx} ({pair.s1!r}, {pair.s2!r}): {exc}"
            ) from exc
    return scores


def evaluate(metric: StringMetric, dataset: PairDataset) -> EvalReport:
    if dataset.m < 1:
        raise ValueError("undefined average precision: no correct pairs")
    scores = score_dataset(metric, dataset)
    ranking = ScoredRanking.from_scores(scores, [p.correct for p in dataset])
    name = getattr(metric, "name", getattr(metric, "__name__", repr(metric)))
    return EvalReport(name, avg_precision(ranking, dataset.m), dataset.n, dataset.m)


def rank_metrics(
    metrics: Iterable[StringMetric], dataset: PairDataset
) -> list[EvalReport]:
    """Evaluate every metric; best average precision first, ties by name."""
    reports = [evaluate(metric, dataset) for metric in metrics]
    return sorted(reports, key=lambda r: (-r.avg_precision, r.metric))


def format_report(reports: Iterable[EvalReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["metric", "avg_precision", "n", "m"])
    for r in reports:
        writer.writerow([r.metric, f"{r.avg_precision:.4f}", r.n, r.m])
    return buf.getvalue()


CALIBRATION_GRID = tuple(round(0.50 + 0.01 * k, 2) for k in range(50))


def f1_at(scores: Sequence[float], labels: Sequence[bool], epsilon: float) -> float:
    tp = sum(s >= epsilon and y for s, y in zip(scores, labels))
    fp = sum(s >= epsilon and not y for s, y in zip(scores, labels))
    fn = sum(s < epsilon and y for s, y in zip(scores, labels))
    if tp == 0:
        return 0.0
    return 2 * tp / (2 * tp + fp + fn)


def calibrate_epsilon(
    token_pairs: Sequence[tuple[str, str, bool]],
    mu1: int,
    grid: Sequence[float] = CALIBRATION_GRID,
) -> float:
    """Threshold from ``grid`` maximizing the F1 of ``mu1(a, b) >= eps``.

    Ties go to the largest threshold.
    """
    labels = [bool(y) for _, _, y in token_pairs]
    if all(labels) or not any(labels):
        raise ValueError("cannot calibrate: need equivalent and non-equivalent pairs")
    metric = metric_by_code(mu1)
    scores = [metric(a, b) for a, b, _ in token_pairs]
    return max(grid, key=lambda eps: (f1_at(scores, labels, eps), eps))


def align_lexicon(
    terms: Sequence[str],
    labels: Sequence[str],
    metric: StringMetric,
    threshold: float,
) -> list[tuple[str, str, float]]:
    """Labels scoring at least ``threshold`` against each term.

    Output is grouped by term in input order; within a term, by descending
    score, then label order.
    """
    if not 0 <= threshold <= 1:
        raise ValueError(f"threshold must lie in [0, 1], got {threshold!r}")
    out = []
    for term in terms:
        hits = []
        for k, label in enumerate(labels):
            score = metric(term, label)
            if score >= threshold:
                hits.append((-score, k, label))
        out.extend((term, label, -neg) for neg, _, label in sorted(hits))
    return out
