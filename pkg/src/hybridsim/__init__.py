"""Hybrid token/character string similarity metrics and their evaluation."""

from .baselines import (
    CorpusStats,
    jaccard_tokens,
    monge_elkan_hybrid,
    soft_tfidf,
    taglink,
    tfidf_cosine,
)
from .evalharness import (
    EvalReport,
    LabeledPair,
    PairDataset,
    ScoredRanking,
    align_lexicon,
    avg_precision,
    calibrate_epsilon,
    evaluate,
    generate_pairs_from_records,
    golden_dataset,
    load_pairs,
    rank_metrics,
)
from .hybrid import (
    HybridConfig,
    LiuppaMetric,
    default_threshold,
    enumerate_combinations,
    liuppa_score,
)
from .seqmetrics import (
    MetricCode,
    isub,
    jaccard2,
    jaro,
    jaro_winkler,
    levenshtein_sim,
    metric_by_code,
    monge_elkan_seq,
    needleman_wunsch_sim,
    qgram_sim,
    smith_waterman_sim,
)
from .symbolizer import symbolize_pair, tokenize

__version__ = "0.1.0"
