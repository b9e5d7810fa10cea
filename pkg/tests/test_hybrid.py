import random

import pytest

from hybridsim.hybrid import (
    HybridConfig,
    LiuppaMetric,
    default_threshold,
    enumerate_combinations,
    hybrid_symbols,
    liuppa_score,
)
from hybridsim.seqmetrics import MetricCode
from hybridsim.evalharness import golden_dataset

EX1 = ("centre de formation professionnelle des adultes", "centre de formation des adultes")
EX2 = ("bureau de poste", "poste de radio")


def test_liuppa_1_1_example_one():
    assert liuppa_score(HybridConfig(1, 1), *EX1) == pytest.approx(0.96, abs=0.005)


def test_liuppa_1_2_example_two():
    assert liuppa_score(HybridConfig(1, 2), *EX2) == pytest.approx(1 / 3, abs=0.005)


def test_liuppa_1_1_reordered_tokens():
    # [0,1,2] vs [2,1,0]: both directions find two common symbols, one swap
    score = liuppa_score(HybridConfig(1, 1), "piste de ski", "ski de piste")
    assert score == pytest.approx((2 / 3 + 2 / 3 + 1) / 3)
    assert score < 1.0


def test_symbols_exposed():
    assert hybrid_symbols(HybridConfig(1, 1), *EX2) == ([0, 1, 2], [2, 1, 3])


@pytest.mark.parametrize(
    "code, eps",
    [(1, 0.84), (2, 0.79), (3, 0.88), (4, 0.83), (5, 0.60), (6, 0.84), (7, 0.80), (8, 0.80), (9, 0.80)],
)
def test_default_threshold(code, eps):
    assert default_threshold(code) == eps


def test_default_threshold_out_of_range():
    with pytest.raises(ValueError):
        default_threshold(0)


def test_enumerate_combinations():
    configs = enumerate_combinations()
    assert len(configs) == 81
    assert configs[0] == HybridConfig(1, 1, 0.84)
    assert configs[1] == HybridConfig(1, 2, 0.84)
    assert configs[-1] == HybridConfig(9, 9, 0.80)
    assert all(c.epsilon == default_threshold(c.mu1) for c in configs)
    assert len({(c.mu1, c.mu2) for c in configs}) == 81


def test_config_validation_and_names():
    assert HybridConfig(1, 1).name == "liuppa:1,1"
    assert HybridConfig(1, 1, 0.9).name == "liuppa:1,1:eps=0.9"
    with pytest.raises(ValueError, match="unknown metric code"):
        HybridConfig(10, 1)
    with pytest.raises(ValueError):
        HybridConfig(1, 1, 0.0)
    with pytest.raises(ValueError):
        HybridConfig(1, 1, 1.5)


def test_empty_inputs():
    config = HybridConfig(1, 1)
    assert liuppa_score(config, "", "  -- ") == 1.0
    assert liuppa_score(config, "", "a") == 0.0
    assert liuppa_score(config, "a", "") == 0.0


def test_metric_object_matches_function():
    rng = random.Random(0)
    words = ["de", "des", "poste", "radio", "bureau", "centre", "fer", "ferrée", "voie"]
    for config in enumerate_combinations():
        metric = LiuppaMetric(config)
        for _ in range(3):
            s1 = " ".join(rng.choices(words, k=rng.randint(1, 4)))
            s2 = " ".join(rng.choices(words, k=rng.randint(1, 4)))
            assert metric(s1, s2) == liuppa_score(config, s1, s2)


def test_token_renaming_invariance():
    # renaming tokens to other words that keep every pairwise mu1 score
    # (here: all exact-or-unrelated) leaves the score unchanged
    config = HybridConfig(2, 1)
    a = liuppa_score(config, "xxxx yyyy zzzz", "zzzz yyyy wwww")
    b = liuppa_score(config, "pqrs tuvw abcd", "abcd tuvw efgh")
    assert a == b


@pytest.mark.parametrize("config", [c for c in enumerate_combinations() if c.mu2 != MetricCode.MONGE_ELKAN])
def test_symmetry_on_golden_pairs(config):
    metric = LiuppaMetric(config)
    for pair in golden_dataset():
        assert metric(pair.s1, pair.s2) == pytest.approx(metric(pair.s2, pair.s1), abs=1e-12)
