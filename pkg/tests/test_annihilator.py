import math

import pytest

from heisenrep.annihilator import (
    AnnihilatorConfig, annihilate, annihilate_negative, build_block,
    choose_interval,
)
from heisenrep.errors import CapabilityError, ConfigurationError
from heisenrep.testfn import (
    CompactBump, GaussianPoly, Summed, exact_l1_norm, exact_l2_norm,
    exact_moment, support,
)

MOTHER = CompactBump(0.1, 0.9, 6)


def _config(K=4, epsilon=1e-2):
    return AnnihilatorConfig(K=K, epsilon=epsilon, a0=1.0001, mother=MOTHER)


def test_config_validation():
    with pytest.raises(ConfigurationError):
        AnnihilatorConfig(K=-1, epsilon=1e-2, a0=2.0, mother=MOTHER)
    with pytest.raises(ConfigurationError):
        AnnihilatorConfig(K=2, epsilon=0.0, a0=2.0, mother=MOTHER)
    with pytest.raises(ConfigurationError):
        AnnihilatorConfig(K=2, epsilon=1e-2, a0=0.5, mother=MOTHER)
    with pytest.raises(ConfigurationError):
        # support must sit inside (0, a0)
        AnnihilatorConfig(K=2, epsilon=1e-2, a0=2.0, mother=CompactBump(-1.0, 1.0, 6))
    with pytest.raises(CapabilityError):
        # p = 3 cannot supply 4 derivatives
        AnnihilatorConfig(K=4, epsilon=1e-2, a0=2.0, mother=CompactBump(0.1, 0.9, 3))
    with pytest.raises(ConfigurationError):
        # Gaussian mothers have unbounded support
        AnnihilatorConfig(K=2, epsilon=1e-2, a0=2.0,
                          mother=GaussianPoly(0.0, 1.0, (1.0,)))


def test_choose_interval_passes_both_conditions():
    cfg = _config()
    a1 = choose_interval(0, cfg.a0, -0.5, cfg)
    block = build_block(0, cfg.a0, a1, -0.5, cfg)
    assert block.norm_fk < block.norm_bound


def test_block_moment_identity_and_lower_orders():
    cfg = _config()
    lam = -0.3
    a1 = choose_interval(1, 2.0, lam, cfg)
    block = build_block(1, 2.0, a1, lam, cfg)
    assert abs(float(exact_moment(block.f_k, 1)) - lam) < 1e-8 * abs(lam)
    assert abs(float(exact_moment(block.f_k, 0))) < 1e-10 * exact_l1_norm(block.f_k)


def test_annihilate_end_to_end():
    cfg = _config()
    f, blocks, report = annihilate(cfg)
    assert len(blocks) == cfg.K + 1
    # disjoint increasing supports
    assert all(blocks[i].a_k1 <= blocks[i + 1].a_k for i in range(len(blocks) - 1))
    # all residual moments cancel
    assert max(report["moment_defects"]) < 1e-6
    # distance budget and the Pythagorean identity
    assert report["l2_distance"] < cfg.epsilon
    rss = math.sqrt(math.fsum(b.norm_fk ** 2 for b in blocks))
    assert abs(rss - report["l2_distance"]) <= 1e-15 * rss
    direct = exact_l2_norm(Summed(tuple(b.f_k for b in blocks if b.gamma_k != 0.0)))
    assert abs(direct - report["l2_distance"]) < 1e-12 * direct


def test_regression_anchors():
    # pinned once from the default configuration (K=4, eps=1e-2, p=6 mother)
    _, blocks, report = annihilate(_config())
    assert abs(blocks[-1].a_k1 / 17592186048519.0 - 1.0) < 1e-12
    assert abs(report["l2_distance"] / 5.536620604063098e-05 - 1.0) < 1e-8


def test_report_schema():
    _, _, report = annihilate(_config(K=2))
    assert set(report) == {"K", "epsilon", "I", "blocks", "moment_defects",
                           "l2_distance"}
    for entry in report["blocks"]:
        assert set(entry) == {"k", "a_k", "a_k1", "gamma_k", "lambda_k",
                              "norm_fk", "bound"}


def test_annihilate_negative_mirrors():
    cfg = _config(K=2)
    f_neg, blocks_neg, report = annihilate_negative(cfg)
    sup = support(f_neg)
    assert sup[-1][1] <= 0.0
    assert all(b.a_k1 <= 0.0 for b in blocks_neg)
    assert max(report["moment_defects"]) < 1e-6


def test_growth_cap_raises_clear_error():
    # a normalized mother with tiny epsilon forces blocks beyond float range
    with pytest.raises(ConfigurationError, match="enlarge epsilon"):
        annihilate(AnnihilatorConfig(K=6, epsilon=1e-9, a0=1.0001,
                                     mother=CompactBump(0.1, 0.9, 8)))
