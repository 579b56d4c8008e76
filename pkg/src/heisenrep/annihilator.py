"""Constructive moment annihilation for compactly supported functions.

Given a mother function g supported in (0, a0) with nonzero integral I and a
budget epsilon, append blocks f_k (k = 0..K) — scaled k-th derivatives of g
pushed to disjoint intervals (a_k, a_{k+1}) further and further right — such
that the sum f = g + f_0 + ... + f_K has vanishing moments of orders 0..K
while ||f - g|| < epsilon.  Block k annihilates the k-th moment of the
partial sum without disturbing moments below k (a k-th derivative of a
compact function kills all monomials of degree < k by parts).

All moments and norms are evaluated in closed form on the descriptor
algebra: the intervals grow too fast for any reasonable grid to hold them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import testfn
from .errors import CapabilityError, ConfigurationError
from .testfn import (
    Amplified, Mirrored, Scaled, Summed, TestFunction, Translated,
    derivative, exact_l1_norm, exact_l2_norm, exact_moment, support,
)


@dataclass(frozen=True)
class AnnihilatorConfig:
    K: int
    epsilon: float
    a0: float
    mother: TestFunction

    def __post_init__(self):
        if self.K < 0:
            raise ConfigurationError("K must be nonnegative")
        if not self.epsilon > 0:
            raise ConfigurationError("epsilon must be positive")
        if not self.a0 > 1:
            raise ConfigurationError("a0 must exceed 1")
        sup = support(self.mother)
        if not sup or sup[0][0] < 0 or sup[-1][1] > self.a0:
            raise ConfigurationError(
                f"mother support {sup} must lie inside (0, a0) = (0, {self.a0})"
            )
        if testfn.smoothness_budget(self.mother) < self.K:
            raise CapabilityError(
                f"mother smoothness budget {testfn.smoothness_budget(self.mother)} "
                f"cannot supply derivatives up to order {self.K}; "
                f"use a bump of order p >= {self.K + 1}"
            )


@dataclass(frozen=True)
class BlockRecord:
    k: int
    a_k: float
    a_k1: float
    gamma_k: float
    lambda_k: float
    f_k: TestFunction
    norm_fk: float
    norm_bound: float


def _norm_bound(k: int, a_k1: float, epsilon: float) -> float:
    return epsilon / (2.0 ** (k + 1) * a_k1 ** k)


def _gamma(k: int, lam: float, I: float, a0: float, h: float) -> float:
    return ((-1.0) ** k * lam) / (math.factorial(k) * I) * (a0 / h) ** (k + 1)


def _block_descriptor(k: int, a_k: float, h: float, gamma: float,
                      config: AnnihilatorConfig) -> TestFunction:
    # f_k(x) = gamma * g^(k)( a0 * (x - a_k) / h )
    rate = config.a0 / h
    return Amplified(Translated(Scaled(derivative(config.mother, k), rate), a_k), gamma)


def choose_interval(k: int, a_k: float, lambda_k: float,
                    config: AnnihilatorConfig, I: float | None = None) -> float:
    """Smallest a_{k+1} = a_k + 2^m passing the width inequality

        (a_{k+1} - a_k)^{k+3/2} / a_{k+1}^k
            > (|lambda| 2^{k+1} / (eps |I| k!)) * a0^{k+3/2} * ||g^(k)||

    and, belt and braces, the exact norm budget ||f_k|| < eps/(2^{k+1} a_{k+1}^k).
    The closed-form norm scaling behind the width inequality is checked
    directly because the two can disagree when the block is wider than a0.
    """
    if I is None:
        I = float(exact_moment(config.mother, 0))
    if lambda_k == 0.0:
        return a_k + 1.0
    gk_norm = exact_l2_norm(derivative(config.mother, k))
    # evaluate both conditions in log space: the widths can overflow any
    # float power long before the search terminates
    log_rhs = (math.log(abs(lambda_k)) + (k + 1) * math.log(2.0)
               - math.log(config.epsilon) - math.log(abs(I)) - math.lgamma(k + 1)
               + (k + 1.5) * math.log(config.a0) + math.log(gk_norm))
    log_gamma_fixed = (math.log(abs(lambda_k)) - math.lgamma(k + 1) - math.log(abs(I))
                       + (k + 1) * math.log(config.a0))
    # every later power of a_{k+1} (moments up to order K, the norm budget)
    # must stay inside float range; refuse configurations that cannot
    cap = 10.0 ** (250.0 / (config.K + 2))
    for m in range(0, 2048):
        log_h = m * math.log(2.0)
        h = 2.0 ** m
        a_k1 = a_k + h
        if a_k1 > cap:
            raise ConfigurationError(
                f"block {k}: interval endpoint {a_k1:.3e} exceeds the "
                f"workable range {cap:.3e}; enlarge epsilon*|I| or reduce K"
            )
        log_a_k1 = math.log(a_k1)
        width_ok = (k + 1.5) * log_h - k * log_a_k1 > log_rhs
        if width_ok:
            log_norm = (log_gamma_fixed - (k + 1) * log_h
                        + 0.5 * (log_h - math.log(config.a0)) + math.log(gk_norm))
            log_bound = (math.log(config.epsilon) - (k + 1) * math.log(2.0)
                         - k * log_a_k1)
            # small safety margin so the exact-arithmetic re-check in
            # build_block cannot flip on rounding
            if log_norm < log_bound - 1e-6:
                return a_k1
    raise ConfigurationError("interval search failed to terminate")


def build_block(k: int, a_k: float, a_k1: float, lambda_k: float,
                config: AnnihilatorConfig, I: float | None = None) -> BlockRecord:
    """Assemble f_k and verify its invariants in closed form:

    moments below k vanish; the k-th moment equals lambda_k (the closed-form
    identity int x^k f_k = (-1)^k k! I gamma_k (h/a0)^{k+1} collapses to
    lambda_k after substituting gamma_k); the L^2 norm respects the budget.
    """
    if I is None:
        I = float(exact_moment(config.mother, 0))
    h = a_k1 - a_k
    if h <= 0:
        raise ConfigurationError("a_{k+1} must exceed a_k")
    gamma = _gamma(k, lambda_k, I, config.a0, h)
    f_k = _block_descriptor(k, a_k, h, gamma, config)
    norm_fk = exact_l2_norm(f_k)
    bound = _norm_bound(k, a_k1, config.epsilon)
    if lambda_k != 0.0:
        closed_form = ((-1.0) ** k * math.factorial(k) * I * gamma * (h / config.a0) ** (k + 1))
        measured = exact_moment(f_k, k)
        rel = abs(measured - closed_form) / max(abs(closed_form), 1e-300)
        if rel > 1e-8:
            raise CapabilityError(
                f"block {k}: closed-form k-th moment {closed_form} vs exact "
                f"integration {measured} disagree (rel {rel:.3e})"
            )
        for i in range(k):
            scale = abs(gamma) * exact_l1_norm(
                Translated(Scaled(derivative(config.mother, k), config.a0 / h), a_k)
            ) * max(a_k1, 1.0) ** i
            if abs(exact_moment(f_k, i)) > 1e-10 * max(scale, 1e-300):
                raise CapabilityError(f"block {k}: moment of order {i} fails to vanish")
        if norm_fk >= bound:
            raise CapabilityError(
                f"block {k}: norm {norm_fk} violates budget {bound}"
            )
    return BlockRecord(k, a_k, a_k1, gamma, lambda_k, f_k, norm_fk, bound)


def _moment_defects(parts, K: int):
    """Relative residual moments of the assembled sum, orders 0..K.

    The scale is the sum of the absolute closed-form moments of the parts:
    the natural yardstick for how much cancellation each order achieved.
    """
    defects = []
    for n in range(K + 1):
        contributions = [complex(exact_moment(p, n)).real for p in parts]
        total = math.fsum(contributions)
        scale = math.fsum(abs(c) for c in contributions)
        defects.append(abs(total) / scale if scale > 0 else 0.0)
    return defects


def annihilate(config: AnnihilatorConfig):
    """Run the construction; returns (f, blocks, report)."""
    g = config.mother
    I = float(exact_moment(g, 0))
    if abs(I) < 1e-12 * exact_l1_norm(g):
        raise ConfigurationError("mother integral is (numerically) zero")

    blocks: list[BlockRecord] = []
    parts: list[TestFunction] = [g]
    a_k = config.a0
    for k in range(config.K + 1):
        residual = math.fsum(complex(exact_moment(p, k)).real for p in parts)
        lambda_k = -residual
        a_k1 = choose_interval(k, a_k, lambda_k, config, I=I)
        block = build_block(k, a_k, a_k1, lambda_k, config, I=I)
        blocks.append(block)
        if block.gamma_k != 0.0:
            parts.append(block.f_k)
        a_k = a_k1

    f = Summed(tuple(parts))
    l2_distance = math.sqrt(math.fsum(b.norm_fk ** 2 for b in blocks))
    report = {
        "K": config.K,
        "epsilon": config.epsilon,
        "I": I,
        "blocks": [
            {"k": b.k, "a_k": b.a_k, "a_k1": b.a_k1, "gamma_k": b.gamma_k,
             "lambda_k": b.lambda_k, "norm_fk": b.norm_fk, "bound": b.norm_bound}
            for b in blocks
        ],
        "moment_defects": _moment_defects(parts, config.K),
        "l2_distance": l2_distance,
    }
    return f, blocks, report


def annihilate_negative(config: AnnihilatorConfig):
    """Mirror image of :func:`annihilate`: support in (-a_{K+1}, 0)."""
    f, blocks, report = annihilate(config)
    f_neg = Mirrored(f)
    blocks_neg = [
        BlockRecord(b.k, -b.a_k1, -b.a_k, b.gamma_k, b.lambda_k,
                    Mirrored(b.f_k), b.norm_fk, b.norm_bound)
        for b in blocks
    ]
    return f_neg, blocks_neg, report
