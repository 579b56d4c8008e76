"""Weyl-Heisenberg group arithmetic and its unitary action on sampled functions.

Group law: (a, b, c)(alpha, beta, gamma) = (a+alpha, b+beta, c+gamma+a*beta);
the action is (U(xi) f)(x) = e^{i xi3} e^{i x xi2} f(x + xi1), so translation
is applied first and modulation second.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, PrecisionError
from .grid import SampledFunction, dual_grid
from .transforms import fourier, inverse_fourier

_SEMIGROUP_BASES = ("S1zero", "S1", "S2zero", "S2", "S3", "S4")


@dataclass(frozen=True)
class GroupElement:
    xi1: float
    xi2: float
    xi3: float

    def as_list(self):
        return [self.xi1, self.xi2, self.xi3]


@dataclass(frozen=True)
class LieElement:
    a: float
    b: float
    c: float


IDENTITY = GroupElement(0.0, 0.0, 0.0)
CHI1 = LieElement(1.0, 0.0, 0.0)
CHI2 = LieElement(0.0, 1.0, 0.0)
CHI3 = LieElement(0.0, 0.0, 1.0)


@dataclass(frozen=True)
class SemigroupId:
    base: str
    inverted: bool = False

    def __post_init__(self):
        if self.base not in _SEMIGROUP_BASES:
            raise ConfigurationError(
                f"unknown semigroup {self.base!r}; expected one of {_SEMIGROUP_BASES}"
            )


def multiply(xi: GroupElement, eta: GroupElement) -> GroupElement:
    return GroupElement(
        xi.xi1 + eta.xi1,
        xi.xi2 + eta.xi2,
        xi.xi3 + eta.xi3 + xi.xi1 * eta.xi2,
    )


def inverse(xi: GroupElement) -> GroupElement:
    return GroupElement(-xi.xi1, -xi.xi2, -xi.xi3 + xi.xi1 * xi.xi2)


def identity() -> GroupElement:
    return IDENTITY


def bracket(u: LieElement, v: LieElement) -> LieElement:
    return LieElement(0.0, 0.0, u.a * v.b - v.a * u.b)


def in_semigroup(xi: GroupElement, sid: SemigroupId) -> bool:
    """Exact membership predicate; inverse-flagged ids test inverse(xi)."""
    if sid.inverted:
        return in_semigroup(inverse(xi), SemigroupId(sid.base))
    x1, x2, x3 = xi.xi1, xi.xi2, xi.xi3
    if sid.base == "S1zero":
        return x1 >= 0 and x2 == 0
    if sid.base == "S1":
        return x1 >= 0
    if sid.base == "S2zero":
        return x1 == 0 and x2 >= 0
    if sid.base == "S2":
        return x2 >= 0
    if sid.base == "S3":
        return x1 >= 0 and x2 >= 0
    if sid.base == "S4":
        return x1 >= 0 and x2 >= 0 and x1 * x2 >= x3 >= 0
    raise ConfigurationError(f"unknown semigroup base {sid.base!r}")


# ---------------------------------------------------------------------------
# representation

def act(xi: GroupElement, f: SampledFunction, mode: str = "spectral") -> SampledFunction:
    """(U(xi) f)(x) = e^{i xi3} e^{i x xi2} f(x + xi1).

    spectral mode translates by a frequency-domain phase (any xi1, periodic
    wraparound, exact homomorphism); grid mode shifts samples by an integer
    number of cells with zero fill (exact support semantics) and demands
    xi1 be a multiple of the grid spacing.
    """
    x = f.grid.points
    if mode == "spectral":
        spec = fourier(f)
        y = dual_grid(f.grid).points
        shifted = inverse_fourier(
            SampledFunction(spec.grid, np.exp(1j * xi.xi1 * y) * spec.values)
        )
        vals = shifted.values
    elif mode == "grid":
        dx = f.grid.spacing
        m = xi.xi1 / dx
        m_round = round(m)
        if abs(m - m_round) > 1e-9:
            raise PrecisionError(
                f"grid-mode translation needs xi1 a multiple of spacing {dx}, got {xi.xi1}"
            )
        n = f.grid.size
        vals = np.zeros(n, dtype=complex)
        # f(x + xi1): values move toward lower indices for xi1 > 0
        if m_round >= 0:
            if m_round < n:
                vals[: n - m_round] = f.values[m_round:]
        else:
            if -m_round < n:
                vals[-m_round:] = f.values[: n + m_round]
    else:
        raise ConfigurationError(f"unknown act mode {mode!r}")
    phase = np.exp(1j * xi.xi3) * np.exp(1j * xi.xi2 * x)
    return SampledFunction(f.grid, phase * vals)


def generator_apply(gen: str, f: SampledFunction) -> SampledFunction:
    """Lie-algebra generators: M = i*x*, D = d/dx (spectral), C = i*identity."""
    if gen == "M":
        return SampledFunction(f.grid, 1j * f.grid.points * f.values)
    if gen == "D":
        spec = fourier(f)
        y = dual_grid(f.grid).points
        return inverse_fourier(SampledFunction(spec.grid, 1j * y * spec.values))
    if gen == "C":
        return SampledFunction(f.grid, 1j * f.values)
    raise ConfigurationError(f"unknown generator {gen!r}; expected 'M', 'D' or 'C'")


_GENERATOR_DIRECTION = {
    # one-parameter subgroups matched to their infinitesimal generators:
    # D <-> translations t*chi1, M <-> modulations t*chi2, C <-> phases t*chi3
    "D": lambda t: GroupElement(t, 0.0, 0.0),
    "M": lambda t: GroupElement(0.0, t, 0.0),
    "C": lambda t: GroupElement(0.0, 0.0, t),
}


def generator_convergence(gen: str, f: SampledFunction, t_list, n: int = 0):
    """Difference-quotient error curve ||((U(t chi) - I)/t - X) f||_n per t."""
    from .schwartz import seminorm_iter

    if gen not in _GENERATOR_DIRECTION:
        raise ConfigurationError(f"unknown generator {gen!r}")
    exact = generator_apply(gen, f)
    out = []
    for t in t_list:
        if not t > 0:
            raise ConfigurationError("t_list entries must be positive")
        quotient = (act(_GENERATOR_DIRECTION[gen](t), f, mode="spectral") - f) * (1.0 / t)
        out.append((t, seminorm_iter(quotient - exact, n)))
    return out


def norm_growth_check(xi: GroupElement, f: SampledFunction, n: int):
    """Returns (||U(xi) f||_n, (1 + xi1^2 + xi2^2)^{n/2} ||f||_n)."""
    from .schwartz import seminorm_iter

    lhs = seminorm_iter(act(xi, f, mode="spectral"), n)
    rhs = (1.0 + xi.xi1 ** 2 + xi.xi2 ** 2) ** (n / 2.0) * seminorm_iter(f, n)
    return lhs, rhs


def conjugate_by_fourier(xi: GroupElement) -> GroupElement:
    """F U(xi) F^{-1} = U((-xi2, xi1, xi3 - xi1*xi2))."""
    return GroupElement(-xi.xi2, xi.xi1, xi.xi3 - xi.xi1 * xi.xi2)


def random_element(rng: np.random.Generator, scale: float = 5.0) -> GroupElement:
    return GroupElement(*(rng.uniform(-scale, scale, size=3)))


def random_in_semigroup(rng: np.random.Generator, sid: SemigroupId,
                        scale: float = 5.0) -> GroupElement:
    """Rejection-free sampler of semigroup members (inverse-flag aware)."""
    if sid.inverted:
        return inverse(random_in_semigroup(rng, SemigroupId(sid.base), scale))
    x1 = rng.uniform(0.0, scale)
    x2 = rng.uniform(0.0, scale)
    x3 = rng.uniform(-scale, scale)
    base = sid.base
    if base == "S1zero":
        return GroupElement(x1, 0.0, x3)
    if base == "S1":
        return GroupElement(x1, rng.uniform(-scale, scale), x3)
    if base == "S2zero":
        return GroupElement(0.0, x2, x3)
    if base == "S2":
        return GroupElement(rng.uniform(-scale, scale), x2, x3)
    if base == "S3":
        return GroupElement(x1, x2, x3)
    if base == "S4":
        return GroupElement(x1, x2, rng.uniform(0.0, 1.0) * x1 * x2)
    raise ConfigurationError(f"unknown semigroup base {base!r}")


def semigroup_noninverse_witness(sid: SemigroupId) -> GroupElement:
    """A stored element of the semigroup whose inverse falls outside it."""
    witnesses = {
        "S1zero": GroupElement(1.0, 0.0, 0.0),
        "S1": GroupElement(1.0, 2.0, 3.0),
        "S2zero": GroupElement(0.0, 1.0, 0.0),
        "S2": GroupElement(1.0, 2.0, 3.0),
        "S3": GroupElement(1.0, 2.0, 3.0),
        "S4": GroupElement(1.0, 2.0, 1.0),
    }
    xi = witnesses[sid.base]
    if sid.inverted:
        xi = inverse(xi)
    return xi


def element_from_lie(v: LieElement, t: float = 1.0) -> GroupElement:
    """Straight-line parameterization t*v used by convergence diagnostics."""
    return GroupElement(t * v.a, t * v.b, t * v.c)


def frobenius_distance(xi: GroupElement, eta: GroupElement) -> float:
    return math.sqrt(
        (xi.xi1 - eta.xi1) ** 2 + (xi.xi2 - eta.xi2) ** 2 + (xi.xi3 - eta.xi3) ** 2
    )
