import numpy as np
import pytest

from heisenrep import (
    ConfigurationError, SampledFunction, dual_grid, fourier, hilbert,
    inverse_fourier, make_grid, norm, proj_hardy,
)
from heisenrep.testfn import GaussianPoly, sample

GRID = make_grid(32.0, 4096)


def _gauss(width=1.0):
    return sample(GaussianPoly(0.0, width, (1.0,)), GRID)


def _random(seed=0, band=10.0):
    rng = np.random.default_rng(seed)
    dg = dual_grid(GRID)
    spec = np.where(np.abs(dg.points) < band,
                    rng.standard_normal(GRID.size) + 1j * rng.standard_normal(GRID.size),
                    0.0)
    return inverse_fourier(SampledFunction(dg, spec))


def test_gaussian_is_fixed_point():
    fhat = fourier(_gauss())
    assert np.max(np.abs(fhat.values - np.exp(-fhat.grid.points ** 2 / 2))) < 1e-12


def test_unitary_and_roundtrip():
    f = _random()
    assert abs(norm(fourier(f)) - norm(f)) < 1e-13 * norm(f)
    assert norm(inverse_fourier(fourier(f)) - f) < 1e-13 * norm(f)


def test_double_transform_is_parity():
    f = _random(1)
    ff = fourier(fourier(f))
    # f(-x) on the grid: index j -> (N - j) mod N
    n = GRID.size
    mirrored = f.values[(-np.arange(n)) % n]
    assert np.max(np.abs(ff.values - mirrored)) < 1e-12 * np.max(np.abs(f.values))


def test_translation_modulation_duality():
    f = _random(2)
    a = 8 * np.pi / GRID.half_width  # whole number of frequency bins
    mod = SampledFunction(GRID, np.exp(1j * a * GRID.points) * f.values)
    assert norm(fourier(mod) - SampledFunction(
        dual_grid(GRID), np.roll(fourier(f).values, 8))) < 1e-12 * norm(f)


def test_hilbert_periodized_oracle():
    # sum_m 1/(x - i + 2Lm) = (pi/2L) cot(pi (x-i)/(2L)); its imaginary part
    # is the periodization of the Poisson kernel 1/(1+x^2) and its real part
    # the periodization of the conjugate kernel x/(1+x^2)
    L = GRID.half_width
    z = (np.pi / (2 * L)) / np.tan(np.pi * (GRID.points - 1j) / (2 * L))
    f = SampledFunction(GRID, z.imag)
    target = SampledFunction(GRID, z.real)
    assert norm(hilbert(f, "multiplier") - target) < 1e-12 * norm(target)


def test_hilbert_pv_lorentzian():
    f = SampledFunction(GRID, 1.0 / (1.0 + GRID.points ** 2))
    target = SampledFunction(GRID, GRID.points / (1.0 + GRID.points ** 2))
    # the quadrature rule is low order; 1e-2 is its honest accuracy here
    assert norm(hilbert(f, "principal_value") - target) < 1e-2 * norm(target)


def test_hilbert_gaussian_sign():
    # H maps even to odd with positive slope at 0 under the -i*sgn convention
    h = hilbert(_gauss(), "multiplier")
    mid = GRID.size // 2
    assert h.values.real[mid + 8] > 0.0
    assert h.values.real[mid - 8] < 0.0


def test_hilbert_unknown_method():
    with pytest.raises(ConfigurationError):
        hilbert(_gauss(), "cauchy")


def test_hardy_projection_algebra():
    f = _random(3)
    plus = proj_hardy(f, "plus")
    minus = proj_hardy(f, "minus")
    assert norm(plus + minus - f) < 1e-13 * norm(f)
    # the ranges are orthogonal on mean-free inputs; the zero-frequency bin
    # belongs half to each projection and would otherwise contribute
    from heisenrep import inner
    from heisenrep.heisenberg import generator_apply
    mf = generator_apply("D", f)
    assert abs(inner(proj_hardy(mf, "plus"), proj_hardy(mf, "minus"))) \
        < 1e-13 * norm(mf) ** 2


def test_hardy_projects_spectrum():
    f = _random(4)
    spec = fourier(proj_hardy(f, "plus"))
    y = spec.grid.points
    assert np.max(np.abs(spec.values[y < 0])) < 1e-13 * np.max(np.abs(spec.values))


def test_hardy_plus_is_i_hilbert_combination():
    # P+- = (I +- iH)/2 on mean-free functions
    f = _random(5)
    h = hilbert(f, "multiplier")
    lhs = proj_hardy(f, "plus") - proj_hardy(f, "minus")
    assert norm(lhs - h * 1j) < 1e-12 * norm(f)
