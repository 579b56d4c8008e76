import numpy as np
import pytest

from heisenrep import (
    GroupElement, LieElement, SampledFunction, SemigroupId, act, bracket,
    dual_grid, inverse_fourier, make_grid, multiply, norm,
)
from heisenrep.errors import ConfigurationError, PrecisionError
from heisenrep.heisenberg import (
    CHI1, CHI2, CHI3, IDENTITY, conjugate_by_fourier, element_from_lie,
    generator_apply, generator_convergence, in_semigroup, inverse,
    norm_growth_check, random_in_semigroup, semigroup_noninverse_witness,
)
from heisenrep.testfn import GaussianPoly, sample

GRID = make_grid(32.0, 4096)
GAUSS = sample(GaussianPoly(0.0, 1.0, (1.0,)), GRID)


def test_group_law_and_inverse():
    xi = GroupElement(1.0, 2.0, 3.0)
    eta = GroupElement(0.5, -1.0, 2.0)
    assert multiply(xi, eta) == GroupElement(1.5, 1.0, 5.0 + 1.0 * (-1.0))
    assert multiply(xi, inverse(xi)) == IDENTITY
    assert multiply(inverse(xi), xi) == IDENTITY
    assert multiply(xi, IDENTITY) == xi


def test_noncommutativity():
    xi = GroupElement(1.0, 0.0, 0.0)
    eta = GroupElement(0.0, 1.0, 0.0)
    assert multiply(xi, eta) != multiply(eta, xi)


def test_bracket_table():
    assert bracket(CHI1, CHI2) == CHI3
    assert bracket(CHI2, CHI1) == LieElement(0.0, 0.0, -1.0)
    assert bracket(CHI1, CHI3) == LieElement(0.0, 0.0, 0.0)
    assert bracket(CHI2, CHI3) == LieElement(0.0, 0.0, 0.0)


def test_semigroup_membership_and_witnesses():
    rng = np.random.default_rng(0)
    for base in ("S1zero", "S1", "S2zero", "S2", "S3", "S4"):
        sid = SemigroupId(base)
        assert in_semigroup(IDENTITY, sid)
        for _ in range(50):
            a = random_in_semigroup(rng, sid)
            b = random_in_semigroup(rng, sid)
            assert in_semigroup(multiply(a, b), sid)
        w = semigroup_noninverse_witness(sid)
        assert in_semigroup(w, sid)
        assert not in_semigroup(inverse(w), sid)
        # inverse-flagged id mirrors membership
        assert in_semigroup(inverse(w), SemigroupId(base, inverted=True))


def test_semigroup_unknown_base():
    with pytest.raises(ConfigurationError):
        SemigroupId("S9")


def test_act_identity_and_unitarity():
    assert norm(act(IDENTITY, GAUSS) - GAUSS) < 1e-13
    xi = GroupElement(1.3, -0.7, 0.2)
    assert abs(norm(act(xi, GAUSS)) - norm(GAUSS)) < 1e-13 * norm(GAUSS)


def test_act_spectral_translation_matches_closed_form():
    xi = GroupElement(2.0, 0.0, 0.0)
    moved = act(xi, GAUSS)
    expected = np.exp(-((GRID.points + 2.0) ** 2) / 2.0)
    assert np.max(np.abs(moved.values - expected)) < 1e-10


def test_act_grid_mode_exact_support():
    xi = GroupElement(4 * GRID.spacing, 0.0, 0.0)
    moved = act(xi, GAUSS, mode="grid")
    assert np.array_equal(moved.values[:-4], GAUSS.values[4:])
    assert np.all(moved.values[-4:] == 0.0)
    with pytest.raises(PrecisionError):
        act(GroupElement(0.1 * GRID.spacing, 0.0, 0.0), GAUSS, mode="grid")


def test_homomorphism_spectral_commensurate_modulation():
    dy = np.pi / GRID.half_width
    rng = np.random.default_rng(1)
    f = GAUSS
    for _ in range(10):
        xi = GroupElement(float(rng.uniform(-4, 4)),
                          dy * int(rng.integers(-40, 41)), float(rng.uniform(-4, 4)))
        eta = GroupElement(float(rng.uniform(-4, 4)),
                           dy * int(rng.integers(-40, 41)), float(rng.uniform(-4, 4)))
        lhs = act(xi, act(eta, f))
        rhs = act(multiply(xi, eta), f)
        assert norm(lhs - rhs) < 1e-12 * norm(f)


def test_generator_commutator():
    dm = generator_apply("D", generator_apply("M", GAUSS))
    md = generator_apply("M", generator_apply("D", GAUSS))
    assert norm(dm - md - generator_apply("C", GAUSS)) < 1e-10 * norm(GAUSS)


def test_generator_convergence_first_order():
    for gen in ("M", "D", "C"):
        curve = generator_convergence(gen, GAUSS, [1e-2, 5e-3, 2.5e-3], n=0)
        errs = [e for _, e in curve]
        assert 1.8 <= errs[0] / errs[1] <= 2.2
        assert 1.8 <= errs[1] / errs[2] <= 2.2


def test_norm_growth_bound():
    rng = np.random.default_rng(2)
    for _ in range(20):
        xi = GroupElement(*(float(v) for v in rng.uniform(-5, 5, 3)))
        for n in range(3):
            lhs, rhs = norm_growth_check(xi, GAUSS, n)
            assert lhs <= rhs * (1.0 + 1e-10)


def test_conjugate_by_fourier_formula():
    assert conjugate_by_fourier(GroupElement(1.0, 0.0, 0.0)) == GroupElement(0.0, 1.0, 0.0)
    xi = GroupElement(1.0, 2.0, 3.0)
    assert conjugate_by_fourier(xi) == GroupElement(-2.0, 1.0, 1.0)


def test_element_from_lie():
    assert element_from_lie(CHI1, 0.5) == GroupElement(0.5, 0.0, 0.0)
