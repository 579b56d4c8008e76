"""Hardy-projected function pairs and half-line semigroup experiments.

An element is synthesized from two negatively supported, moment-vanishing
descriptors g, h as f = -i P+ g + i P- h.  Membership in the underlying
class is a *certificate*: exact support on (-inf, 0) plus moment defects
below a threshold up to a finite order — not the infinite condition.

Translations with xi1 >= 0 move support further left and leave every
vanishing moment intact, so the certificate survives; negative translations
and nonzero modulations break it, and the witness functions quantify by
how much.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import testfn
from .errors import ClassMembershipError, SemigroupDomainError
from .grid import GridSpec, SampledFunction, norm, restrict_halfline
from .heisenberg import GroupElement, SemigroupId, act, in_semigroup
from .schwartz import class_defects, moment_defect, n_defect, seminorm_iter
from .transforms import fourier, proj_hardy


def snap_to_grid(shift: float, grid: GridSpec) -> float:
    """Nearest multiple of the grid spacing; callers record the adjustment."""
    return round(shift / grid.spacing) * grid.spacing


def certify_nminus(desc, grid: GridSpec, max_moment: int = 4,
                   threshold: float = 1e-6) -> dict:
    """Certificate for the negatively supported vanishing-moment class.

    Requires: closed-form support inside (-L, 0]; exactly zero samples on
    x >= 0; relative moment defects below threshold for orders 0..max_moment.
    Returns the measured defects; raises ClassMembershipError naming the
    first failed requirement.
    """
    sup = testfn.support(desc)
    if not sup:
        raise ClassMembershipError("empty descriptor cannot be certified")
    lo = min(iv[0] for iv in sup)
    hi = max(iv[1] for iv in sup)
    if hi > 0:
        raise ClassMembershipError(f"support extends to x = {hi} > 0")
    if lo <= -grid.half_width:
        raise ClassMembershipError(
            f"support reaches x = {lo}, outside the grid window (-{grid.half_width}, 0]"
        )
    f = testfn.sample(desc, grid)
    nf = norm(f)
    if nf == 0.0:
        raise ClassMembershipError("descriptor samples to zero")
    support_plus = norm(restrict_halfline(f, "plus")) / nf
    if support_plus != 0.0:
        raise ClassMembershipError(f"samples leak onto x >= 0 (defect {support_plus})")
    defect = n_defect(f, max_moment)
    if defect >= threshold:
        raise ClassMembershipError(
            f"moment defect {defect:.3e} exceeds threshold {threshold:.1e} "
            f"at orders <= {max_moment}"
        )
    return {"support_plus": support_plus, "n_defect": defect}


@dataclass(frozen=True)
class PsiElement:
    g_desc: object
    h_desc: object
    grid: GridSpec
    samples: SampledFunction


def synthesize(g_desc, h_desc, grid: GridSpec, max_moment: int = 4,
               threshold: float = 1e-6) -> PsiElement:
    """f = -i P+ g + i P- h from two certified descriptors."""
    certify_nminus(g_desc, grid, max_moment, threshold)
    certify_nminus(h_desc, grid, max_moment, threshold)
    g = testfn.sample(g_desc, grid)
    h = testfn.sample(h_desc, grid)
    samples = proj_hardy(g, "plus") * (-1j) + proj_hardy(h, "minus") * 1j
    return PsiElement(g_desc, h_desc, grid, samples)


def coincidence_defect(desc, grid: GridSpec) -> float:
    """|| Q+ (-i P+ u - i P- u) || / ||u|| for a negatively supported u.

    Since -iP+ - iP- = -i * identity, the quantity is exactly the plus-side
    mass of u itself; certified descriptors give machine zero.
    """
    u = testfn.sample(desc, grid)
    combined = proj_hardy(u, "plus") * (-1j) + proj_hardy(u, "minus") * (-1j)
    return norm(restrict_halfline(combined, "plus")) / norm(u)


def act_psi(xi: GroupElement, psi: PsiElement, max_moment: int = 4,
            threshold: float = 1e-6):
    """Translate/re-phase a certified pair by xi = (xi1, 0, xi3), xi1 >= 0.

    xi1 is snapped to the grid so support semantics stay exact; returns the
    new element together with the snapped group parameter.  Elements outside
    the semigroup are refused — measure the failure with invariance_witness.
    """
    if not in_semigroup(xi, SemigroupId("S1zero")):
        raise SemigroupDomainError(
            f"({xi.xi1}, {xi.xi2}, {xi.xi3}) lies outside the xi1>=0, xi2=0 "
            "semigroup; use invariance_witness to quantify the breakage"
        )
    xi1 = snap_to_grid(xi.xi1, psi.grid)
    snapped = GroupElement(xi1, 0.0, xi.xi3)
    phase = complex(np.exp(1j * xi.xi3))
    # (U(xi) u)(x) = e^{i xi3} u(x + xi1): support moves left by xi1
    g_new = testfn.Amplified(testfn.Translated(psi.g_desc, -xi1), phase)
    h_new = testfn.Amplified(testfn.Translated(psi.h_desc, -xi1), phase)
    return synthesize(g_new, h_new, psi.grid, max_moment, threshold), snapped


def invariance_witness(xi: GroupElement, psi: PsiElement) -> float:
    """How badly U(xi) breaks the certificate of psi's g component.

    xi1 < 0: plus-side support mass of the translated g (grid translation).
    xi2 != 0: relative order-0 moment defect of e^{i x xi2} g.
    xi in the invariant semigroup: the (tiny) order-0 defect after acting.
    """
    g = testfn.sample(psi.g_desc, psi.grid)
    if xi.xi1 < 0:
        xi1 = snap_to_grid(xi.xi1, psi.grid)
        moved = act(GroupElement(xi1, 0.0, 0.0), g, mode="grid")
        return norm(restrict_halfline(moved, "plus")) / norm(g)
    if xi.xi2 != 0:
        modulated = SampledFunction(
            psi.grid, np.exp(1j * xi.xi2 * psi.grid.points) * g.values
        )
        return moment_defect(modulated, 0)
    xi1 = snap_to_grid(xi.xi1, psi.grid)
    moved = act(GroupElement(xi1, 0.0, xi.xi3), g, mode="grid")
    return moment_defect(moved, 0)


# ---------------------------------------------------------------------------
# Fourier-conjugate construction

def tilde_synthesize(g_desc, h_desc, grid: GridSpec, max_moment: int = 4,
                     threshold: float = 1e-6) -> SampledFunction:
    """phi(y) = -(i/2)(1 + sgn y) ghat(y) + (i/2)(1 - sgn y) hhat(y).

    Lives on the dual grid; by construction it equals the Fourier transform
    of the direct synthesis, so the two routes cross-check each other.
    """
    certify_nminus(g_desc, grid, max_moment, threshold)
    certify_nminus(h_desc, grid, max_moment, threshold)
    ghat = fourier(testfn.sample(g_desc, grid))
    hhat = fourier(testfn.sample(h_desc, grid))
    s = np.sign(ghat.grid.points)
    vals = -0.5j * (1.0 + s) * ghat.values + 0.5j * (1.0 - s) * hhat.values
    return SampledFunction(ghat.grid, vals)


def tilde_norm(g_desc, h_desc, grid: GridSpec, n: int, max_order: int = 3) -> float:
    """Norm of phi through the transform pair: (||ghat||_n^2 + ||hhat||_n^2)^(1/2)."""
    ghat = fourier(testfn.sample(g_desc, grid))
    hhat = fourier(testfn.sample(h_desc, grid))
    return math.hypot(seminorm_iter(ghat, n, max_order), seminorm_iter(hhat, n, max_order))


# ---------------------------------------------------------------------------
# orbit and semigroup experiments

def orbit_probe(xi: GroupElement, u_desc, grid: GridSpec, max_moment: int = 4,
                threshold: float = 1e-6) -> dict:
    """class_defects of U(xi) u for a doubly certified u (moments vanish on
    both sides of the transform); shows which certificates survive which xi."""
    u = testfn.sample(u_desc, grid)
    base = class_defects(u, max_moment)
    if base["n_defect"] >= threshold or base["m_defect"] >= threshold:
        raise ClassMembershipError(
            f"probe input is not certified: n_defect={base['n_defect']:.3e}, "
            f"m_defect={base['m_defect']:.3e}"
        )
    return class_defects(act(xi, u, mode="spectral"), max_moment)


def halfline_contraction(xi: GroupElement, f: SampledFunction):
    """(||f||, ||Q+ U(xi) f||) for xi with inverse in the xi1 >= 0 semigroup.

    Such xi translate right (xi1 <= 0), keeping mass inside (0, inf), so the
    action contracts (indeed preserves) the half-line norm.
    """
    if not in_semigroup(xi, SemigroupId("S1", inverted=True)):
        raise SemigroupDomainError("xi must have its inverse in the xi1>=0 semigroup")
    minus_mass = norm(restrict_halfline(f, "minus"))
    if minus_mass != 0.0:
        raise ClassMembershipError("input carries mass on x < 0")
    return _contraction_pair(xi, f)


def contraction_contrast(xi: GroupElement, f: SampledFunction):
    """Same measurement without the semigroup guard: for xi1 > 0 part of the
    mass crosses into x < 0 and Q+ U(xi) genuinely loses norm."""
    return _contraction_pair(xi, f)


def _contraction_pair(xi: GroupElement, f: SampledFunction):
    xi1 = snap_to_grid(xi.xi1, f.grid)
    moved = act(GroupElement(xi1, xi.xi2, xi.xi3), f, mode="grid")
    return norm(f), norm(restrict_halfline(moved, "plus"))


def hardy_semigroup_step(f: SampledFunction, xi2: float,
                         pre_threshold: float = 1e-8) -> float:
    """Hardy-plus defect of e^{i x xi2} f for a Hardy-plus input.

    Nonnegative xi2 shifts the spectrum right and preserves the class;
    negative xi2 pushes spectral mass below zero and the defect records it.
    """
    before = norm(proj_hardy(f, "minus")) / norm(f)
    if before >= pre_threshold:
        raise ClassMembershipError(
            f"input Hardy-plus defect {before:.3e} exceeds {pre_threshold:.1e}"
        )
    modulated = SampledFunction(f.grid, np.exp(1j * xi2 * f.grid.points) * f.values)
    return norm(proj_hardy(modulated, "minus")) / norm(modulated)
