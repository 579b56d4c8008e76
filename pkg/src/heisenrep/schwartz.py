"""Seminorm towers, moment functionals, and class-membership defects.

Two seminorm families are provided: the iterative L^2 tower
||f||_{n+1}^2 = ||Mf||_n^2 + ||Df||_n^2 + ||f||_n^2 built from the group
generators, and the sup family ||f||_{m,n} = sup_x |x^m f^(n)(x)| evaluated
on closed-form descriptors.  Their equivalence constants are not pinned
down anywhere usable, so no cross-family comparison is attempted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import optimize

from . import testfn
from .errors import CapabilityError
from .grid import SampledFunction, integrate, norm
from .heisenberg import generator_apply
from .transforms import inverse_fourier, proj_hardy


@dataclass(frozen=True)
class SeminormConfig:
    max_order: int = 3
    family: str = "iterative"


def seminorm_iter(f: SampledFunction, n: int, max_order: int = 3) -> float:
    """Iterative tower over the generators; ||f||_0 is the plain L^2 norm.

    Spectral differentiation amplifies rounding roughly by N per order,
    so orders beyond max_order are refused rather than silently noisy.
    """
    if n < 0:
        raise CapabilityError("seminorm order must be nonnegative")
    if n > max_order:
        raise CapabilityError(f"seminorm order {n} exceeds max_order {max_order}")
    return np.sqrt(_seminorm_sq(f, n))


def _seminorm_sq(f: SampledFunction, n: int) -> float:
    if n == 0:
        return norm(f) ** 2
    mf = generator_apply("M", f)
    df = generator_apply("D", f)
    return _seminorm_sq(mf, n - 1) + _seminorm_sq(df, n - 1) + _seminorm_sq(f, n - 1)


def seminorm_sup(tf, m: int, n: int, span: float = 64.0, samples: int = 8192) -> float:
    """sup_x |x^m * (d^n tf)(x)| via dense scan plus bounded local refinement."""
    d = testfn.derivative(tf, n)
    sup = testfn.support(d)
    if sup and sup[0][0] != -np.inf:
        lo = min(iv[0] for iv in sup)
        hi = max(iv[1] for iv in sup)
    else:
        lo, hi = -span, span
    xs = np.linspace(lo, hi, samples)
    vals = np.abs(xs ** m * testfn.evaluate(d, xs))
    j = int(np.argmax(vals))
    h = (hi - lo) / (samples - 1)
    a = max(lo, xs[j] - 2 * h)
    b = min(hi, xs[j] + 2 * h)
    res = optimize.minimize_scalar(
        lambda x: -abs(x ** m * complex(testfn.evaluate(d, x))),
        bounds=(a, b), method="bounded",
        options={"xatol": 1e-12},
    )
    return max(float(vals[j]), float(-res.fun))


def moment(f: SampledFunction, n: int) -> complex:
    """Grid moment integral of x^n f(x) dx."""
    x = f.grid.points
    return integrate(SampledFunction(f.grid, x ** n * f.values))


def moment_defect(f: SampledFunction, n: int) -> float:
    """|moment| relative to the L^1 mass of x^n f; 0/0 counts as 0."""
    x = f.grid.points
    scale = f.grid.spacing * float(np.sum(np.abs(x ** n * f.values)))
    m = abs(moment(f, n))
    if scale == 0.0:
        return 0.0
    return m / scale


def n_defect(f: SampledFunction, max_order: int = 8) -> float:
    """Worst relative moment defect over orders 0..max_order."""
    return max(moment_defect(f, k) for k in range(max_order + 1))


def class_defects(f: SampledFunction, max_order: int = 8) -> dict:
    """Membership defects for the vanishing-moment class, its Fourier image,
    the two Hardy classes, and the two half-line support classes.

    Every entry is a nonnegative number; zero means perfect membership at
    this resolution.  The Fourier-image defect reuses the moment diagnostic
    on the inverse transform (moments of f^ vanish iff derivatives of f
    vanish at the origin, and vice versa).
    """
    from .grid import restrict_halfline

    nf = norm(f)
    if nf == 0.0:
        zero = 0.0
        return {"n_defect": zero, "m_defect": zero, "hardy_plus": zero,
                "hardy_minus": zero, "support_plus": zero, "support_minus": zero}
    return {
        "n_defect": n_defect(f, max_order),
        "m_defect": n_defect(inverse_fourier(f), max_order),
        "hardy_plus": norm(proj_hardy(f, "minus")) / nf,
        "hardy_minus": norm(proj_hardy(f, "plus")) / nf,
        "support_plus": norm(restrict_halfline(f, "minus")) / nf,
        "support_minus": norm(restrict_halfline(f, "plus")) / nf,
    }


def psi_norm(g: SampledFunction, h: SampledFunction, n: int, max_order: int = 3) -> float:
    """Four-term norm of the pair (g, h) defining f = -i P+ g + i P- h:

        ||f||_n^2 = ||-iP+g||_n^2 + ||iP-h||_n^2 + ||iP-g||_n^2 + ||-iP+h||_n^2.
    """
    terms = [
        proj_hardy(g, "plus") * (-1j),
        proj_hardy(h, "minus") * 1j,
        proj_hardy(g, "minus") * 1j,
        proj_hardy(h, "plus") * (-1j),
    ]
    return float(np.sqrt(sum(seminorm_iter(t, n, max_order) ** 2 for t in terms)))
