"""Tour of the transform layer: Fourier, Hilbert, and Hardy projections.

Run with:  python3 demos/01_transforms.py
"""

import numpy as np

from heisenrep import (
    SampledFunction, dual_grid, fourier, hilbert, inverse_fourier, make_grid,
    norm, proj_hardy,
)
from heisenrep.testfn import GaussianPoly, sample

grid = make_grid(32.0, 4096)
print(f"grid: {grid.size} points on [-{grid.half_width}, {grid.half_width}), "
      f"spacing {grid.spacing:.5f}")

# The transform maps samples on the grid to samples on its dual grid and is
# exactly unitary; the standard Gaussian is a fixed point.
gauss = sample(GaussianPoly(0.0, 1.0, (1.0,)), grid)
ghat = fourier(gauss)
print(f"Gaussian fixed point: max |fhat - exp(-y^2/2)| = "
      f"{np.max(np.abs(ghat.values - np.exp(-ghat.grid.points ** 2 / 2))):.3e}")
print(f"unitarity: | ||fhat|| - ||f|| | = {abs(norm(ghat) - norm(gauss)):.3e}")
print(f"roundtrip: ||F^-1 F f - f|| = {norm(inverse_fourier(ghat) - gauss):.3e}")

# Two Hilbert transform routes.  The multiplier route computes the transform
# of the *periodized* input; an exact oracle is the conjugate pair hidden in
# the periodized Poisson kernel sum 1/(x - i + 2Lm) = (pi/2L) cot(...).
L = grid.half_width
z = (np.pi / (2 * L)) / np.tan(np.pi * (grid.points - 1j) / (2 * L))
periodized_poisson = SampledFunction(grid, z.imag)
conjugate = SampledFunction(grid, z.real)
err = norm(hilbert(periodized_poisson, "multiplier") - conjugate) / norm(conjugate)
print(f"multiplier vs periodized oracle: rel err {err:.3e}")

# The principal-value quadrature approximates the *line* kernel instead.
lorentzian = SampledFunction(grid, 1.0 / (1.0 + grid.points ** 2))
target = SampledFunction(grid, grid.points / (1.0 + grid.points ** 2))
err_pv = norm(hilbert(lorentzian, "principal_value") - target) / norm(target)
err_gap = norm(hilbert(lorentzian, "multiplier")
               - hilbert(lorentzian, "principal_value")) / norm(lorentzian)
print(f"PV quadrature vs x/(1+x^2): rel err {err_pv:.3e}")
print(f"multiplier vs PV gap on 1/(1+x^2): {err_gap:.3e} "
      "(periodization of a mean-carrying input; shrinks like 1/sqrt(L))")

# Hardy projections split the spectrum at zero; a function supported on
# (1, 2) has a transform with (numerically) no upper-half-plane obstruction.
from heisenrep.testfn import CompactBump

bump = sample(CompactBump(1.0, 2.0, 4), make_grid(32.0, 8192))
defect = norm(proj_hardy(fourier(bump), "plus")) / norm(bump)
print(f"support on (1,2)  =>  ||P+ F f|| / ||f|| = {defect:.3e}")

spec = sample(CompactBump(0.5, 5.0, 6), dual_grid(grid))
f_plus = inverse_fourier(spec)
print(f"spectrum on (0.5,5)  =>  ||P- f|| / ||f|| = "
      f"{norm(proj_hardy(f_plus, 'minus')) / norm(f_plus):.3e}")
