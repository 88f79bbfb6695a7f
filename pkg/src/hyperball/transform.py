"""Poisson kernels, spherical functions, the boundary spherical kernel, and
the generalized Fourier analysis/synthesis pair on the weighted ball.

Conventions: the boundary sphere carries the normalized rotation-invariant
measure (total mass 1); the analysis transform pairs a compactly supported
field with the lambda-reflected Poisson kernel; synthesis applies the
inversion formula with the printed constants (the global normalization those
constants imply is measured, not assumed, by the verify module).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from hyperball.geometry import BallPoint, BoundaryPoint, bergman_distance, hermitian_inner
from hyperball.params import Parameters, discrete_spectrum
from hyperball.quad import QuadratureSpec, ball_grid, integrate_sphere, sphere_grid
from hyperball.specfun import gauss_2f1, plancherel_weight_grid

__all__ = [
    "HelgasonSample",
    "SupportError",
    "poisson_kernel",
    "poisson_kernel_grid",
    "spherical_function",
    "spherical_kernel",
    "spherical_kernel_quadrature",
    "fh_forward",
    "fh_inverse",
]


class SupportError(ValueError):
    """Field fails the compact-support precondition of the analysis transform."""


@dataclass(frozen=True)
class HelgasonSample:
    """One sample of the transformed field at (lambda, omega)."""

    lam: float
    omega: BoundaryPoint
    value: complex

    def __post_init__(self):
        if not np.isfinite(self.value):
            raise ValueError("HelgasonSample value must be finite")


def poisson_kernel(p: Parameters, lam, z: BallPoint, omega: BoundaryPoint) -> complex:
    """P_lambda(z, omega) =
    [(1-|z|^2)/|1-<z,omega>|^2]^{(i lam + n - nu)/2} (1-<z,omega>)^{-nu}.

    Principal branches throughout; the first base is positive and the second
    has positive real part on the ball.
    """
    vals = poisson_kernel_grid(p, lam, z.z[None, :], omega.omega)
    return complex(vals[0])


def poisson_kernel_grid(p: Parameters, lam, pts: np.ndarray, omega: np.ndarray) -> np.ndarray:
    """Vectorized Poisson kernel over ball points pts (shape (..., n))."""
    lam = complex(lam)
    zw = np.sum(pts * np.conj(omega), axis=-1)
    base = 1.0 - zw
    ratio = (1.0 - np.sum(np.abs(pts) ** 2, axis=-1)) / np.abs(base) ** 2
    return ratio ** ((1j * lam + p.n - p.nu) / 2.0) * base ** (-p.nu)


def spherical_function(p: Parameters, lam, z: BallPoint) -> complex:
    """The radial eigenfunction
    (1-|z|^2)^{(-nu+n-i lam)/2} 2F1((-i lam+n+nu)/2, (-i lam+n-nu)/2; n; |z|^2)."""
    lam = complex(lam)
    n, nu = p.n, p.nu
    r2 = float(np.sum(np.abs(z.z) ** 2))
    pref = (1.0 - r2) ** ((-nu + n - 1j * lam) / 2.0)
    return pref * gauss_2f1((-1j * lam + n + nu) / 2.0, (-1j * lam + n - nu) / 2.0, float(n), r2)


def spherical_kernel(p: Parameters, lam, z: BallPoint, w: BallPoint) -> complex:
    """Closed form of the boundary-paired kernel:
    (1-<z,w>)^{-nu} 2F1((i lam+n-nu)/2, (-i lam+n-nu)/2; n; -sinh^2 d(z,w))."""
    lam = complex(lam)
    n, nu = p.n, p.nu
    d = bergman_distance(z, w)
    pref = (1.0 - hermitian_inner(z, w)) ** (-nu)
    sh2 = math.sinh(d) ** 2
    return pref * gauss_2f1((1j * lam + n - nu) / 2.0, (-1j * lam + n - nu) / 2.0, float(n), -sh2)


def _poisson_over_sphere(p: Parameters, lam, zv: np.ndarray, omegas: np.ndarray) -> np.ndarray:
    """P_lambda(z, omega_k) over an array of boundary points (shape (m, n))."""
    lam = complex(lam)
    base = 1.0 - omegas.conj() @ zv
    ratio = (1.0 - float(np.sum(np.abs(zv) ** 2))) / np.abs(base) ** 2
    return ratio ** ((1j * lam + p.n - p.nu) / 2.0) * base ** (-p.nu)


def spherical_kernel_quadrature(p: Parameters, lam: float, z: BallPoint, w: BallPoint, angular: int = 256) -> complex:
    """Same kernel by direct boundary quadrature of
    P_lambda(z, .) conj(P_lambda(w, .)); n in {1, 2}."""
    pts, wts = sphere_grid(p.n, angular)
    valz = _poisson_over_sphere(p, lam, z.z, pts)
    valw = _poisson_over_sphere(p, lam, w.z, pts)
    return complex(np.sum(wts * valz * np.conj(valw)))


def fh_forward(p: Parameters, F, lam: float, omega: BoundaryPoint, grid=(64, 128)) -> complex:
    """Analysis transform: integral of F(z) P_{-lambda}(z, omega) dmu(z).

    F must be (numerically) supported away from the boundary; the outermost
    radial ring of the quadrature grid is checked and a SupportError raised
    if F is not negligible there.
    """
    pts, wts = ball_grid(p, grid[0], grid[1])
    vals = np.asarray(F(pts), dtype=complex)
    radii = np.sum(np.abs(pts) ** 2, axis=-1)
    outer = radii >= np.max(radii) - 1e-12
    scale = float(np.max(np.abs(vals))) if np.any(np.abs(vals) > 0) else 0.0
    if scale > 0 and float(np.max(np.abs(vals[outer]))) > 1e-10 * scale:
        raise SupportError("field is not negligible on the outermost quadrature ring")
    pk = poisson_kernel_grid(p, -lam, pts, omega.omega)
    return complex(np.sum(wts * vals * pk))


def _lambda_trapezoid_weights(lams: np.ndarray) -> np.ndarray:
    w = np.zeros_like(lams)
    w[1:-1] = 0.5 * (lams[2:] - lams[:-2])
    w[0] = 0.5 * (lams[1] - lams[0])
    w[-1] = 0.5 * (lams[-1] - lams[-2])
    return w


def fh_inverse(
    p: Parameters,
    lams: np.ndarray,
    omegas: list[BoundaryPoint],
    samples: np.ndarray,
    atom_samples: dict[int, np.ndarray],
    z: BallPoint,
    spec: QuadratureSpec | None = None,
) -> complex:
    """Synthesis at z from samples of the transform.

    samples[i, k] is the transform at (lams[i], omegas[k]); atom_samples[j][k]
    the transform at the j-th atom's lambda.  Continuous part: even
    symmetrization over lambda gives twice the [0, lambda_max] integral, here
    a trapezoid rule on the given grid; sphere integrals are means over the
    omega grid.  The printed global constants are used verbatim.
    """
    n, nu = p.n, p.nu
    lams = np.asarray(lams, dtype=float)
    if len(omegas) == 0 or samples.shape != (len(lams), len(omegas)):
        raise ValueError("samples must have shape (len(lams), len(omegas))")
    if len(lams) >= 2:
        gap = float(np.max(np.diff(lams)))
        if gap > math.pi / 4.0:
            raise ValueError(f"lambda grid spacing {gap:.3g} too coarse for synthesis")
    wlam = _lambda_trapezoid_weights(lams)
    weight = plancherel_weight_grid(p, lams)
    omega_arr = np.stack([om.omega for om in omegas])
    pk = np.stack([_poisson_over_sphere(p, lam, z.z, omega_arr) for lam in lams])
    sphere_mean = np.mean(samples * pk, axis=1)
    const = 0.25 * math.gamma(n) / (2.0 ** (2 * (nu - n)) * math.pi ** (n + 1))
    continuous = const * 2.0 * complex(np.sum(wlam * weight * sphere_mean))
    discrete = 0.0 + 0.0j
    for atom in discrete_spectrum(p):
        if atom.j not in atom_samples:
            continue
        vals = atom_samples[atom.j]
        pkj = _poisson_over_sphere(p, atom.lambda_j, z.z, omega_arr)
        discrete += atom.c_j * complex(np.mean(vals * pkj))
    return continuous + discrete
