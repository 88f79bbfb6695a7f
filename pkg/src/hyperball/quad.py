"""Numerical integration: semi-infinite spectral integrals (smooth and
oscillatory), ball integrals against the weighted measure, and normalized
sphere integrals.

Integrands for integrate_halfline are callables on a positive lambda array
returning a complex array (the endpoint 0 is never sampled).  Fields for the
ball/sphere rules follow the geometry module's convention: f(pts) with pts of
shape (..., n).

Determinism: panel layouts depend only on the QuadratureSpec (the oscillatory
path is non-adaptive by construction; the smooth path refines panels in a
fixed worst-first, leftmost-tie order and accumulates with compensated
summation), so repeated runs are bit-identical and finite-difference stencils
built around one spec share correlated quadrature errors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.special import roots_jacobi

__all__ = [
    "QuadratureSpec",
    "HalflineResult",
    "integrate_halfline",
    "integrate_ball",
    "integrate_sphere",
    "ball_grid",
    "sphere_grid",
]


@dataclass(frozen=True)
class QuadratureSpec:
    """Truncation, panel, tolerance and oscillation policy for the dlambda
    integrals.

    oscillation_period, when set, switches integrate_halfline to half-period
    panels plus Euler-accelerated tail summation (required for conditionally
    convergent integrands); accel_terms is the number of averaging stages.
    """

    rel_tol: float = 1e-8
    abs_tol: float = 1e-12
    lambda_max: float = 60.0
    panel_points: int = 32
    oscillation_period: Optional[float] = None
    accel_terms: int = 12

    def __post_init__(self):
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.panel_points < 4:
            raise ValueError("panel_points must be >= 4")
        if self.lambda_max <= 0:
            raise ValueError("lambda_max must be positive")
        if self.oscillation_period is not None and self.oscillation_period <= 0:
            raise ValueError("oscillation_period must be positive")
        if self.accel_terms < 1:
            raise ValueError("accel_terms must be >= 1")


@dataclass(frozen=True)
class HalflineResult:
    value: complex
    nodes: int
    tail_estimate: float
    converged: bool
    message: str = ""

    def __complex__(self) -> complex:
        return self.value


_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gauss_legendre(m: int):
    if m not in _GL_CACHE:
        _GL_CACHE[m] = np.polynomial.legendre.leggauss(m)
    return _GL_CACHE[m]


def _panel_integral(f, a: float, b: float, m: int) -> complex:
    xs, ws = _gauss_legendre(m)
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    vals = np.asarray(f(mid + half * xs), dtype=complex)
    if np.any(~np.isfinite(vals)):
        bad = mid + half * xs[np.where(~np.isfinite(vals))[0][0]]
        raise FloatingPointError(f"integrand returned a non-finite value near lambda={bad:.6g}")
    return complex(half * np.sum(ws * vals))


def _fsum_complex(values) -> complex:
    return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))


def _smooth_halfline(f, spec: QuadratureSpec) -> HalflineResult:
    m = spec.panel_points
    # initial split biased toward the origin where the weight varies fastest
    edges = [0.0]
    step = spec.lambda_max / 8.0
    for k in range(8):
        edges.append(edges[-1] + step)
    panels = [(edges[i], edges[i + 1]) for i in range(8)]
    vals = [_panel_integral(f, a, b, m) for a, b in panels]
    halves = {}
    nodes = 8 * m
    for _ in range(64):
        total = _fsum_complex(vals)
        errs = []
        for i, (a, b) in enumerate(panels):
            if (a, b) not in halves:
                c = 0.5 * (a + b)
                v1 = _panel_integral(f, a, c, m)
                v2 = _panel_integral(f, c, b, m)
                nodes += 2 * m
                halves[(a, b)] = (v1, v2)
            v1, v2 = halves[(a, b)]
            errs.append(abs((v1 + v2) - vals[i]))
        worst = int(np.argmax(errs))
        est = math.fsum(errs)
        if est <= spec.rel_tol * abs(total) + spec.abs_tol:
            refined = _fsum_complex(v1 + v2 for v1, v2 in (halves[p] for p in panels))
            return HalflineResult(value=refined, nodes=nodes, tail_estimate=est, converged=True)
        a, b = panels[worst]
        c = 0.5 * (a + b)
        v1, v2 = halves.pop((a, b))
        panels[worst : worst + 1] = [(a, c), (c, b)]
        vals[worst : worst + 1] = [v1, v2]
    total = _fsum_complex(vals)
    return HalflineResult(
        value=total,
        nodes=nodes,
        tail_estimate=est,
        converged=False,
        message="smooth halfline refinement did not reach tolerance",
    )


def _oscillatory_halfline(f, spec: QuadratureSpec) -> HalflineResult:
    m = spec.panel_points
    h = 0.5 * spec.oscillation_period
    # head: fixed half-period panels covering [0, lambda_max]; the first
    # panel is refined geometrically toward 0 so integrable endpoint
    # behavior (e.g. sqrt(lambda)) does not poison the Gauss rule
    n_head = max(1, int(math.ceil(spec.lambda_max / h)))
    head_edges = h * np.arange(n_head + 1)
    first = [0.0] + [h * 2.0 ** (-k) for k in range(40, -1, -1)]
    head_vals = [_panel_integral(f, first[i], first[i + 1], m) for i in range(len(first) - 1)]
    head_vals += [_panel_integral(f, head_edges[i], head_edges[i + 1], m) for i in range(1, n_head)]
    head = _fsum_complex(head_vals)
    nodes = (n_head + 41) * m
    # tail: Euler (iterated-averaging) acceleration of the half-period sums
    m_tail = 2 * spec.accel_terms + 4
    start = head_edges[-1]
    u = np.array(
        [_panel_integral(f, start + k * h, start + (k + 1) * h, m) for k in range(m_tail)],
        dtype=complex,
    )
    nodes += m_tail * m
    partial = np.cumsum(u)
    prev_row = partial.copy()
    last_two = [complex(prev_row[0])]
    for _ in range(m_tail - 1):
        prev_row = 0.5 * (prev_row[:-1] + prev_row[1:])
        last_two.append(complex(prev_row[0]))
    tail = complex(prev_row[0])
    tail_err = abs(last_two[-1] - last_two[-2])
    value = head + tail
    converged = tail_err <= spec.rel_tol * abs(value) + 10.0 * spec.abs_tol
    return HalflineResult(
        value=value,
        nodes=nodes,
        tail_estimate=tail_err,
        converged=converged,
        message="" if converged else "oscillatory tail acceleration below requested tolerance",
    )


def integrate_halfline(f: Callable[[np.ndarray], np.ndarray], spec: QuadratureSpec) -> HalflineResult:
    """Integral of f over (0, infinity), truncated/accelerated per the spec.

    Smooth path (default): adaptive bisection of Gauss-Legendre panels on
    (0, lambda_max].  Oscillatory path (oscillation_period set): half-period
    aligned panels on the head interval plus iterated-averaging acceleration
    of the signed half-period tail sums; handles conditionally convergent
    integrands.  Diagnostics report node count, tail estimate and a
    convergence flag; non-finite integrand values raise with the location.
    """
    if spec.oscillation_period is None:
        return _smooth_halfline(f, spec)
    return _oscillatory_halfline(f, spec)


# ----------------------------------------------------------------- ball


def ball_grid(p, radial: int = 64, angular: int = 128, boundary_growth: int = 0):
    """Quadrature nodes/weights for integrate_ball; see that function.

    Returns (points, weights) with points of shape (npts, n): the weights
    integrate smooth f against (1-|z|^2)^{nu-n-1} dm(z) once f is multiplied
    by (1-|z|^2)^{boundary_growth} (done inside integrate_ball).
    """
    n, nu = p.n, p.nu
    a_exp = nu - n - 1 - boundary_growth
    if a_exp <= -1:
        raise ValueError("boundary_growth too large for the weight exponent")
    xs, wr = roots_jacobi(radial, a_exp, n - 1)
    u = 0.5 * (xs + 1.0)
    wu = wr * 0.5 ** (a_exp + (n - 1)) * 0.5
    r = np.sqrt(u)
    if n == 1:
        theta = 2.0 * np.pi * np.arange(angular) / angular
        circ = np.exp(1j * theta)
        pts = (r[:, None] * circ[None, :]).reshape(-1, 1)
        # dm = (1/2) du dtheta
        wts = np.repeat(0.5 * wu * (2.0 * np.pi / angular), angular)
        return pts, wts
    if n == 2:
        s_nodes, s_wts = sphere_grid(2, angular)
        pts = (r[:, None, None] * s_nodes[None, :, :]).reshape(-1, 2)
        # dm = (1/2) u du dOmega, |S^3| = 2 pi^2; the u factor sits in the
        # Jacobi weight and sphere_grid averages over the normalized measure
        wts = (0.5 * wu[:, None] * (2.0 * np.pi**2) * s_wts[None, :]).reshape(-1)
        return pts, wts
    raise ValueError("ball quadrature supports n in {1, 2}")


def integrate_ball(p, f, grid=(64, 128), boundary_growth: int = 0) -> complex:
    """Integral of f over the ball against dmu_nu = (1-|z|^2)^{nu-n-1} dm(z).

    Polar factorization: Gauss-Jacobi nodes in r^2 absorbing the radial
    weight, times a trapezoid circle rule (n=1) or a product rule on S^3
    (n=2).  boundary_growth = g absorbs an integrand growing like
    (1-|z|^2)^{-g} into the radial weight exactly (used for products of
    higher projector kernels).
    """
    pts, wts = ball_grid(p, grid[0], grid[1], boundary_growth)
    vals = np.asarray(f(pts), dtype=complex)
    if boundary_growth:
        vals = vals * (1.0 - np.sum(np.abs(pts) ** 2, axis=-1)) ** boundary_growth
    return complex(np.sum(wts * vals))


def sphere_grid(n: int, angular: int = 128):
    """Nodes/weights on S^{2n-1} for the NORMALIZED rotation-invariant
    measure (total mass 1).  Returns (points, weights), points (npts, n)."""
    if n == 1:
        theta = 2.0 * np.pi * np.arange(angular) / angular
        pts = np.exp(1j * theta)[:, None]
        wts = np.full(angular, 1.0 / angular)
        return pts, wts
    if n == 2:
        n_u = max(16, angular // 2)
        xs, ws = np.polynomial.legendre.leggauss(n_u)
        u = 0.5 * (xs + 1.0)  # u = |omega_1|^2, uniform on [0,1] for S^3
        wu = 0.5 * ws
        phi1 = 2.0 * np.pi * np.arange(angular) / angular
        phi2 = 2.0 * np.pi * np.arange(angular) / angular
        e1 = np.exp(1j * phi1)
        e2 = np.exp(1j * phi2)
        w1 = np.sqrt(u)[:, None, None] * e1[None, :, None] * np.ones_like(e2)[None, None, :]
        w2 = np.sqrt(1.0 - u)[:, None, None] * np.ones_like(e1)[None, :, None] * e2[None, None, :]
        pts = np.stack([w1.ravel(), w2.ravel()], axis=-1)
        wts = (wu[:, None, None] * np.full((1, angular, angular), 1.0 / angular**2)).ravel()
        return pts, wts
    raise ValueError("sphere quadrature supports n in {1, 2}")


def integrate_sphere(n: int, f, angular: int = 128) -> complex:
    """Mean of f over S^{2n-1} (normalized measure, total mass 1)."""
    pts, wts = sphere_grid(n, angular)
    vals = np.asarray(f(pts), dtype=complex)
    return complex(np.sum(wts * vals))
