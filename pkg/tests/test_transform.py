import csv
import math
import os
import pathlib

import numpy as np
import pytest
from conftest import random_ball_point

from hyperball.geometry import ball_point, boundary_point
from hyperball.params import discrete_spectrum, new_parameters
from hyperball.quad import QuadratureSpec
from hyperball.transform import (
    HelgasonSample,
    SupportError,
    fh_forward,
    fh_inverse,
    poisson_kernel,
    spherical_function,
    spherical_kernel,
    spherical_kernel_quadrature,
)

P = new_parameters(1, 2.5)


def kernel_fixture(name, arg):
    env = os.environ.get("HYPERBALL_FIXTURES")
    if env:
        path = pathlib.Path(env) / "kernel_oracle.csv"
    else:
        import hyperball

        path = pathlib.Path(hyperball.__file__).parent / "fixtures" / "kernel_oracle.csv"
    for r in csv.DictReader(path.open()):
        if r["name"] == name and r["arg"] == arg:
            return complex(float(r["value_re"]), float(r["value_im"]))
    raise KeyError((name, arg))


def radial_bump(pts):
    """Gaussian bump with the smooth cutoff at |z| = 0.85."""
    u = np.sum(np.abs(pts) ** 2, axis=-1)
    r = np.sqrt(u)
    s = np.clip((r - 0.55) / 0.30, 0.0, 1.0 - 1e-14)
    cut = np.where(r <= 0.55, 1.0, np.where(r >= 0.85, 0.0, np.exp(1.0 - 1.0 / (1.0 - s**2))))
    return np.exp(-8.0 * u) * cut


# ----------------------------------------------------------------- poisson

def test_poisson_at_origin():
    for lam in (0.0, 1.3, -2.2, 1j):
        assert poisson_kernel(P, lam, ball_point(0.0), boundary_point(1.0)) == pytest.approx(1.0)


def test_poisson_fixture():
    got = poisson_kernel(P, 1.0, ball_point(0.5), boundary_point(1.0))
    assert got == pytest.approx(kernel_fixture("poisson", "lam=1"), rel=1e-13)


def test_poisson_eigenfunction():
    from hyperball.geometry import apply_delta_nu

    lam = 1.0
    omega = boundary_point(1.0)

    def field(pts):
        zw = np.sum(pts * np.conj(omega.omega), axis=-1)
        base = 1.0 - zw
        ratio = (1.0 - np.sum(np.abs(pts) ** 2, axis=-1)) / np.abs(base) ** 2
        return ratio ** ((1j * lam + P.n - P.nu) / 2.0) * base ** (-P.nu)

    z = ball_point(0.3 + 0.2j)
    got = apply_delta_nu(P, field, z, richardson=True)
    want = -(lam**2 + (P.n - P.nu) ** 2) * poisson_kernel(P, lam, z, omega)
    assert abs(got - want) / abs(want) < 1e-7


def test_poisson_entire_in_lambda():
    # Cauchy derivative on a small circle matches the finite difference
    z = ball_point(0.3 + 0.1j)
    omega = boundary_point(np.exp(0.7j))
    lam0 = 1.2
    rad = 0.3
    k = 16
    zeta = lam0 + rad * np.exp(2j * np.pi * np.arange(k) / k)
    vals = np.array([poisson_kernel(P, zz, z, omega) for zz in zeta])
    cauchy = np.mean(vals * (zeta - lam0) / rad**2 * rad) / 1.0
    # d/dlam via mean of f(zeta)/(zeta-lam)^2 * (zeta-lam) = mean(f * e^{-i th})/rad
    cauchy = np.mean(vals * np.exp(-2j * np.pi * np.arange(k) / k)) / rad * 2.0 / 2.0
    h = 1e-4
    fd = (poisson_kernel(P, lam0 + h, z, omega) - poisson_kernel(P, lam0 - h, z, omega)) / (2 * h)
    assert abs(cauchy - fd) < 1e-8 * max(1.0, abs(fd))


# ------------------------------------------------------- spherical function

def test_spherical_function_at_origin():
    assert spherical_function(P, 1.7, ball_point(0.0)) == pytest.approx(1.0)


def test_spherical_function_is_sphere_mean():
    from hyperball.quad import sphere_grid
    from hyperball.transform import _poisson_over_sphere

    for lam in (0.7, 2.3):
        for zz in (0.4, 0.3 + 0.35j):
            z = ball_point(zz)
            pts, wts = sphere_grid(1, 512)
            quad = np.sum(wts * _poisson_over_sphere(P, lam, z.z, pts))
            closed = spherical_function(P, lam, z)
            assert abs(quad - closed) < 1e-9 * abs(closed)


def test_spherical_function_radial():
    a = spherical_function(P, 1.3, ball_point(0.5))
    b = spherical_function(P, 1.3, ball_point(0.5j))
    c = spherical_function(P, 1.3, ball_point(0.3 + 0.4j))
    assert a == pytest.approx(b, rel=1e-12)
    assert a == pytest.approx(c, rel=1e-12)


# --------------------------------------------------------- spherical kernel

def test_spherical_kernel_at_origin():
    z = ball_point(0.0)
    assert spherical_kernel(P, 1.1, z, z) == pytest.approx(1.0)
    assert spherical_kernel_quadrature(P, 1.1, z, z) == pytest.approx(1.0)


def test_spherical_kernel_real_on_diagonal():
    z = ball_point(0.3 + 0.2j)
    v = spherical_kernel(P, 1.7, z, z)
    assert abs(v.imag) < 1e-13 * abs(v.real)


def test_spherical_kernel_even_in_lambda():
    z, w = ball_point(0.3), ball_point(0.1 + 0.25j)
    a = spherical_kernel(P, 2.1, z, w)
    b = spherical_kernel(P, -2.1, z, w)
    assert abs(a - b) < 1e-13 * abs(a)


def test_spherical_kernel_closed_vs_quadrature():
    rng = np.random.default_rng(20250808)
    worst = 0.0
    for _ in range(20):
        lam = 0.3 + 3.0 * rng.random()
        z = random_ball_point(rng, 1, 0.55)
        w = random_ball_point(rng, 1, 0.55)
        closed = spherical_kernel(P, lam, z, w)
        quad = spherical_kernel_quadrature(P, lam, z, w, angular=512)
        worst = max(worst, abs(closed - quad) / abs(closed))
    assert worst < 1e-8


@pytest.mark.parametrize("n,nu", [(2, 3.7)])
def test_spherical_kernel_closed_vs_quadrature_n2(n, nu):
    p = new_parameters(n, nu)
    rng = np.random.default_rng(7)
    for _ in range(3):
        lam = 0.5 + 2.0 * rng.random()
        z = random_ball_point(rng, n, 0.5)
        w = random_ball_point(rng, n, 0.5)
        closed = spherical_kernel(p, lam, z, w)
        quad = spherical_kernel_quadrature(p, lam, z, w, angular=96)
        assert abs(closed - quad) < 1e-7 * abs(closed)


# ------------------------------------------------------------- fh transform

def test_fh_forward_zero_field():
    got = fh_forward(P, lambda pts: np.zeros(pts.shape[0], complex), 1.0, boundary_point(1.0))
    assert got == 0.0


def test_fh_forward_linearity():
    f1 = lambda pts: radial_bump(pts)
    f2 = lambda pts: radial_bump(pts) * pts[..., 0]
    om = boundary_point(np.exp(0.3j))
    a = fh_forward(P, f1, 0.9, om)
    b = fh_forward(P, f2, 0.9, om)
    both = fh_forward(P, lambda pts: f1(pts) + f2(pts), 0.9, om)
    assert both == pytest.approx(a + b, rel=1e-12)


def test_fh_forward_support_error():
    with pytest.raises(SupportError):
        fh_forward(P, lambda pts: np.ones(pts.shape[0], complex), 1.0, boundary_point(1.0))


def test_fh_forward_bump_fixture_and_rotation_invariance():
    # the smooth cutoff is C-infinity but not analytic at its matching radii,
    # so the Gauss rule converges algebraically there; 1e-7 is the honest
    # tolerance at the default grid
    want = kernel_fixture("fh_forward_bump", "lam=1")
    got1 = fh_forward(P, radial_bump, 1.0, boundary_point(1.0), grid=(128, 128))
    got2 = fh_forward(P, radial_bump, 1.0, boundary_point(np.exp(1.1j)), grid=(128, 128))
    assert got1 == pytest.approx(want, rel=1e-7)
    assert got2 == pytest.approx(want, rel=1e-7)


def test_helgason_sample_validation():
    HelgasonSample(1.0, boundary_point(1.0), 0.5 + 0.1j)
    with pytest.raises(ValueError):
        HelgasonSample(1.0, boundary_point(1.0), complex("nan"))


def test_fh_inverse_zero_samples():
    lams = np.linspace(0.05, 20.0, 40)
    omegas = [boundary_point(np.exp(2j * np.pi * k / 8)) for k in range(8)]
    samples = np.zeros((40, 8), dtype=complex)
    got = fh_inverse(P, lams, omegas, samples, {0: np.zeros(8, complex)}, ball_point(0.2))
    assert got == 0.0


def test_fh_inverse_grid_too_coarse():
    lams = np.linspace(0.0, 20.0, 5)
    omegas = [boundary_point(1.0)]
    with pytest.raises(ValueError, match="too coarse"):
        fh_inverse(P, lams, omegas, np.zeros((5, 1), complex), {}, ball_point(0.1))
