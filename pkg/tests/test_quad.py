import math

import numpy as np
import pytest

from hyperball.params import new_parameters
from hyperball.quad import (
    QuadratureSpec,
    integrate_ball,
    integrate_halfline,
    integrate_sphere,
)


def test_spec_validation():
    QuadratureSpec()
    with pytest.raises(ValueError):
        QuadratureSpec(rel_tol=0.0)
    with pytest.raises(ValueError):
        QuadratureSpec(panel_points=2)
    with pytest.raises(ValueError):
        QuadratureSpec(oscillation_period=-1.0)


def test_gaussian_halfline():
    spec = QuadratureSpec(lambda_max=12.0)
    res = integrate_halfline(lambda lam: np.exp(-lam**2), spec)
    assert res.converged
    assert res.value.real == pytest.approx(math.sqrt(math.pi) / 2.0, rel=1e-10)


def test_damped_sine_halfline():
    spec = QuadratureSpec(lambda_max=80.0)
    res = integrate_halfline(lambda lam: np.exp(-lam) * np.sin(2 * lam), spec)
    assert res.converged
    assert res.value.real == pytest.approx(0.4, rel=1e-9)


def test_fresnel_oscillatory_path():
    # int_0^inf sin(lam)/sqrt(lam) = sqrt(pi/2), conditionally convergent
    spec = QuadratureSpec(lambda_max=60.0, oscillation_period=2 * math.pi, accel_terms=12)
    res = integrate_halfline(lambda lam: np.sin(lam) / np.sqrt(lam), spec)
    assert res.value.real == pytest.approx(math.sqrt(math.pi / 2.0), rel=1e-9, abs=1e-9)


def test_two_frequency_oscillatory_path():
    # sin(1.5 lam) cos(0.8 lam) / sqrt(lam): components at 2.3 and 0.7,
    # value (1/2) sqrt(pi/2) (1/sqrt(2.3) + 1/sqrt(0.7)).  Panels keyed to the
    # slowest component make the averaged tail essentially exact; keyed to the
    # fast one the slow component survives averaging (documented behavior).
    want = 0.5 * math.sqrt(math.pi / 2.0) * (1 / math.sqrt(2.3) + 1 / math.sqrt(0.7))
    spec = QuadratureSpec(lambda_max=60.0, oscillation_period=2 * math.pi / 0.7, accel_terms=16)
    res = integrate_halfline(lambda lam: np.sin(1.5 * lam) * np.cos(0.8 * lam) / np.sqrt(lam), spec)
    assert res.value.real == pytest.approx(want, rel=1e-11)
    fast = QuadratureSpec(lambda_max=60.0, oscillation_period=2 * math.pi / 1.5, accel_terms=16)
    res_fast = integrate_halfline(lambda lam: np.sin(1.5 * lam) * np.cos(0.8 * lam) / np.sqrt(lam), fast)
    assert res_fast.value.real == pytest.approx(want, rel=1e-4)


def test_nan_integrand_reported():
    spec = QuadratureSpec(lambda_max=10.0)

    def bad(lam):
        out = np.ones_like(lam)
        out[lam > 5.0] = np.nan
        return out

    with pytest.raises(FloatingPointError, match="lambda"):
        integrate_halfline(bad, spec)


def test_doubling_panel_points_stable():
    # self-consistency on a kernel-like integrand
    def f(lam):
        return np.exp(-0.3 * lam**2) * lam**1.5 / (1.0 + lam**2)

    r1 = integrate_halfline(f, QuadratureSpec(panel_points=32, lambda_max=30.0))
    r2 = integrate_halfline(f, QuadratureSpec(panel_points=64, lambda_max=30.0))
    assert abs(r1.value - r2.value) <= 1e-8 * abs(r2.value)


# ------------------------------------------------------------------- ball

def test_ball_constant_n1():
    p = new_parameters(1, 2.5)
    val = integrate_ball(p, lambda pts: np.ones(pts.shape[0], complex))
    assert val.real == pytest.approx(math.pi / 1.5, rel=1e-13)


def test_ball_linear_vanishes():
    for n, nu in [(1, 2.5), (2, 3.7)]:
        p = new_parameters(n, nu)
        val = integrate_ball(p, lambda pts: pts[..., 0])
        assert abs(val) < 1e-14


def test_ball_radial_moment():
    p = new_parameters(1, 2.5)
    val = integrate_ball(p, lambda pts: np.abs(pts[..., 0]) ** 2)
    assert val.real == pytest.approx(math.pi * 4.0 / 15.0, rel=1e-13)


def test_ball_constant_n2():
    # int (1-|z|^2)^{nu-3} dm over B_2 = pi^2 B(2, nu-2) = pi^2 Gamma(2)Gamma(nu-2)/Gamma(nu)
    nu = 3.7
    p = new_parameters(2, nu)
    val = integrate_ball(p, lambda pts: np.ones(pts.shape[0], complex))
    want = math.pi**2 * math.gamma(2.0) * math.gamma(nu - 2.0) / math.gamma(nu)
    assert val.real == pytest.approx(want, rel=1e-12)


def test_ball_polynomial_exactness():
    # radial polynomials in r^2 of degree <= 2*radial-1 are integrated exactly
    p = new_parameters(1, 2.5)

    def f(pts):
        u = np.abs(pts[..., 0]) ** 2
        return 3.0 * u**5 - 2.0 * u**2 + 1.0

    got = integrate_ball(p, f, grid=(8, 16))
    # exact: pi * int_0^1 (3u^5 - 2u^2 + 1)(1-u)^{1/2} du
    from scipy.integrate import quad

    want = math.pi * quad(lambda u: (3 * u**5 - 2 * u**2 + 1) * (1 - u) ** 0.5, 0, 1)[0]
    assert got.real == pytest.approx(want, rel=1e-13)


def test_ball_boundary_growth_exactness():
    # f ~ (1-u)^{-1} times smooth integrates exactly with boundary_growth=1
    p = new_parameters(1, 3.5)

    def f(pts):
        u = np.abs(pts[..., 0]) ** 2
        return (2.0 - u) / (1.0 - u)

    got = integrate_ball(p, f, grid=(16, 8), boundary_growth=1)
    from scipy.integrate import quad

    want = math.pi * quad(lambda u: (2 - u) * (1 - u) ** 0.5, 0, 1)[0]
    assert got.real == pytest.approx(want, rel=1e-13)


# ----------------------------------------------------------------- sphere

def test_sphere_constant():
    for n in (1, 2):
        assert integrate_sphere(n, lambda pts: np.ones(pts.shape[0], complex)).real == pytest.approx(1.0, rel=1e-14)


def test_sphere_coordinate_vanishes():
    for n in (1, 2):
        assert abs(integrate_sphere(n, lambda pts: pts[..., 0])) < 1e-14


def test_sphere_poisson_mean_n1():
    # mean over the circle of |1 - 0.5 conj(w)|^{-2} = 1/(1-0.25)
    val = integrate_sphere(1, lambda pts: np.abs(1.0 - 0.5 * np.conj(pts[..., 0])) ** -2.0)
    assert val.real == pytest.approx(1.0 / 0.75, rel=1e-12)


def test_sphere_trig_exactness():
    # trapezoid is exact for trig polynomials of degree < nodes/2
    val = integrate_sphere(1, lambda pts: np.real(pts[..., 0] ** 7) ** 2, angular=32)
    assert val.real == pytest.approx(0.5, rel=1e-14)


def test_sphere_moment_n2():
    # |omega_1|^2 has mean 1/2 on S^3 (Beta(1,1))
    val = integrate_sphere(2, lambda pts: np.abs(pts[..., 0]) ** 2, angular=64)
    assert val.real == pytest.approx(0.5, rel=1e-12)