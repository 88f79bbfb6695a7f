"""Independent reference values for the kernel fixture.

Everything here is computed with mpmath only (30-50 digits), entirely apart
from the library's evaluation paths: direct hyp2f1/gamma arithmetic for the
closed-form rows and mpmath quadrature for the integral rows.  Used once by
make_fixtures.py; the committed CSV is what the test suite reads.
"""

from __future__ import annotations

import mpmath as mp

N, NU = 1, mp.mpf("2.5")


def _weight(lam):
    # |C(lam)|^-2 from gamma moduli
    il = 1j * lam
    c = (
        mp.power(2, N - NU - il)
        * mp.gamma(N)
        * mp.gamma(il)
        / (mp.gamma((il + N - NU) / 2) * mp.gamma((il + N + NU) / 2))
    )
    return 1.0 / (abs(c) ** 2)


def _phi(lam, d):
    sh2 = mp.sinh(d) ** 2
    return mp.hyp2f1((N - NU - 1j * lam) / 2, (N - NU + 1j * lam) / 2, N, -sh2)


def _distance(z, w):
    num = abs(1 - z * mp.conj(w)) ** 2
    den = (1 - abs(z) ** 2) * (1 - abs(w) ** 2)
    return mp.acosh(mp.sqrt(num / den))


def heat_reference(t, z, w):
    d = _distance(z, w)
    pref = (1 - z * mp.conj(w)) ** (-NU)
    cont_coeff = mp.gamma(N) / (2 * mp.pi ** (N + 1) * mp.power(2, 2 * (NU - N)))
    shift = mp.e ** (-t * (NU - N) ** 2)

    def integrand(lam):
        return mp.e ** (-t * lam**2) * _weight(lam) * _phi(lam, d)

    lmax = mp.sqrt(60 / t)
    integral = mp.quad(integrand, [0, lmax / 4, lmax / 2, lmax])
    # single atom at these parameters: tau_0 = 2(nu-n)Gamma(nu)/(pi Gamma(nu-n+1))
    tau0 = 2 * (NU - N) * mp.gamma(NU) / (mp.pi**N * mp.gamma(NU - N + 1))
    val = pref * (tau0 + shift * cont_coeff * integral)
    return complex(val)


def density_reference(s, z, w):
    d = _distance(z, w)
    pref = (1 - z * mp.conj(w)) ** (-NU)
    m = mp.gamma(N) / (4 * mp.pi ** (N + 1) * mp.power(2, 2 * (NU - N)))
    lam = mp.sqrt(s)
    return complex(m * pref * _weight(lam) * _phi(lam, d) / lam)


def closed_wave_reference(t, z, w):
    d = _distance(z, w)
    pref = (1 - z * mp.conj(w)) ** (-NU)
    c1 = mp.gamma(N - mp.mpf(1) / 2) / (2 * mp.pi**N)
    chd, cht = mp.cosh(d), mp.cosh(t)
    sup = (cht**2 / chd**2 - 1) ** (mp.mpf(1) / 2 - N)
    arg = (chd - cht) / (2 * chd)
    f = mp.hyp2f1(1 - N + NU, 1 - N - NU, mp.mpf(3) / 2 - N, arg)
    return complex(c1 * pref * chd ** (NU - N) * sup * f)


def green_reference(mu, z, w, convention="printed"):
    one = 1 - z * mp.conj(w)
    q = (1 - abs(z) ** 2) * (1 - abs(w) ** 2) / abs(one) ** 2
    c = (
        mp.gamma((N - 1j * mu + NU) / 2)
        * mp.gamma((N - 1j * mu - NU) / 2)
        / (2 * mp.pi**N * mp.gamma(1 - 1j * mu))
    )
    phase = (mp.conj(one) / one) ** (NU / 2)
    expo = (N - 1j * mu / 2) if convention == "printed" else (N - 1j * mu) / 2
    f = mp.hyp2f1((N - 1j * mu + NU) / 2, (N - 1j * mu - NU) / 2, 1 - 1j * mu, q)
    return complex(c * phase * q**expo * f)


def poisson_reference(lam, z, omega):
    base = 1 - z * mp.conj(omega)
    ratio = (1 - abs(z) ** 2) / abs(base) ** 2
    return complex(ratio ** ((1j * lam + N - NU) / 2) * base ** (-NU))


def plancherel_reference(lam):
    return complex(_weight(lam))


def fh_forward_reference(lam):
    """Transform of the radial reference bump at any omega (radial => omega-free).

    F(z) = exp(-8 |z|^2) * smooth cutoff at |z| in [0.55, 0.85];
    F~(lam) = 2 pi * (1/2) int_0^1 F(sqrt(u)) Phi_{-lam}(sqrt(u)) (1-u)^{nu-2} du
    with Phi the closed-form spherical function.
    """

    def cutoff(r):
        if r <= mp.mpf("0.55"):
            return mp.mpf(1)
        if r >= mp.mpf("0.85"):
            return mp.mpf(0)
        s = (r - mp.mpf("0.55")) / mp.mpf("0.30")
        return mp.e ** (1 - 1 / (1 - s**2))

    def spherical(lam_, r):
        r2 = r * r
        return (1 - r2) ** ((-NU + N - 1j * lam_) / 2) * mp.hyp2f1(
            (-1j * lam_ + N + NU) / 2, (-1j * lam_ + N - NU) / 2, N, r2
        )

    def integrand(u):
        r = mp.sqrt(u)
        return mp.e ** (-8 * u) * cutoff(r) * spherical(-lam, r) * (1 - u) ** (NU - N - 1)

    val = mp.pi * mp.quad(integrand, [0, mp.mpf("0.3025"), mp.mpf("0.7225"), 1])
    return complex(val)


def reference_rows():
    mp.mp.dps = 35
    rows = []

    def fmt(name, arg, z, w, val, settings):
        rows.append(
            [
                name,
                N,
                float(NU),
                arg,
                float(mp.re(z)) if not isinstance(z, str) else z,
                float(mp.im(z)) if not isinstance(z, str) else "",
                float(mp.re(w)) if not isinstance(w, str) else w,
                float(mp.im(w)) if not isinstance(w, str) else "",
                format(val.real, ".17g"),
                format(val.imag, ".17g"),
                settings,
            ]
        )

    z0, w03 = mp.mpc(0), mp.mpc("0.3")
    zc = mp.mpc("0.2", "0.1")
    wc = mp.mpc("-0.25", "0.3")
    fmt("heat", "t=0.5", z0, w03, heat_reference(mp.mpf("0.5"), z0, w03), "mp.quad dps=35")
    fmt("heat", "t=0.5", zc, wc, heat_reference(mp.mpf("0.5"), zc, wc), "mp.quad dps=35")
    fmt("density", "s=1", z0, mp.mpc("0.5"), density_reference(mp.mpf(1), z0, mp.mpc("0.5")), "closed")
    fmt("closed_wave", "t=1.5", z0, w03, closed_wave_reference(mp.mpf("1.5"), z0, w03), "closed")
    fmt("green_printed", "mu=5j", z0, mp.mpc("0.4"), green_reference(5j, z0, mp.mpc("0.4")), "closed")
    fmt("green_paired", "mu=5j", z0, mp.mpc("0.4"), green_reference(5j, z0, mp.mpc("0.4"), "paired"), "closed")
    fmt("poisson", "lam=1", mp.mpc("0.5"), mp.mpc(1), poisson_reference(mp.mpf(1), mp.mpc("0.5"), mp.mpc(1)), "closed")
    fmt("plancherel", "lam=1", "", "", plancherel_reference(mp.mpf(1)), "closed")
    fmt("harish_chandra", "lam=1", "", "", complex(
        mp.power(2, N - NU - 1j) * mp.gamma(N) * mp.gamma(1j)
        / (mp.gamma((1j + N - NU) / 2) * mp.gamma((1j + N + NU) / 2))
    ), "closed")
    fmt("fh_forward_bump", "lam=1", "", "", fh_forward_reference(mp.mpf(1)), "mp.quad dps=35")
    return rows
