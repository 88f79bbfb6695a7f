"""Complex special functions behind every kernel evaluation.

Provides the principal-branch complex log-gamma, the Gauss hypergeometric
function 2F1 on real arguments x < 1, Jacobi polynomials and Jacobi
functions, the Harish-Chandra-type normalizer C_nu(lambda) and the
Plancherel weight |C_nu(lambda)|^-2.

All gamma quotients are assembled in log space and exponentiated once;
ratios of Gamma values overflow already at modest imaginary arguments.

The kernel quadratures need the conjugate-parameter Jacobi function
phi_lambda^(alpha,-nu)(t) on large lambda grids.  The Maclaurin/Pfaff series
suffers intermediate-term growth ~exp(lambda*tanh t) there, so
:func:`jacobi_function_grid` switches to an exact boundary-average
representation (a weighted Fourier sum, no cancellation) once
lambda*tanh(t) exceeds a safe budget.
"""

from __future__ import annotations

import math
from typing import Optional

import numpy as np
from scipy.special import loggamma as _scipy_loggamma

__all__ = [
    "PoleError",
    "ConvergenceError",
    "log_gamma",
    "gauss_2f1",
    "jacobi_polynomial",
    "jacobi_function",
    "jacobi_function_grid",
    "harish_chandra_c",
    "plancherel_weight",
    "plancherel_weight_grid",
]

SERIES_RTOL = 1e-15
SERIES_CAP = 10**6

# Series path budget for jacobi_function_grid: beyond this the Pfaff series
# loses more than ~4 digits to cancellation.
_SERIES_SAFE_LAMBDA_TANH = 10.0


class PoleError(ArithmeticError):
    """Evaluation requested at (or too near) a pole."""


class ConvergenceError(ArithmeticError):
    """Series failed to converge within the term cap.

    Carries the partial value and the number of terms summed.
    """

    def __init__(self, message: str, partial: complex, terms: int):
        super().__init__(message)
        self.partial = partial
        self.terms = terms


def _near_nonpositive_int(z: complex, tol: float = 1e-12) -> Optional[int]:
    """Return the non-positive integer z is within tol of, else None."""
    zr = complex(z)
    if abs(zr.imag) > tol:
        return None
    m = round(zr.real)
    if m <= 0 and abs(zr.real - m) <= tol:
        return int(m)
    return None


def log_gamma(z):
    """Principal-branch log Gamma(z) for complex z, scalar or array.

    Raises PoleError at non-positive integers (within 1e-12), where Gamma
    has poles; everywhere else accurate to ~1e-14 relative.
    """
    arr = np.asarray(z, dtype=complex)
    if arr.ndim == 0:
        if _near_nonpositive_int(complex(arr)) is not None:
            raise PoleError(f"log_gamma pole at z={complex(arr)}")
        return complex(_scipy_loggamma(complex(arr)))
    near = (np.abs(arr.imag) <= 1e-12) & (np.abs(arr.real - np.round(arr.real)) <= 1e-12) & (np.round(arr.real) <= 0)
    if np.any(near):
        raise PoleError("log_gamma pole in array argument")
    return _scipy_loggamma(arr)


def _series_2f1(a, b, c, x, rtol=None, cap=None) -> complex:
    """Maclaurin series for 2F1 at |x| < 1; term-ratio stopping."""
    rtol = SERIES_RTOL if rtol is None else rtol
    cap = SERIES_CAP if cap is None else cap
    term = 1.0 + 0.0j
    total = 1.0 + 0.0j
    for k in range(cap):
        term = term * (a + k) * (b + k) * x / ((c + k) * (k + 1))
        total += term
        if abs(term) <= rtol * abs(total):
            # one extra term against lucky near-zero terms
            term2 = term * (a + k + 1) * (b + k + 1) * x / ((c + k + 1) * (k + 2))
            if abs(term2) <= rtol * abs(total + term2):
                return total + term2
            total += term2
            term = term2
    raise ConvergenceError(
        f"2F1 series hit the {cap}-term cap at a={a}, b={b}, c={c}, x={x}",
        partial=total,
        terms=cap,
    )


def _terminating_2f1(m: int, b, c, x) -> complex:
    """Exact finite sum for 2F1(-m, b; c; x), m >= 0."""
    term = 1.0 + 0.0j
    total = 1.0 + 0.0j
    for k in range(m):
        term = term * (-m + k) * (b + k) * x / ((c + k) * (k + 1))
        total += term
    return total


def gauss_2f1(a, b, c, x: float) -> complex:
    """2F1(a, b; c; x) for complex parameters and real x < 1.

    Terminating cases (a or b a non-positive integer) are computed as exact
    finite sums.  For x < 0 the Pfaff transformation maps to x/(x-1) in
    [0, 1); for x in [0, 1) the series is summed directly.  Raises PoleError
    when c is a non-positive integer that the series reaches, and
    ConvergenceError (with partial value and term count) if the 1e6-term cap
    is hit.
    """
    x = float(x)
    if x >= 1.0:
        raise ValueError(f"gauss_2f1 requires x < 1, got x={x}")
    a = complex(a)
    b = complex(b)
    c = complex(c)

    ma = _near_nonpositive_int(a)
    mb = _near_nonpositive_int(b)
    mc = _near_nonpositive_int(c)
    if ma is not None or mb is not None:
        # pick the shorter terminating sum; guard the c-pole ordering
        if ma is not None and (mb is None or -ma <= -mb):
            m, other = -ma, b
        else:
            m, other = -mb, a
        if mc is not None and -mc < m:
            raise PoleError(f"gauss_2f1 pole: c={c} reached before the series terminates")
        return _terminating_2f1(m, other, c, x)
    if mc is not None:
        raise PoleError(f"gauss_2f1 pole: c={c} is a non-positive integer")

    if x == 0.0:
        return 1.0 + 0.0j
    if x < 0.0:
        # Conjugate-pair arguments with integer c are the Jacobi-function case;
        # the Pfaff series loses ~lambda*tanh(t)/ln10 digits there, so route
        # large-oscillation cases through the stable boundary average.
        lam = -2.0 * a.imag
        t = math.asinh(math.sqrt(-x))
        if (
            abs(b - a.conjugate()) <= 1e-13 * (1.0 + abs(a))
            and abs(c.imag) <= 1e-13
            and abs(c.real - round(c.real)) <= 1e-13
            and round(c.real) >= 1
            and abs(lam) * math.tanh(t) > _SERIES_SAFE_LAMBDA_TANH
        ):
            n = int(round(c.real))
            nu = n - 2.0 * a.real
            return complex(_phi_boundary_grid(np.array([lam]), n, nu, t)[0])
        y = x / (x - 1.0)
        pref = (1.0 - x) ** (-a)
        return pref * _series_2f1(a, c - b, c, y)
    return _series_2f1(a, b, c, x)


def jacobi_polynomial(j: int, alpha: float, beta: float, y: float) -> float:
    """Classical Jacobi polynomial P_j^(alpha,beta)(y) by its terminating
    hypergeometric sum: ((alpha+1)_j / j!) * 2F1(-j, alpha+beta+j+1; alpha+1; (1-y)/2)."""
    if j < 0:
        raise ValueError("degree must be non-negative")
    lead = 1.0
    for m in range(j):
        lead *= (alpha + 1 + m) / (m + 1)
    u = 0.5 * (1.0 - y)
    term = 1.0
    total = 1.0
    for k in range(j):
        term *= (-j + k) * (alpha + beta + j + 1 + k) * u / ((alpha + 1 + k) * (k + 1))
        total += term
    return lead * total


def jacobi_function(lam, alpha: float, beta: float, t: float) -> complex:
    """Jacobi function phi_lambda^(alpha,beta)(t)
    = 2F1((alpha+beta+1-i lam)/2, (alpha+beta+1+i lam)/2; alpha+1; -sinh^2 t).

    Scalar evaluation through gauss_2f1; for large lambda*t grids use
    jacobi_function_grid.
    """
    rho = alpha + beta + 1.0
    lam = complex(lam)
    a = 0.5 * (rho - 1j * lam)
    b = 0.5 * (rho + 1j * lam)
    sh = math.sinh(float(t))
    return gauss_2f1(a, b, alpha + 1.0, -sh * sh)


def _phi_series_grid(lams: np.ndarray, alpha: float, beta: float, t: float) -> np.ndarray:
    """Vectorized Pfaff series for phi_lambda over a lambda array."""
    rho = alpha + beta + 1.0
    a = 0.5 * (rho - 1j * lams)
    cb = 0.5 * (alpha - beta + 1.0 - 1j * lams)  # c - b with c = alpha+1
    c = alpha + 1.0
    th = math.tanh(float(t))
    y = th * th
    sh2 = math.sinh(float(t)) ** 2
    term = np.ones_like(a)
    total = np.ones_like(a)
    for k in range(SERIES_CAP):
        term = term * (a + k) * (cb + k) * (y / ((c + k) * (k + 1)))
        total += term
        if np.all(np.abs(term) <= SERIES_RTOL * np.abs(total)):
            break
    else:
        raise ConvergenceError("phi series cap hit", partial=complex(total.flat[0]), terms=SERIES_CAP)
    return (1.0 + sh2) ** (-a) * total


_BOUNDARY_CACHE: dict = {}


def _phi_boundary_grid(lams: np.ndarray, n: int, nu: float, t: float) -> np.ndarray:
    """Exact boundary-average representation of phi_lambda^(n-1,-nu)(t).

    phi_lambda(t) equals the mean over the unit sphere S^{2n-1} of
    [(1-r^2)/|1 - r conj(w1)|^2]^{(i lam + n - nu)/2} (1 - r conj(w1))^{-nu}
    with r = tanh t, which reduces to a 1D (n=1) or 2D (n>=2) average over
    the first coordinate w1.  Evaluated as a weighted Fourier sum over the
    lambda grid; no cancellation, trapezoid accuracy is spectral.  The
    lambda-independent grid data is cached per (n, nu, t, node-count bucket)
    since kernel quadratures call this panel by panel at one distance.
    """
    r = math.tanh(float(t))
    if r == 0.0:
        return np.ones(len(lams), dtype=complex)
    lam_max = float(np.max(np.abs(lams)))
    # Node count: the phase winds at most lam*r/(1-r^2) cycles over the circle
    # and the modulus has a boundary layer of width ~(1-r) near theta = 0.
    n_theta = int(max(256, 8.0 * lam_max * r / (1.0 - r * r), 64.0 / (1.0 - r)))
    n_theta = min(1 << int(math.ceil(math.log2(n_theta))), 2_097_152)

    def fourier_sum(w1: np.ndarray, wts: np.ndarray) -> np.ndarray:
        key = (n, round(nu, 14), round(t, 14), len(w1))
        data = _BOUNDARY_CACHE.get(key)
        if data is None:
            base = 1.0 - r * np.conj(w1)
            logmod = np.log((1.0 - r * r) / np.abs(base) ** 2)  # real
            fixed = wts * np.exp(0.5 * (n - nu) * logmod) * base ** (-nu)
            if len(_BOUNDARY_CACHE) > 32:
                _BOUNDARY_CACHE.clear()
            _BOUNDARY_CACHE[key] = data = (logmod, fixed)
        logmod, fixed = data
        # sum_theta fixed * exp(i lam logmod / 2), chunked over lambda
        out = np.empty(len(lams), dtype=complex)
        chunk = max(1, int(4_000_000 // max(len(logmod), 1)))
        for s in range(0, len(lams), chunk):
            ll = lams[s : s + chunk]
            out[s : s + chunk] = np.exp(0.5j * np.outer(ll, logmod)) @ fixed
        return out

    if n == 1:
        theta = 2.0 * math.pi * (np.arange(n_theta) + 0.5) / n_theta
        w1 = np.exp(1j * theta)
        wts = np.full(n_theta, 1.0 / n_theta)
        return fourier_sum(w1, wts)
    # n >= 2: |w1|^2 = 1-u; pushforward of u under the uniform sphere measure
    # is Beta(n-1, 1), density (n-1) u^{n-2} on [0, 1].  Substituting u = w^2
    # clusters nodes into the boundary layer at u ~ (1-r) and the phase winds
    # at most ~lam sqrt(r/(1-r)) in w, which sets the node count.
    n_w = int(max(48 * (n - 1), 3.0 * lam_max * math.sqrt(r / (1.0 - r))))
    xs, ws = np.polynomial.legendre.leggauss(min(n_w, 20000))
    w = 0.5 * (xs + 1.0)
    u = w * w
    wu = 0.5 * ws * 2.0 * w
    dens = (n - 1) * u ** (n - 2)
    theta = 2.0 * math.pi * (np.arange(n_theta) + 0.5) / n_theta
    circ = np.exp(1j * theta)
    mod = np.sqrt(1.0 - u)
    w1 = (mod[:, None] * circ[None, :]).ravel()
    wts = ((wu * dens)[:, None] * np.full((1, n_theta), 1.0 / n_theta)).ravel()
    return fourier_sum(w1, wts)


def jacobi_function_grid(lams, alpha: float, beta: float, t: float) -> np.ndarray:
    """phi_lambda^(alpha,beta)(t) over a real lambda array, numerically stable
    for large lambda*t.

    Uses the vectorized series where safe (lambda*tanh t small) and, for
    integer alpha >= 0 with beta < 0 (the kernel case alpha = n-1,
    beta = -nu), the exact boundary-average path elsewhere.
    """
    lams = np.asarray(lams, dtype=float)
    t = float(t)
    if t == 0.0:
        return np.ones(lams.shape, dtype=complex)
    th = math.tanh(t)
    out = np.empty(lams.shape, dtype=complex)
    safe = np.abs(lams) * th <= _SERIES_SAFE_LAMBDA_TANH
    if np.any(safe):
        out[safe] = _phi_series_grid(lams[safe], alpha, beta, t)
    if np.any(~safe):
        n = int(round(alpha + 1.0))
        if abs(alpha - (n - 1)) > 1e-12 or n < 1:
            raise ValueError(
                "jacobi_function_grid requires integer alpha >= 0 for the large-lambda path"
            )
        out[~safe] = _phi_boundary_grid(lams[~safe], n, -beta, t)
    return out


def jacobi_phi_block(n: int, nu: float, lams: np.ndarray, dists: np.ndarray) -> np.ndarray:
    """phi_lambda^(n-1,-nu)(d) on a (distances x lambdas) block, stable for
    the ball-composition quadratures where d ranges up to the boundary.

    Three regimes on the Pfaff argument y = tanh^2 d:
      - y <= 0.6: the Pfaff series (fast, mild cancellation for the lambda
        range these blocks carry);
      - y > 0.6, lambda >= 1e-3: the argument-near-unity connection
        F(A,B;c;y) = G1 F(A,B;1-i lam;1-y)
                     + (1-y)^{i lam} G2 F(c-A,c-B;1+i lam;1-y),
        whose 1-y = sech^2 d series is short and lambda-uniform exactly
        where the direct series crawls;
      - y > 0.6, lambda < 1e-3: the direct series with a long cap (few
        entries; positive slowly-converging terms).
    """
    lams = np.asarray(lams, dtype=float)
    dists = np.asarray(dists, dtype=float)
    npts, nl = len(dists), len(lams)
    out = np.empty((npts, nl), dtype=complex)
    y = np.tanh(dists) ** 2
    rho = float(n) - nu
    c = float(n)

    near = y > 0.6
    far = ~near
    if np.any(far):
        dd = dists[far]
        aa = 0.5 * (rho - 1j * lams)[None, :]
        bb = 0.5 * (n + nu - 1j * lams)[None, :]
        yy = y[far][:, None]
        term = np.ones((int(far.sum()), nl), dtype=complex)
        total = np.ones_like(term)
        for k in range(2000):
            term = term * (aa + k) * (bb + k) * (yy / ((c + k) * (k + 1)))
            total += term
            if np.all(np.abs(term) <= 1e-15 * np.abs(total)):
                break
        out[far] = np.cosh(dd)[:, None] ** (2.0 * -aa) * total
    if np.any(near):
        dd = dists[near]
        m = int(near.sum())
        one_y = (1.0 / np.cosh(dd) ** 2)[:, None]  # 1 - y
        lam_ok = lams >= 1e-3
        # connection branch
        il = 1j * lams[lam_ok]
        A = 0.5 * (rho - il)[None, :]
        B = 0.5 * (n + nu - il)[None, :]
        g1 = np.exp(
            _scipy_loggamma(c)
            + _scipy_loggamma(il)
            - _scipy_loggamma(0.5 * (n + nu + il))
            - _scipy_loggamma(0.5 * (n - nu + il))
        )[None, :]
        g2 = np.conj(g1)
        u = one_y
        f1 = np.ones((m, int(lam_ok.sum())), dtype=complex)
        t1 = np.ones_like(f1)
        f2 = np.ones_like(f1)
        t2 = np.ones_like(f1)
        c1 = (1.0 - il)[None, :]
        c2 = (1.0 + il)[None, :]
        Ac = np.conj(A)
        Bc = np.conj(B)
        for k in range(600):
            t1 = t1 * (A + k) * (B + k) * (u / ((c1 + k) * (k + 1)))
            t2 = t2 * (Ac + k) * (Bc + k) * (u / ((c2 + k) * (k + 1)))
            f1 += t1
            f2 += t2
            if np.all(np.abs(t1) <= 1e-16 * np.abs(f1)) and np.all(np.abs(t2) <= 1e-16 * np.abs(f2)):
                break
        phase = u ** (il[None, :])
        fconn = g1 * f1 + phase * (g2 * f2)
        # Pfaff prefactor (1+sinh^2)^{-A} = cosh^{-2A}
        prefc = np.cosh(dd)[:, None] ** (2.0 * -A)
        block = np.empty((m, nl), dtype=complex)
        block[:, lam_ok] = prefc * fconn
        if np.any(~lam_ok):
            ll = lams[~lam_ok]
            aa = 0.5 * (rho - 1j * ll)[None, :]
            bb = 0.5 * (n + nu - 1j * ll)[None, :]
            yy = y[near][:, None]
            term = np.ones((m, int((~lam_ok).sum())), dtype=complex)
            total = np.ones_like(term)
            for k in range(200000):
                term = term * (aa + k) * (bb + k) * (yy / ((c + k) * (k + 1)))
                total += term
                if np.all(np.abs(term) <= 1e-15 * np.abs(total)):
                    break
            block[:, ~lam_ok] = np.cosh(dd)[:, None] ** (2.0 * -aa) * total
        out[near] = block
    return out


def harish_chandra_c(p, lam) -> complex:
    """C_nu(lambda) = 2^{n-nu-i lam} Gamma(n) Gamma(i lam)
    / (Gamma((i lam + n - nu)/2) Gamma((i lam + n + nu)/2)), via one exp of a
    log-gamma combination.  Pole at lambda = 0."""
    n, nu = p.n, p.nu
    lam = complex(lam)
    if abs(lam) < 1e-300:
        raise PoleError("harish_chandra_c pole at lambda=0")
    il = 1j * lam
    for arg in ((il + n - nu) / 2.0, (il + n + nu) / 2.0):
        if _near_nonpositive_int(arg) is not None:
            raise PoleError(f"harish_chandra_c denominator pole at gamma({arg})")
    logc = (
        (n - nu - il) * math.log(2.0)
        + log_gamma(n)
        + log_gamma(il)
        - log_gamma((il + n - nu) / 2.0)
        - log_gamma((il + n + nu) / 2.0)
    )
    return complex(np.exp(logc))


def plancherel_weight_grid(p, lams) -> np.ndarray:
    """|C_nu(lambda)|^-2 over a non-negative lambda array; 0 at lambda = 0."""
    n, nu = p.n, p.nu
    lams = np.asarray(lams, dtype=float)
    out = np.zeros(lams.shape, dtype=float)
    pos = lams > 0.0
    if np.any(pos):
        il = 1j * lams[pos]
        logc_re = (
            (n - nu) * math.log(2.0)
            + float(np.real(log_gamma(complex(n))))
            + np.real(_scipy_loggamma(il))
            - np.real(_scipy_loggamma((il + n - nu) / 2.0))
            - np.real(_scipy_loggamma((il + n + nu) / 2.0))
        )
        out[pos] = np.exp(-2.0 * logc_re)
    return out


def plancherel_weight(p, lam: float) -> float:
    """Scalar Plancherel weight |C_nu(lambda)|^-2, lambda >= 0 (0 at 0 by continuity)."""
    lam = float(lam)
    if lam < 0:
        raise ValueError("plancherel_weight requires lambda >= 0")
    return float(plancherel_weight_grid(p, np.array([lam]))[0])
