"""Model parameters (n, nu) and the discrete spectrum of the shifted operator.

The operator under study lives on the unit ball of C^n and depends on one real
weight nu with nu > n and nu non-integer.  Its shifted version has continuous
spectrum [0, inf) plus finitely many negative eigenvalues ("atoms")
s_j = -(nu - n - 2j)^2 for j = 0 .. floor((nu-n)/2).  Everything downstream
(kernels, transforms, verification) consumes the atom data assembled here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.special import gammaln

__all__ = [
    "Parameters",
    "SpectrumAtom",
    "new_parameters",
    "discrete_spectrum",
    "resolvent_abscissa",
    "bergman_projector_constant",
]

DEFAULT_INTEGRALITY_TOL = 1e-9


@dataclass(frozen=True)
class Parameters:
    """Validated pair (n, nu); use :func:`new_parameters` to construct."""

    n: int
    nu: float
    integrality_tol: float = DEFAULT_INTEGRALITY_TOL


@dataclass(frozen=True)
class SpectrumAtom:
    """One line of the point spectrum.

    lambda_j = -i(nu-n-2j) is purely imaginary, s_j = lambda_j^2 < 0 is the
    eigenvalue of the shifted operator, rho_j = 4j(j+n-nu) <= 0 the eigenvalue
    of the unshifted one.  c_j is the projector-kernel constant and
    tau_j = c_j * j!/(n)_j its reduced form used by the heat/wave/resolvent
    kernels.
    """

    j: int
    lambda_j: complex
    s_j: float
    rho_j: float
    c_j: float
    tau_j: float


def new_parameters(n: int, nu: float, integrality_tol: float = DEFAULT_INTEGRALITY_TOL) -> Parameters:
    """Validate and build a Parameters value.

    Raises ValueError naming the violated constraint: n must be a positive
    integer, nu must exceed n, and nu must be non-integer (within
    integrality_tol, which guards the gamma evaluations in c_j).
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    nu = float(nu)
    if not math.isfinite(nu):
        raise ValueError(f"nu must be finite, got {nu!r}")
    if nu <= n:
        raise ValueError(f"nu must exceed n (got nu={nu}, n={n})")
    if abs(nu - round(nu)) <= integrality_tol:
        raise ValueError(f"nu must be non-integer (got nu={nu}, within {integrality_tol} of {round(nu)})")
    return Parameters(n=n, nu=nu, integrality_tol=integrality_tol)


def _pochhammer_n(n: int, j: int) -> float:
    """(n)_j for integer n >= 1, j >= 0."""
    out = 1.0
    for m in range(j):
        out *= n + m
    return out


def atom_constant(p: Parameters, j: int) -> float:
    """The projector constant c_j = 2 Gamma(n+j) (nu-n-2j) Gamma(nu-j) / (pi^n Gamma(n) j! Gamma(nu-n-j+1))."""
    n, nu = p.n, p.nu
    log = (
        math.log(2.0)
        + gammaln(n + j)
        - gammaln(n)
        - gammaln(j + 1)
        + gammaln(nu - j)
        - gammaln(nu - n - j + 1)
        - n * math.log(math.pi)
    )
    return (nu - n - 2 * j) * math.exp(log)


def bergman_projector_constant(p: Parameters, j: int) -> float:
    """Reproducing-kernel constant of the j-th eigenspace in its weighted-Bergman form.

    A_j = Gamma(j+n) (nu-n-2j) Gamma(nu-j) / (pi^n Gamma(n) j! Gamma(nu-n-j+1)),
    i.e. exactly atom_constant / 2.  Kept as an independent closed form; the
    verification harness compares the two.
    """
    return atom_constant(p, j) / 2.0


def atom_count(p: Parameters) -> int:
    """Number of atoms, floor((nu-n)/2) + 1."""
    return int(math.floor((p.nu - p.n) / 2.0)) + 1


def discrete_spectrum(p: Parameters) -> list[SpectrumAtom]:
    """All atoms in ascending j.

    s_j = -(nu-n-2j)^2 (the sign convention consistent with
    lambda_j = -i(nu-n-2j)) and rho_j = 4j(j+n-nu).
    """
    n, nu = p.n, p.nu
    atoms = []
    for j in range(atom_count(p)):
        a = nu - n - 2 * j
        c_j = atom_constant(p, j)
        tau_j = c_j * math.factorial(j) / _pochhammer_n(n, j)
        atoms.append(
            SpectrumAtom(
                j=j,
                lambda_j=complex(0.0, -a),
                s_j=-(a * a),
                rho_j=4.0 * j * (j + n - nu),
                c_j=c_j,
                tau_j=tau_j,
            )
        )
    return atoms


def resolvent_abscissa(p: Parameters) -> float:
    """max_j |s_j| - (nu-n)^2, computed over the atom list (not hard-coded 0)."""
    atoms = discrete_spectrum(p)
    p_max = max(abs(a.s_j) for a in atoms)
    return p_max - (p.nu - p.n) ** 2
