"""Numerical audit harness: every closed-form identity the kernels are built
from is checked here, and where the source formulas admit more than one
reading (support factors, exponents, constants) the harness evaluates all
variants and selects by ratio-constancy across independent samples.

Ratio-mode checks pass on small coefficient-of-variation of the LHS/RHS
ratio, never on the ratio being 1; the fitted ratio is always reported, so
"formula shape correct" is kept separate from "printed constants correct".
The single fitted normalization kappa relating the printed constants to the
exact delta/idempotence/semigroup normalization is measured by four
independent routes and reported by constant_audit.

All randomness is drawn from a generator seeded by (seed + per-check offset);
reports are deterministic given (params, seed, spec) and serialize to JSON
with a fixed field set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

import numpy as np

from hyperball.geometry import (
    BallPoint,
    GeneralizedLaplacianParams,
    apply_delta_alpha_beta,
    apply_delta_nu,
    ball_point,
    bergman_distance,
    boundary_point,
    hermitian_inner,
    mobius_act,
    random_group_element,
)
from hyperball.kernels import (
    closed_form_wave_kernel,
    green_kernel,
    heat_kernel,
    heat_kernel_grid,
    projector_kernel,
    resolvent_kernel,
    shifted_wave_kernel,
    wave_kernel,
    wave_quadrature_spec,
    _continuous_coefficient,
)
from hyperball.params import Parameters, bergman_projector_constant, discrete_spectrum, new_parameters
from hyperball.quad import QuadratureSpec, ball_grid, integrate_halfline, sphere_grid
from hyperball.specfun import (
    gauss_2f1,
    jacobi_function_grid,
    jacobi_phi_block,
    jacobi_polynomial,
    log_gamma,
    plancherel_weight_grid,
)
from hyperball.transform import (
    fh_forward,
    fh_inverse,
    poisson_kernel,
    spherical_kernel,
    spherical_kernel_quadrature,
)

__all__ = ["TOLERANCES", "VerificationReport", "CHECKS", "run_check", "constant_audit"]

# Every tolerance used by the harness, in one place.
TOLERANCES = {
    "lemma31": 1e-8,
    "eigenfunctions": 1e-5,
    "intertwining": 1e-6,
    "heat_pde": 1e-4,
    "heat_long_time": 1e-6,
    "heat_laplace": 1e-6,
    "wave_pde": 1e-3,
    "wave_equality_cv": 1e-3,
    "prop61_cv": 1e-2,
    "prop62_cv": 1e-3,
    "prop62_tail_abs": 1e-8,
    "green_resolvent_cv": 1e-3,
    "projector_cross": 1e-6,
    "projector_kappa_cv": 1e-2,
    "atom_constant_ratio_cv": 1e-12,
    "inversion_l2": 1e-2,
    "audit_consistency": 1e-2,
    "semigroup_kappa_cv": 1e-2,
    "delta_kappa_cv": 1e-2,
}

_SEED_OFFSETS = {
    "lemma31": 101,
    "eigenfunctions": 103,
    "intertwining": 107,
    "heat_pde": 109,
    "wave_pde": 113,
    "semigroup": 127,
    "projectors": 131,
    "inversion": 137,
    "delta_pairing": 139,
    "wave_equality": 149,
    "prop61": 151,
    "prop62": 157,
    "green_resolvent": 163,
    "constant_audit": 167,
}


@dataclass
class VerificationReport:
    check_name: str
    params: dict
    lhs: complex
    rhs: Optional[complex] = None
    rhs_variants: Optional[list[tuple[str, complex]]] = None
    abs_err: float = 0.0
    rel_err: float = 0.0
    ratio: complex = 0.0
    ratio_cv: float = 0.0
    nodes: int = 0
    lambda_max: float = 0.0
    seed: int = 0
    passed: bool = False
    notes: str = ""

    def to_json_dict(self) -> dict:
        out: dict = {"check": self.check_name, "params": self.params}
        out["lhs"] = {"re": float(np.real(self.lhs)), "im": float(np.imag(self.lhs))}
        if self.rhs_variants is not None:
            out["rhs_variants"] = [
                {"label": lab, "re": float(np.real(v)), "im": float(np.imag(v))}
                for lab, v in self.rhs_variants
            ]
        else:
            rhs = self.rhs if self.rhs is not None else 0.0
            out["rhs"] = {"re": float(np.real(rhs)), "im": float(np.imag(rhs))}
        out["ratio"] = {"re": float(np.real(self.ratio)), "im": float(np.imag(self.ratio))}
        out["ratio_cv"] = float(self.ratio_cv)
        out["abs_err"] = float(self.abs_err)
        out["rel_err"] = float(self.rel_err)
        out["nodes"] = int(self.nodes)
        out["lambda_max"] = float(self.lambda_max)
        out["seed"] = int(self.seed)
        out["passed"] = bool(self.passed)
        out["notes"] = self.notes
        return out


def _rng(name: str, seed: int) -> np.random.Generator:
    return np.random.default_rng(seed + _SEED_OFFSETS[name])


def _rand_point(rng, n, rmax=0.55) -> BallPoint:
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    v /= np.linalg.norm(v)
    return BallPoint((0.05 + (rmax - 0.05) * rng.random()) * v)


def _cv(values: np.ndarray) -> float:
    values = np.asarray(values)
    mean = np.mean(values)
    if abs(mean) == 0.0:
        return float(np.max(np.abs(values)))
    return float(np.sqrt(np.mean(np.abs(values - mean) ** 2)) / abs(mean))


def _echo(p: Parameters, **kw) -> dict:
    base = {"n": p.n, "nu": p.nu}
    base.update(kw)
    return base


# -------------------------------------------------------------- lemma 3.1

def check_lemma31(p: Parameters, seed: int, spec: QuadratureSpec) -> VerificationReport:
    """Boundary-pairing identity: circle quadrature vs closed form at 20
    seeded (lambda, z, w)."""
    rng = _rng("lemma31", seed)
    worst = -1.0
    worst_pair = (0.0 + 0.0j, 0.0 + 0.0j)
    for _ in range(20):
        lam = 0.3 + 3.0 * rng.random()
        z = _rand_point(rng, p.n)
        w = _rand_point(rng, p.n)
        closed = spherical_kernel(p, lam, z, w)
        quad = spherical_kernel_quadrature(p, lam, z, w, angular=512 if p.n == 1 else 96)
        err = abs(closed - quad) / abs(closed)
        if err > worst:
            worst = err
            worst_pair = (quad, closed)
    tol = TOLERANCES["lemma31"]
    return VerificationReport(
        check_name="lemma31",
        params=_echo(p, samples=20),
        lhs=worst_pair[0],
        rhs=worst_pair[1],
        abs_err=abs(worst_pair[0] - worst_pair[1]),
        rel_err=worst,
        ratio=worst_pair[0] / worst_pair[1],
        seed=seed,
        passed=worst < tol,
        notes=f"max relative error over 20 samples; tolerance {tol}",
    )


# ---------------------------------------------------------- eigenfunctions

def check_eigenfunctions(p: Parameters, seed: int, spec: QuadratureSpec) -> VerificationReport:
    """Finite-difference Laplacian applied to the boundary eigenfunctions
    matches -(lambda^2 + (n-nu)^2) times them."""
    rng = _rng("eigenfunctions", seed)
    worst = -1.0
    worst_pair = (0.0 + 0.0j, 0.0 + 0.0j)
    for _ in range(10):
        lam = 0.3 + 2.5 * rng.random()
        z = _rand_point(rng, p.n, 0.5)
        omdir = rng.normal(size=p.n) + 1j * rng.normal(size=p.n)
        om = boundary_point(*(omdir / np.linalg.norm(omdir)))

        def field(pts):
            zw = np.sum(pts * np.conj(om.omega), axis=-1)
            base = 1.0 - zw
            ratio = (1.0 - np.sum(np.abs(pts) ** 2, axis=-1)) / np.abs(base) ** 2
            return ratio ** ((1j * lam + p.n - p.nu) / 2.0) * base ** (-p.nu)

        got = apply_delta_nu(p, field, z, richardson=True)
        want = -(lam**2 + (p.n - p.nu) ** 2) * poisson_kernel(p, lam, z, om)
        err = abs(got - want) / abs(want)
        if err > worst:
            worst = err
            worst_pair = (got, want)
    tol = TOLERANCES["eigenfunctions"]
    return VerificationReport(
        check_name="eigenfunctions",
        params=_echo(p, samples=10),
        lhs=worst_pair[0],
        rhs=worst_pair[1],
        abs_err=abs(worst_pair[0] - worst_pair[1]),
        rel_err=worst,
        ratio=worst_pair[0] / worst_pair[1],
        seed=seed,
        passed=worst < tol,
        notes=f"max FD eigenvalue residual over 10 samples; tolerance {tol}",
    )


# ------------------------------------------------------------ intertwining

def check_intertwining(p: Parameters, seed: int, spec: QuadratureSpec) -> VerificationReport:
    """Conjugation by (1-|z|^2)^{-gamma} shifts the two-parameter Laplacian
    family; checked at gamma = -nu/2 on seeded smooth fields."""
    rng = _rng("intertwining", seed)
    n, nu = p.n, p.nu
    gamma = -nu / 2.0
    alpha, beta = 0.0, -nu
    gp_lhs = GeneralizedLaplacianParams(alpha=alpha, beta=beta, n=n)
    gp_rhs = GeneralizedLaplacianParams(alpha=alpha - gamma, beta=beta - gamma, n=n)
    worst = -1.0
    worst_pair = (0.0 + 0.0j, 0.0 + 0.0j)
    for _ in range(4):
        a = 0.5 * (rng.normal(size=n) + 1j * rng.normal(size=n))
        b = 0.5 * (rng.normal(size=n) + 1j * rng.normal(size=n))
        c = 0.4 * rng.normal()

        def f(pts):
            lin = pts @ a + np.conj(pts) @ b
            return np.exp(lin) * (1.0 + c * np.sum(np.abs(pts) ** 2, axis=-1))

        def mf(pts):
            r2 = np.sum(np.abs(pts) ** 2, axis=-1)
            return (1.0 - r2) ** (-gamma) * f(pts)

        z = _rand_point(rng, n, 0.5)
        lhs = apply_delta_alpha_beta(gp_lhs, f, z, richardson=True)
        inner = apply_delta_alpha_beta(gp_rhs, mf, z, richardson=True)
        shift = 4.0 * gamma * (alpha + beta + n - gamma)
        r2 = float(np.sum(np.abs(z.z) ** 2))
        rhs = (1.0 - r2) ** gamma * (inner - shift * mf(z.z[None, :])[0])
        err = abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1.0)
        if err > worst:
            worst = err
            worst_pair = (lhs, rhs)
    tol = TOLERANCES["intertwining"]
    return VerificationReport(
        check_name="intertwining",
        params=_echo(p, gamma=gamma, samples=4),
        lhs=worst_pair[0],
        rhs=worst_pair[1],
        abs_err=abs(worst_pair[0] - worst_pair[1]),
        rel_err=worst,
        ratio=worst_pair[0] / worst_pair[1] if worst_pair[1] != 0 else 0.0,
        seed=seed,
        passed=worst < tol,
        notes=f"max conjugation residual over 4 smooth fields; tolerance {tol}",
    )


# ---------------------------------------------------------------- heat PDE

def check_heat_pde(p: Parameters, seed: int, spec: QuadratureSpec) -> VerificationReport:
    """d/dt K = Delta K for the heat kernel: finite differences in t against
    the FD-applied Laplacian, on the full kernel and (exactly) on the atoms."""
    rng = _rng("heat_pde", seed)
    tight = replace(spec, rel_tol=1e-11, oscillation_period=None)
    worst = -1.0
    worst_pair = (0.0 + 0.0j, 0.0 + 0.0j)
    kmax = 0.0
    samples = []
    for t in (0.1, 0.5, 1.0):
        for _ in range(2 if t < 1.0 else 1):
            z = _rand_point(rng, p.n, 0.4)
            w = _rand_point(rng, p.n, 0.4)
            samples.append((t, z, w))
    for t, z, w in samples:
        dt = t / 2000.0
        kp = heat_kernel(p, t + dt, z, w, tight).value
        km = heat_kernel(p, t - dt, z, w, tight).value
        kc = heat_kernel(p, t, z, w, tight).value
        dt_k = (kp - km) / (2.0 * dt)
        # K(t, u, w) as a field in u is conj(K(t, w, u)) by hermiticity
        lap = apply_delta_nu(
            p, lambda pts, t=t: np.conj(heat_kernel_grid(p, t, w, pts)), z, richardson=True
        )
        kmax = max(kmax, abs(kc))
        err = abs(dt_k - lap) / (abs(kc) + 1e-12 * max(kmax, 1.0))
        if err > worst:
            worst = err
            worst_pair = (dt_k, lap)
    # discrete part alone: exact eigen-decay rho_j tau_j e^{rho_j t} P_j
    z = _rand_point(rng, p.n, 0.4)
    w2 = _rand_point(rng, p.n, 0.4)
    t = 0.5
    datom = 0.0 + 0.0j
    for atom in discrete_spectrum(p):
        # tau_j pref P_j equals the projector kernel, so d/dt of the atom
        # part is rho_j e^{rho_j t} times it
        datom += atom.rho_j * math.exp(atom.rho_j * t) * projector_kernel(p, atom, z, w2).value

    def atom_field(pts):
        # atom part of K(t, u, w2) as a field in the FIRST argument u
        uz = np.sum(pts * np.conj(w2.z)[None, :], axis=-1)  # <u, w2>
        one = 1.0 - uz
        r2z = np.sum(np.abs(pts) ** 2, axis=-1)
        r2w = float(np.sum(np.abs(w2.z) ** 2))
        c2 = np.maximum(np.abs(one) ** 2 / ((1.0 - r2z) * (1.0 - r2w)), 1.0)
        cosh2d = 2.0 * c2 - 1.0
        out = np.zeros(pts.shape[0], dtype=complex)
        for atom in discrete_spectrum(p):
            out += atom.tau_j * math.exp(atom.rho_j * t) * one ** (-p.nu) * jacobi_polynomial(
                atom.j, p.n - 1.0, -p.nu, cosh2d
            )
        return out

    datom_fd = apply_delta_nu(p, atom_field, z, richardson=True)
    atom_scale = max(abs(datom), abs(datom_fd), 1e-3)
    atom_err = abs(datom - datom_fd) / atom_scale
    worst = max(worst, atom_err)
    tol = TOLERANCES["heat_pde"]
    return VerificationReport(
        check_name="heat_pde",
        params=_echo(p, times=[0.1, 0.5, 1.0]),
        lhs=worst_pair[0],
        rhs=worst_pair[1],
        abs_err=abs(worst_pair[0] - worst_pair[1]),
        rel_err=worst,
        ratio=worst_pair[0] / worst_pair[1] if worst_pair[1] != 0 else 0.0,
        seed=seed,
        passed=worst < tol,
        notes=f"max PDE residual (full kernel and atom part, atom residual {atom_err:.2e}); tolerance {tol}",
    )


def check_heat_long_time(p: Parameters, seed: int, spec: QuadratureSpec) -> VerificationReport:
    """At t = 50 only the zero-mode survives: K -> tau_0 (1-<z,w>)^{-nu}."""
    rng = _rng("heat_pde", seed + 1)
    z = _rand_point(rng, p.n, 0.5)
    w = _rand_point(rng, p.n, 0.5)
    got = heat_kernel(p, 50.0, z, w, spec).value
    tau0 = discrete_spectrum(p)[0].tau_j
    want = tau0 * (1.0 - hermitian_inner(z, w)) ** (-p.nu)
    rel = abs(got - want) / abs(want)
    tol = TOLERANCES["heat_long_time"]
    return VerificationReport(
        check_name="heat_long_time",
        params=_echo(p, t=50.0),
        lhs=got,
        rhs=want,
        abs_err=abs(got - want),
        rel_err=rel,
        ratio=got / want,
        seed=seed,
        passed=rel < tol,
        notes=f"long-time limit against tau_0 prefactor; tolerance {tol}",
    )


def check_heat_laplace(p: Parameters, seed: int, spec: QuadratureSpec) -> VerificationReport:
    """Laplace transform of the heat kernel equals the resolvent at xi = 2.

    The time quadrature uses t-dependent truncation lambda_max(t) =
    max(60, sqrt(50/t)+10) and starts at t0 = d^2/60 (the sub-t0 mass is
    below e^{-15}/pi)."""
    rng = _rng("heat_pde", seed + 2)
    z = _rand_point(rng, p.n, 0.4)
    w = _rand_point(rng, p.n, 0.4)
    xi = 2.0
    direct = resolvent_kernel(p, xi, z, w, replace(spec, rel_tol=1e-11)).value
    d = bergman_distance(z, w)
    t0 = d * d / 60.0
    edges = [t0, 0.02, 0.1, 0.5, 2.0, 8.0, 30.0]
    acc = 0.0 + 0.0j
    nodes = 0
    for a, b in zip(edges[:-1], edges[1:]):
        xs, ws = np.polynomial.legendre.leggauss(48)
        tt = a + 0.5 * (xs + 1.0) * (b - a)
        wt = 0.5 * ws * (b - a)
        for ti, wi in zip(tt, wt):
            lam_hi = max(60.0, math.sqrt(50.0 / ti) + 10.0)
            kval = heat_kernel(p, ti, z, w, replace(spec, rel_tol=1e-11, lambda_max=lam_hi)).value
            acc += wi * math.exp(-xi * ti) * kval
            nodes += 1
    tau0 = discrete_spectrum(p)[0].tau_j
    tail = tau0 * (1.0 - hermitian_inner(z, w)) ** (-p.nu) * math.exp(-xi * edges[-1]) / xi
    acc += tail
    rel = abs(acc - direct) / abs(direct)
    tol = TOLERANCES["heat_laplace"]
    return VerificationReport(
        check_name="heat_laplace",
        params=_echo(p, xi=xi),
        lhs=acc,
        rhs=direct,
        abs_err=abs(acc - direct),
        rel_err=rel,
        ratio=acc / direct,
        nodes=nodes,
        seed=seed,
        passed=rel < tol,
        notes=f"time-quadrature route vs direct resolvent; tolerance {tol}",
    )


# ---------------------------------------------------------------- wave PDE

def check_wave_pde(p: Parameters, seed: int, spec: QuadratureSpec) -> VerificationReport:
    """d^2/dt^2 W = Delta W in the regime d < |t| - 0.2, with one frozen
    oscillatory panel layout shared by every stencil evaluation."""
    rng = _rng("wave_pde", seed)
    worst = -1.0
    worst_pair = (0.0 + 0.0j, 0.0 + 0.0j)
    for t in (1.1, 1.6):
        for _ in range(2):
            z = _rand_point(rng, p.n, 0.25)
            w = _rand_point(rng, p.n, 0.25)
            d = bergman_distance(z, w)
            if d >= abs(t) - 0.25:
                w = ball_point(*(z.z * 0.5))
                d = bergman_distance(z, w)
            frozen = wave_quadrature_spec(p, t, d, replace(spec, rel_tol=1e-11))
            dt = 2e-3
            vals = [
                wave_kernel(p, t + k * dt, z, w, spec, quad_override=frozen).value
                for k in (-1, 0, 1)
            ]
            wtt = (vals[2] - 2.0 * vals[1] + vals[0]) / (dt * dt)
            lap = apply_delta_nu(
                p,
                lambda pts: _wave_grid(p, t, w, pts, frozen),
                z,
                richardson=True,
            )
            scale = abs(lap) + abs(vals[1]) + 1e-12
            err = abs(wtt - lap) / scale
            if err > worst:
                worst = err
                worst_pair = (wtt, lap)
    tol = TOLERANCES["wave_pde"]
    return VerificationReport(
        check_name="wave_pde",
        params=_echo(p, times=[1.1, 1.6]),
        lhs=worst_pair[0],
        rhs=worst_pair[1],
        abs_err=abs(worst_pair[0] - worst_pair[1]),
        rel_err=worst,
        ratio=worst_pair[0] / worst_pair[1] if worst_pair[1] != 0 else 0.0,
        seed=seed,
        passed=worst < tol,
        notes=f"max second-order PDE residual, regime d < |t| - 0.2; tolerance {tol}",
    )


def _wave_grid(p: Parameters, t: float, w: BallPoint, pts: np.ndarray, frozen: QuadratureSpec) -> np.ndarray:
    out = np.empty(pts.shape[0], dtype=complex)
    for k in range(pts.shape[0]):
        out[k] = wave_kernel(p, t, BallPoint(pts[k]), w, frozen, force=True, quad_override=frozen).value
    return out


# --------------------------------------------------------------- semigroup

def check_semigroup(p: Parameters, seed: int, spec: QuadratureSpec) -> VerificationReport:
    """K(t1) o K(t2) = kappa K(t1+t2) under the weighted ball composition;
    kappa fitted per (t1, t2) pair and checked for consistency."""
    rng = _rng("semigroup", seed)
    pts, wts = ball_grid(p, 48, 96)
    kappas = []
    for t1, t2 in ((0.2, 0.3), (0.5, 0.5)):
        for _ in range(2):
            z = _rand_point(rng, p.n, 0.35)
            w = _rand_point(rng, p.n, 0.35)
            k1 = heat_kernel_grid(p, t1, z, pts)  # K(t1, z, u)
            k2 = heat_kernel_grid(p, t2, w, pts)  # K(t2, w, u) = conj K(t2, u, w)
            comp = complex(np.sum(wts * k1 * np.conj(k2)))
            direct = heat_kernel(p, t1 + t2, z, w, replace(spec, rel_tol=1e-10)).value
            kappas.append(comp / direct)
    kappas = np.array(kappas)
    cv = _cv(kappas)
    tol = TOLERANCES["semigroup_kappa_cv"]
    return VerificationReport(
        check_name="semigroup",
        params=_echo(p, pairs=[[0.2, 0.3], [0.5, 0.5]]),
        lhs=kappas[0],
        rhs=1.0 + 0.0j,
        abs_err=float(abs(np.mean(kappas) - 1.0)),
        rel_err=cv,
        ratio=complex(np.mean(kappas)),
        ratio_cv=cv,
        seed=seed,
        passed=cv < tol,
        notes=f"fitted semigroup normalization kappa; expected 1.0 if printed constants exact; cv tolerance {tol}",
    )


# -------------------------------------------------------------- projectors

def check_projectors(p: Parameters, seed: int, spec: QuadratureSpec) -> VerificationReport:
    """Idempotence P_j o P_j = kappa_j P_j, cross-orthogonality P_0 o P_1,
    and the ratio of the two printed closed forms for the atom constants."""
    rng = _rng("projectors", seed)
    atoms = discrete_spectrum(p)
    kappas = []
    cross_rel = 0.0
    for _ in range(2):
        z = _rand_point(rng, p.n, 0.45)
        w = _rand_point(rng, p.n, 0.45)
        diag_comp = {}
        for atom in atoms[: min(len(atoms), 3)]:
            growth = 2 * atom.j
            pts, wts = ball_grid(p, 96, 128, boundary_growth=growth)
            shrink = (1.0 - np.sum(np.abs(pts) ** 2, axis=-1)) ** growth
            ku = _projector_grid(p, atom, z, pts)
            kw = _projector_grid(p, atom, w, pts)
            comp = complex(np.sum(wts * shrink * ku * np.conj(kw)))
            direct = projector_kernel(p, atom, z, w).value
            diag_comp[atom.j] = comp
            kappas.append(comp / direct)
        if len(atoms) >= 2:
            growth = atoms[0].j + atoms[1].j
            pts, wts = ball_grid(p, 96, 128, boundary_growth=growth)
            shrink = (1.0 - np.sum(np.abs(pts) ** 2, axis=-1)) ** growth
            k0 = _projector_grid(p, atoms[0], z, pts)
            k1 = _projector_grid(p, atoms[1], w, pts)
            cross = complex(np.sum(wts * shrink * k0 * np.conj(k1)))
            scale = math.sqrt(abs(diag_comp[0]) * abs(diag_comp[1]))
            cross_rel = max(cross_rel, abs(cross) / scale)
    kappas = np.array(kappas)
    kcv = _cv(kappas)
    # the two printed closed forms for the atom constant, on a (n, nu) grid
    ratios = []
    for n in (1, 2, 3):
        for dnu in (0.3, 1.4, 2.5, 3.6, 4.7):
            pg = new_parameters(n, n + dnu)
            for atom in discrete_spectrum(pg):
                ratios.append(atom.c_j / bergman_projector_constant(pg, atom.j))
    ratios = np.array(ratios)
    rcv = _cv(ratios)
    ok_cross = (cross_rel < TOLERANCES["projector_cross"]) if len(atoms) >= 2 else True
    ok_kcv = kcv < TOLERANCES["projector_kappa_cv"]
    ok_ratio = rcv < TOLERANCES["atom_constant_ratio_cv"]
    return VerificationReport(
        check_name="projectors",
        params=_echo(p, atoms=len(atoms)),
        lhs=kappas[0],
        rhs=1.0 + 0.0j,
        abs_err=cross_rel,
        rel_err=kcv,
        ratio=complex(np.mean(kappas)),
        ratio_cv=kcv,
        seed=seed,
        passed=ok_cross and ok_kcv and ok_ratio,
        notes=(
            f"idempotence kappa_j mean {np.mean(kappas).real:.6f} (cv {kcv:.2e}); "
            f"cross-energy {cross_rel:.2e}; printed atom-constant ratio c_j/A_j "
            f"= {np.mean(ratios):.12f} constant to cv {rcv:.2e} "
            "(expected 1.0 if printed constants exact)"
        ),
    )


def _projector_grid(p: Parameters, atom, z: BallPoint, pts: np.ndarray) -> np.ndarray:
    zv = z.z
    uz = np.sum(pts * np.conj(zv)[None, :], axis=-1)
    one = 1.0 - np.conj(uz)
    r2z = float(np.sum(np.abs(zv) ** 2))
    r2u = np.sum(np.abs(pts) ** 2, axis=-1)
    c2 = np.maximum(np.abs(one) ** 2 / ((1.0 - r2z) * (1.0 - r2u)), 1.0)
    cosh2d = 2.0 * c2 - 1.0
    poch = 1.0
    for m in range(atom.j):
        poch *= p.n + m
    fac = atom.c_j * math.factorial(atom.j) / poch
    return fac * one ** (-p.nu) * jacobi_polynomial(atom.j, p.n - 1.0, -p.nu, cosh2d)


# --------------------------------------------------------------- inversion

def _radial_bump(pts: np.ndarray) -> np.ndarray:
    u = np.sum(np.abs(pts) ** 2, axis=-1)
    r = np.sqrt(u)
    s = np.clip((r - 0.55) / 0.30, 0.0, 1.0 - 1e-14)
    cut = np.where(r <= 0.55, 1.0, np.where(r >= 0.85, 0.0, np.exp(1.0 - 1.0 / (1.0 - s**2))))
    return np.exp(-8.0 * u) * cut


def check_inversion(p: Parameters, seed: int, spec: QuadratureSpec) -> VerificationReport:
    """Round trip through the analysis/synthesis pair on a radial bump.

    The reconstruction is divided by the fitted kappa before the L^2 error
    is taken; kappa itself is reported (expected 1.0 if the printed
    constants were exact)."""
    lam_max = 26.0
    lams = np.arange(0.125, lam_max, 0.25)
    # the boundary kernel winds ~lam r/(1-r^2) cycles around the circle at
    # the outer reconstruction radii; 64 nodes keep the sphere mean aliasing-free
    n_om = 64
    omegas = [boundary_point(np.exp(2j * np.pi * k / n_om)) for k in range(n_om)]
    ftilde = np.array([fh_forward(p, _radial_bump, lam, omegas[0], grid=(128, 32)) for lam in lams])
    samples = np.repeat(ftilde[:, None], n_om, axis=1)  # radial field: omega-free
    atoms = discrete_spectrum(p)
    atom_samples = {}
    for atom in atoms:
        v = fh_forward(p, _radial_bump, atom.lambda_j, omegas[0], grid=(128, 32))
        atom_samples[atom.j] = np.full(n_om, v, dtype=complex)
    radii = np.array([0.0, 0.12, 0.25, 0.4, 0.52, 0.63, 0.72])
    rec = np.array(
        [
            fh_inverse(p, lams, omegas, samples, atom_samples, ball_point(r))
            for r in radii
        ]
    )
    truth = _radial_bump(radii[:, None].astype(complex))
    kappa = complex(np.sum(rec * truth) / np.sum(truth * truth))
    resid = np.linalg.norm(rec / kappa - truth) / np.linalg.norm(truth)
    # radiality of the reconstruction
    rot = fh_inverse(p, lams, omegas, samples, atom_samples, ball_point(0.4j))
    rad_dev = abs(rot - rec[3]) / abs(rec[3])
    tol = TOLERANCES["inversion_l2"]
    passed = resid < tol and rad_dev < 1e-6
    return VerificationReport(
        check_name="inversion",
        params=_echo(p, lambda_grid=len(lams), omega_grid=n_om),
        lhs=rec[3],
        rhs=complex(truth[3]),
        abs_err=float(np.max(np.abs(rec / kappa - truth))),
        rel_err=float(resid),
        ratio=kappa,
        ratio_cv=float(resid),
        lambda_max=lam_max,
        seed=seed,
        passed=bool(passed),
        notes=(
            f"round-trip L2 error {resid:.2e} after dividing by fitted kappa {kappa.real:.6f} "
            f"(expected 1.0 if printed constants exact); radiality deviation {rad_dev:.2e}; tolerance {tol}"
        ),
    )


# ----------------------------------------------------------- delta pairing

def check_delta_pairing(p: Parameters, seed: int, spec: QuadratureSpec) -> VerificationReport:
    """The spectral density paired with f = 1 against a bump reproduces the
    bump up to the global normalization: computed ball-first so the lambda
    integrand inherits the bump's smoothness."""
    pts, wts = ball_grid(p, 72, 96)
    bump = _radial_bump(pts)
    kappas = []
    for zz in (0.2, 0.35 + 0.1j):
        z = ball_point(zz)
        zv = z.z
        uz = np.sum(pts * np.conj(zv)[None, :], axis=-1)
        one = 1.0 - np.conj(uz)
        r2z = float(np.sum(np.abs(zv) ** 2))
        r2u = np.sum(np.abs(pts) ** 2, axis=-1)
        c2 = np.maximum(np.abs(one) ** 2 / ((1.0 - r2z) * (1.0 - r2u)), 1.0)
        dists = np.arccosh(np.sqrt(c2))
        pref = one ** (-p.nu)

        lam_hi = 40.0
        xs, ws = np.polynomial.legendre.leggauss(160)
        lams = 0.5 * lam_hi * (xs + 1.0)
        wls = 0.5 * lam_hi * ws
        weight = plancherel_weight_grid(p, lams)
        # B(lam) = ball integral of pref phi_lam(d) bump
        phi = jacobi_phi_block(p.n, p.nu, lams, dists)
        b_of_lam = (wts * bump * pref)[None, :] @ phi  # shape (1, nlam)
        cont = _continuous_coefficient(p) * complex(np.sum(wls * weight * b_of_lam[0]))
        disc = 0.0 + 0.0j
        for atom in discrete_spectrum(p):
            ku = _projector_grid(p, atom, z, pts)  # K_j(z, u) as a function of u
            disc += complex(np.sum(wts * bump * ku))
        val = cont + disc
        kappas.append(val / complex(_radial_bump(zv[None, :])[0]))
    kappas = np.array(kappas)
    cv = _cv(kappas)
    tol = TOLERANCES["delta_kappa_cv"]
    return VerificationReport(
        check_name="delta_pairing",
        params=_echo(p, points=2),
        lhs=kappas[0],
        rhs=1.0 + 0.0j,
        abs_err=float(abs(np.mean(kappas) - 1.0)),
        rel_err=cv,
        ratio=complex(np.mean(kappas)),
        ratio_cv=cv,
        lambda_max=40.0,
        seed=seed,
        passed=cv < tol,
        notes=f"delta-pairing normalization kappa; expected 1.0 if printed constants exact; cv tolerance {tol}",
    )


# ------------------------------------------------------------ wave equality

def check_wave_equality(p: Parameters, seed: int, spec: QuadratureSpec) -> VerificationReport:
    """Spectral wave kernel of the shifted operator vs the closed form;
    ratio mode over three seeded samples with d < |t|."""
    rng = _rng("wave_equality", seed)
    ratios = []
    pairs = []
    for t in (1.5, 2.0, 2.5):
        z = _rand_point(rng, p.n, 0.35)
        w = _rand_point(rng, p.n, 0.35)
        wk = shifted_wave_kernel(p, t, z, w, spec).value
        ck = closed_form_wave_kernel(p, t, z, w).value
        ratios.append(wk / ck)
        pairs.append((wk, ck))
    ratios = np.array(ratios)
    cv = _cv(ratios)
    tol = TOLERANCES["wave_equality_cv"]
    return VerificationReport(
        check_name="wave_equality",
        params=_echo(p, times=[1.5, 2.0, 2.5]),
        lhs=pairs[0][0],
        rhs=pairs[0][1],
        abs_err=float(abs(ratios[0] - 1.0)),
        rel_err=cv,
        ratio=complex(np.mean(ratios)),
        ratio_cv=cv,
        seed=seed,
        passed=cv < tol,
        notes=(
            f"fitted ratio {np.mean(ratios).real:.10f} (expected 1.0 if printed constants exact; "
            "deviation is a constants-erratum, not failure); cv tolerance "
            f"{tol}"
        ),
    )


# ---------------------------------------------------------------- prop 6.1

def _gamma_combo_grid(p: Parameters, lams: np.ndarray) -> np.ndarray:
    """|Gamma((i lam+n-nu)/2) Gamma((i lam+n+nu)/2) / Gamma(i lam)|^2,
    equal to |C|^{-2} Gamma(n)^2 2^{-2(nu-n)}."""
    return (
        plancherel_weight_grid(p, lams)
        * math.gamma(p.n) ** 2
        * 2.0 ** (-2.0 * (p.nu - p.n))
    )


def _prop61_lhs(p: Parameters, t: float, x: float, spec: QuadratureSpec):
    d = math.asinh(math.sqrt(x))
    fast = abs(t) + d
    slow = max(abs(abs(t) - d), 0.15 * fast)
    period = 2.0 * math.pi / slow
    points = max(48, 8 * int(math.ceil(fast * 0.5 * period / (2.0 * math.pi))) + 16)
    osc = replace(
        spec,
        oscillation_period=period,
        panel_points=points,
        lambda_max=max(spec.lambda_max, 200.0),
        accel_terms=max(spec.accel_terms, 24),
        rel_tol=min(spec.rel_tol, 1e-10),
    )

    def f(lams):
        return (
            _gamma_combo_grid(p, lams)
            / lams
            * np.sin(t * lams)
            * np.real(jacobi_function_grid(lams, p.n - 1.0, -p.nu, d))
        )

    return integrate_halfline(f, osc)


def _prop61_pieces(p: Parameters, t: float, x: float):
    """Closed-form term (both support variants) and the discrete sums."""
    n, nu = p.n, p.nu
    cht = math.cosh(t)
    chd = math.sqrt(1.0 + x)
    arg = 0.5 - cht / (2.0 * chd)
    f = np.real(gauss_2f1(1 - n + nu, 1 - n - nu, 1.5 - n, arg)) if abs(t) > 0 else 0.0
    out = {}
    for label, sup in (("verbatim_sinh2", math.sinh(t) ** 2 / (1.0 + x) - 1.0),
                       ("cosh2_support", cht**2 / (1.0 + x) - 1.0)):
        if sup <= 0.0:
            out[label] = 0.0
        else:
            out[label] = (
                (-1.0) ** (n - 1)
                * math.pi
                * math.gamma(n - 0.5)
                / math.gamma(n)
                * (1.0 + x) ** ((nu - n) / 2.0)
                * sup ** (0.5 - n)
                * f
            )
    s_paper = 0.0
    for atom in discrete_spectrum(p):
        wgt = (nu - n - 2 * atom.j) * math.exp(
            float(np.real(log_gamma(nu - atom.j) - log_gamma(nu - n - atom.j + 1)))
        )
        s_paper += (
            wgt
            * jacobi_polynomial(atom.j, n - 1.0, -nu, 2.0 * x + 1.0)
            * math.sinh(t * (2 * atom.j + n - nu))
            / (2 * atom.j + n - nu)
        )
    return out, s_paper


def check_prop61(
    p: Parameters,
    seed: int,
    spec: QuadratureSpec,
    samples: Optional[list[tuple[float, float]]] = None,
) -> VerificationReport:
    """Oscillatory-integral identity for the wave kernel, adjudicating the
    support-factor misprint by ratio-constancy.

    The audited atom sum (Bergman-weighted, coefficient 4 pi Gamma(n)) is
    moved to the LHS; the printed RHS's own discrete coefficient is
    inconsistent with its continuous term, so the raw printed-variant ratios
    are reported in the notes but cannot be sample-independent for either
    variant."""
    samples = samples or [(1.5, 0.5), (2.0, 0.8), (2.5, 1.2)]
    n = p.n
    if n != 1:
        raise ValueError("prop61 check is defined for n = 1")
    rows = []
    nodes = 0
    for t, x in samples:
        if not (0.0 <= x < math.sinh(abs(t)) ** 2 and x < math.sinh(abs(t))):
            raise ValueError(f"sample (t={t}, x={x}) outside the admissible window")
        res = _prop61_lhs(p, t, x, spec)
        nodes += res.nodes
        closed, s_paper = _prop61_pieces(p, t, x)
        # exact rearrangement: the integral's own atom content has coefficient
        # 4 pi Gamma(n) times the printed weights (verified against the
        # resolvent decomposition), so moving it left leaves the pure
        # closed-form shape on the right
        lhs_moved = res.value.real + 4.0 * math.pi * math.gamma(n) * s_paper
        rows.append((t, x, res.value.real, closed, s_paper, lhs_moved))
    labels = ("verbatim_sinh2", "cosh2_support")
    ratios = {
        label: np.array([r[5] / r[3][label] if r[3][label] != 0 else np.nan for r in rows])
        for label in labels
    }
    # raw printed RHS (for the record): closed term minus printed discrete sum
    raw_ratio = {}
    for label in labels:
        rr = []
        for r in rows:
            printed_rhs = r[3][label] - 2.0 ** (2 * (p.nu - n) + 2) * math.pi / math.gamma(n) * r[4]
            rr.append(r[2] / printed_rhs if printed_rhs != 0 else np.nan)
        raw_ratio[label] = rr
    cvs = {label: _cv(vals) for label, vals in ratios.items()}
    tol = TOLERANCES["prop61_cv"]
    winners = [label for label, cv in cvs.items() if cv < tol]
    passed = len(winners) == 1
    winner = winners[0] if winners else "none"
    mean_ratio = complex(np.mean(ratios[winner])) if winners else 0.0
    cv_text = {k: float(f"{v:.3e}") for k, v in cvs.items()}
    raw_text = {k: [float(f"{v:.4f}") for v in vv] for k, vv in raw_ratio.items()}
    return VerificationReport(
        check_name="prop61",
        params=_echo(p, samples=[list(s) for s in samples]),
        lhs=complex(rows[0][5]),
        rhs_variants=[(label, complex(rows[0][3][label])) for label in labels],
        abs_err=float(min(cvs.values())),
        rel_err=float(min(cvs.values())),
        ratio=mean_ratio,
        ratio_cv=float(cvs[winner]) if winners else float("nan"),
        nodes=nodes,
        lambda_max=max(spec.lambda_max, 200.0),
        seed=seed,
        passed=passed,
        notes=(
            f"winner={winner}; cv per variant {cv_text}; fitted ratio {mean_ratio.real:.8f} "
            "(constants-erratum if != 1); the discrete sum is moved to the LHS by exact "
            "rearrangement (the printed RHS's own discrete coefficient is inconsistent with "
            f"its continuous term); raw printed-RHS ratios {raw_text}"
        ),
    )


# ---------------------------------------------------------------- prop 6.2

def _prop62_lhs(p: Parameters, x: float, mu: complex, spec: QuadratureSpec, lam_max: float):
    d = math.asinh(math.sqrt(x))
    mu2 = (mu * mu).real
    osc = replace(
        spec,
        oscillation_period=2.0 * math.pi / d,
        lambda_max=lam_max,
        accel_terms=max(spec.accel_terms, 24),
        panel_points=max(spec.panel_points, 48),
        rel_tol=min(spec.rel_tol, 1e-11),
    )

    def f(lams):
        return (
            _gamma_combo_grid(p, lams)
            / (lams * lams - mu2)
            * np.real(jacobi_function_grid(lams, p.n - 1.0, -p.nu, d))
        )

    return integrate_halfline(f, osc)


def check_prop62(
    p: Parameters,
    seed: int,
    spec: QuadratureSpec,
    mu: complex = 5j,
    samples: Optional[list[float]] = None,
) -> VerificationReport:
    """Absolutely convergent integral identity for the resolvent,
    adjudicating the radial-exponent misprint across three variants."""
    samples = samples or [0.2, 0.5, 1.0]
    n, nu = p.n, p.nu
    if n != 1:
        raise ValueError("prop62 check is defined for n = 1")
    mu = complex(mu)
    mu2 = (mu * mu).real
    pnu = max(abs(a.s_j) for a in discrete_spectrum(p))
    if not mu2 < -pnu:
        raise ValueError("mu must satisfy Re(mu^2) < -max|s_j|")
    imu = 1j * mu  # real for purely imaginary mu
    combo = math.exp(float(np.real(log_gamma((n - 1j * mu + nu) / 2.0) + log_gamma((n - 1j * mu - nu) / 2.0) - log_gamma(1.0 - 1j * mu))))
    exponents = {
        "verbatim_quarter": (nu + imu.real) / 4.0 - n / 2.0,
        "derived_half": (nu + imu.real) / 2.0 - n,
        "half_shifted": (nu + imu.real - n) / 2.0,
    }
    rows = []
    nodes = 0
    lam_max = 800.0
    for x in samples:
        res = _prop62_lhs(p, x, mu, spec, lam_max)
        nodes += res.nodes
        q = 1.0 / (1.0 + x)
        f2 = np.real(gauss_2f1((n - 1j * mu + nu) / 2.0, (n - 1j * mu - nu) / 2.0, 1.0 - 1j * mu, q))
        s_paper = 0.0
        for atom in discrete_spectrum(p):
            wgt = (nu - n - 2 * atom.j) * math.exp(
                float(np.real(log_gamma(nu - atom.j) - log_gamma(nu - n - atom.j + 1)))
            )
            s_paper += wgt * jacobi_polynomial(atom.j, n - 1.0, -nu, 2.0 * x + 1.0) / (atom.s_j - mu2)
        variants = {}
        for label, expo in exponents.items():
            first = math.pi * 2.0 ** (2 * (nu - n)) * combo / math.gamma(n) * (1.0 + x) ** expo * f2
            disc = 4.0 * math.pi * 2.0 ** (2 * (nu - n)) / math.gamma(n) * s_paper
            variants[label] = first - disc
        rows.append((x, res.value.real, variants))
    ratios = {label: np.array([r[1] / r[2][label] for r in rows]) for label in exponents}
    cvs = {label: _cv(vals) for label, vals in ratios.items()}
    tol = TOLERANCES["prop62_cv"]
    winners = [label for label, cv in cvs.items() if cv < tol]
    passed = len(winners) == 1
    winner = winners[0] if winners else "none"
    mean_ratio = complex(np.mean(ratios[winner])) if winners else 0.0
    # tail stability: doubling lambda_max at the middle sample (whose
    # lam_max-truncated value is already in rows)
    mid_idx = len(samples) // 2
    v1 = rows[mid_idx][1]
    v2 = _prop62_lhs(p, samples[mid_idx], mu, spec, 2.0 * lam_max).value.real
    tail_move = abs(v1 - v2)
    passed = passed and tail_move < TOLERANCES["prop62_tail_abs"]
    return VerificationReport(
        check_name="prop62",
        params=_echo(p, mu=[mu.real, mu.imag], samples=samples),
        lhs=complex(rows[0][1]),
        rhs_variants=[(label, complex(rows[0][2][label])) for label in exponents],
        abs_err=tail_move,
        rel_err=float(min(cvs.values())),
        ratio=mean_ratio,
        ratio_cv=float(cvs[winner]) if winners else float("nan"),
        nodes=nodes,
        lambda_max=lam_max,
        seed=seed,
        passed=bool(passed),
        notes=(
            f"winner={winner}; cv per variant { {k: float(f'{v:.3e}') for k, v in cvs.items()} }; "
            f"fitted ratio {mean_ratio.real:.8f}; lambda_max doubling moved the integral by {tail_move:.2e} "
            f"(tolerance {TOLERANCES['prop62_tail_abs']})"
        ),
    )


# --------------------------------------------------------- green/resolvent

def check_green_resolvent(p: Parameters, seed: int, spec: QuadratureSpec, mu: complex = 5j) -> VerificationReport:
    """Green kernel vs the weighted resolvent at xi(mu) = 2 n nu - (mu^2 +
    nu^2 + n^2); both printed and paired radial-exponent readings of the
    Green kernel are carried and the ratio-constant one wins."""
    rng = _rng("green_resolvent", seed)
    mu = complex(mu)
    xi = 2.0 * p.n * p.nu - ((mu * mu) + p.nu**2 + p.n**2)
    if xi.real <= 0:
        raise ValueError("mu outside the admissible domain: Re xi(mu) <= 0")
    ratios = {"printed": [], "paired": []}
    first_vals = {}
    for k in range(3):
        z = _rand_point(rng, p.n, 0.45)
        w = _rand_point(rng, p.n, 0.45)
        wt = (1.0 - float(np.sum(np.abs(z.z) ** 2))) ** (p.nu / 2.0) * (
            1.0 - float(np.sum(np.abs(w.z) ** 2))
        ) ** (p.nu / 2.0)
        r = resolvent_kernel(p, xi, z, w, replace(spec, rel_tol=1e-11)).value
        for conv in ("printed", "paired"):
            g = green_kernel(p, mu, z, w, exponent_convention=conv).value
            ratios[conv].append(g / (wt * r))
            if k == 0:
                first_vals[conv] = g
    cvs = {conv: _cv(np.array(v)) for conv, v in ratios.items()}
    tol = TOLERANCES["green_resolvent_cv"]
    winners = [c for c, cv in cvs.items() if cv < tol]
    passed = len(winners) == 1
    winner = winners[0] if winners else "none"
    mean_ratio = complex(np.mean(ratios[winner])) if winners else 0.0
    return VerificationReport(
        check_name="green_resolvent",
        params=_echo(p, mu=[mu.real, mu.imag], xi=[xi.real, xi.imag]),
        lhs=first_vals["printed"],
        rhs_variants=[(c, first_vals[c]) for c in ("printed", "paired")],
        abs_err=float(abs(mean_ratio - 1.0)) if winners else float("nan"),
        rel_err=float(min(cvs.values())),
        ratio=mean_ratio,
        ratio_cv=float(cvs[winner]) if winners else float("nan"),
        seed=seed,
        passed=passed,
        notes=(
            f"winner={winner}; cv per variant { {k: float(f'{v:.3e}') for k, v in cvs.items()} }; "
            f"fitted ratio {mean_ratio.real:.8f}"
        ),
    )


# ------------------------------------------------------------ global audit

def constant_audit(p: Parameters, seed: int, spec: QuadratureSpec) -> VerificationReport:
    """Aggregate the fitted normalization from the four independent sources
    and require mutual consistency: one global constant must explain them."""
    semi = check_semigroup(p, seed, spec)
    proj = check_projectors(p, seed, spec)
    inv = check_inversion(p, seed, spec)
    delta = check_delta_pairing(p, seed, spec)
    estimates = {
        "semigroup": semi.ratio.real,
        "projectors": proj.ratio.real,
        "inversion": inv.ratio.real,
        "delta_pairing": delta.ratio.real,
    }
    vals = np.array(list(estimates.values()))
    spread = float(np.max(vals) / np.min(vals) - 1.0)
    tol = TOLERANCES["audit_consistency"]
    consensus = float(np.mean(vals))
    return VerificationReport(
        check_name="constant_audit",
        params=_echo(p),
        lhs=complex(consensus),
        rhs=1.0 + 0.0j,
        abs_err=spread,
        rel_err=spread,
        ratio=complex(consensus),
        ratio_cv=_cv(vals),
        seed=seed,
        passed=spread < tol,
        notes=(
            f"kappa estimates { {k: float(f'{v:.6f}') for k, v in estimates.items()} }; "
            f"consensus {consensus:.6f}; expected 1.0 if paper constants are exact; "
            f"mutual spread {spread:.2e} (tolerance {tol})"
        ),
    )


CHECKS: dict[str, Callable[..., VerificationReport]] = {
    "lemma31": check_lemma31,
    "eigenfunctions": check_eigenfunctions,
    "intertwining": check_intertwining,
    "heat_pde": check_heat_pde,
    "heat_long_time": check_heat_long_time,
    "heat_laplace": check_heat_laplace,
    "wave_pde": check_wave_pde,
    "semigroup": check_semigroup,
    "projectors": check_projectors,
    "inversion": check_inversion,
    "delta_pairing": check_delta_pairing,
    "wave_equality": check_wave_equality,
    "prop61": check_prop61,
    "prop62": check_prop62,
    "green_resolvent": check_green_resolvent,
    "constant_audit": constant_audit,
}


def run_check(name: str, p: Parameters, seed: int, spec: QuadratureSpec, **kw) -> VerificationReport:
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r}; known: {sorted(CHECKS)}")
    return CHECKS[name](p, seed, spec, **kw)
