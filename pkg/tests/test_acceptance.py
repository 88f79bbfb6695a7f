"""Acceptance suite: every exit criterion, each printing one pass/fail line.

The full verification run (all checks, seed 7, default parameters) is shared
across criteria through a module fixture and repeated once for the
determinism criterion.  Criterion 11's closed-form equality clause is
implemented exactly as stated; the two printed closed forms differ by a
constant factor of 2 (measured throughout the harness as the global
normalization), so that single assertion documents the discrepancy rather
than hiding it.
"""

import csv
import json
import math
import os
import pathlib

import numpy as np
import pytest

from hyperball.geometry import ball_point
from hyperball.kernels import wave_kernel
from hyperball.params import bergman_projector_constant, discrete_spectrum, new_parameters
from hyperball.quad import QuadratureSpec
from hyperball.specfun import gauss_2f1, log_gamma
from hyperball.verify import CHECKS, TOLERANCES, run_check

P = new_parameters(1, 2.5)
SPEC = QuadratureSpec()
SEED = 7


def _report_line(num, name, passed, detail=""):
    mark = "PASS" if passed else "FAIL"
    print(f"[criterion {num:>3}] {mark}  {name}  {detail}")


@pytest.fixture(scope="module")
def suite():
    """One full verification run: name -> (report, serialized bytes)."""
    out = {}
    for name in sorted(CHECKS):
        r = run_check(name, P, SEED, SPEC)
        out[name] = (r, json.dumps(r.to_json_dict(), indent=2).encode())
    return out


# ------------------------------------------------------------- criterion 1

def test_criterion_1_special_functions():
    lams = np.linspace(0.1, 30.0, 600)
    vals = np.exp(2.0 * np.real(log_gamma(1j * lams)))
    gamma_worst = float(np.max(np.abs(vals * lams * np.sinh(np.pi * lams) / np.pi - 1.0)))

    fixdir = os.environ.get("HYPERBALL_FIXTURES")
    if fixdir:
        path = pathlib.Path(fixdir) / "specfun_oracle.csv"
    else:
        import hyperball

        path = pathlib.Path(hyperball.__file__).parent / "fixtures" / "specfun_oracle.csv"
    rows = list(csv.DictReader(path.open()))
    worst_2f1 = 0.0
    for row in rows:
        a = complex(float(row["a_re"]), float(row["a_im"]))
        b = complex(float(row["b_re"]), float(row["b_im"]))
        c = complex(float(row["c_re"]), float(row["c_im"]))
        ref = complex(float(row["f_re"]), float(row["f_im"]))
        got = gauss_2f1(a, b, c, float(row["x"]))
        worst_2f1 = max(worst_2f1, abs(got - ref) / max(abs(ref), 1e-300))
    ok = gamma_worst < 1e-12 and len(rows) == 200 and worst_2f1 < 1e-10
    _report_line(1, "special functions", ok, f"gamma identity {gamma_worst:.2e}, 2F1 vs oracle {worst_2f1:.2e} on {len(rows)} cases")
    assert gamma_worst < 1e-12
    assert len(rows) == 200
    assert worst_2f1 < 1e-10


# ------------------------------------------------------------- criterion 2

def test_criterion_2_boundary_pairing(suite):
    r = suite["lemma31"][0]
    _report_line(2, "boundary pairing identity", r.passed, f"max rel err {r.rel_err:.2e} over 20 samples (tol 1e-8)")
    assert r.passed and r.rel_err < 1e-8


# ------------------------------------------------------------- criterion 3

def test_criterion_3_eigenfunctions(suite):
    r1 = suite["eigenfunctions"][0]
    r2 = run_check("eigenfunctions", new_parameters(2, 3.7), SEED, SPEC)
    ok = r1.passed and r2.passed and r1.rel_err < 1e-5 and r2.rel_err < 1e-5
    _report_line(3, "boundary eigenfunctions (n=1,2)", ok, f"residuals {r1.rel_err:.2e} / {r2.rel_err:.2e} (tol 1e-5)")
    assert ok


# ------------------------------------------------------------- criterion 4

def test_criterion_4_intertwining(suite):
    r = suite["intertwining"][0]
    _report_line(4, "conjugation intertwining", r.passed, f"residual {r.rel_err:.2e} (tol 1e-6)")
    assert r.passed and r.rel_err < 1e-6


# ------------------------------------------------------------- criterion 5

def test_criterion_5_heat(suite):
    pde = suite["heat_pde"][0]
    lt = suite["heat_long_time"][0]
    lap = suite["heat_laplace"][0]
    ok = pde.passed and lt.passed and lap.passed
    _report_line(
        5, "heat kernel", ok,
        f"PDE {pde.rel_err:.2e} (tol 1e-4); long-time {lt.rel_err:.2e} (tol 1e-6); Laplace {lap.rel_err:.2e} (tol 1e-6)",
    )
    assert pde.passed and pde.rel_err < 1e-4
    assert lt.passed and lt.rel_err < 1e-6
    assert lap.passed and lap.rel_err < 1e-6


# ------------------------------------------------------------- criterion 6

def test_criterion_6_wave(suite):
    pde = suite["wave_pde"][0]
    zero = wave_kernel(P, 0.0, ball_point(0.1), ball_point(0.2), SPEC).value
    a = wave_kernel(P, 1.2, ball_point(0.0), ball_point(0.25), SPEC).value
    b = wave_kernel(P, -1.2, ball_point(0.0), ball_point(0.25), SPEC).value
    odd = abs(a + b) / abs(a)
    ok = pde.passed and zero == 0.0 and odd < 1e-9
    _report_line(6, "wave kernel PDE", ok, f"residual {pde.rel_err:.2e} (tol 1e-3); W(0)={abs(zero)}; oddness {odd:.2e}")
    assert pde.passed and pde.rel_err < 1e-3
    assert zero == 0.0
    assert odd < 1e-9


# ------------------------------------------------------------- criterion 7

def test_criterion_7_wave_equality(suite):
    r = suite["wave_equality"][0]
    _report_line(
        7, "spectral vs closed-form wave kernel", r.passed,
        f"ratio_cv {r.ratio_cv:.2e} (tol 1e-3); fitted ratio {r.ratio.real:.8f} (constants-erratum, documented)",
    )
    assert r.passed and r.ratio_cv < 1e-3


# ------------------------------------------------------------- criterion 8

def test_criterion_8_oscillatory_integral_identity(suite):
    r = suite["prop61"][0]
    winner_is_cosh = "winner=cosh2_support" in r.notes
    ok = r.passed and r.ratio_cv < 1e-2 and winner_is_cosh
    _report_line(
        8, "wave-route integral identity", ok,
        f"unique winner with cv {r.ratio_cv:.2e} (tol 1e-2); fitted ratio {r.ratio.real:.6f}",
    )
    assert r.passed
    assert r.ratio_cv < 1e-2
    assert winner_is_cosh


# ------------------------------------------------------------- criterion 9

def test_criterion_9_resolvent_route_identity(suite):
    r = suite["prop62"][0]
    ok = r.passed and r.ratio_cv < 1e-3 and r.abs_err < 1e-8
    _report_line(
        9, "resolvent-route integral identity", ok,
        f"unique winner with cv {r.ratio_cv:.2e} (tol 1e-3); tail doubling {r.abs_err:.2e} (tol 1e-8); ratio {r.ratio.real:.6f}",
    )
    assert r.passed
    assert r.ratio_cv < 1e-3
    assert r.abs_err < 1e-8


# ------------------------------------------------------------ criterion 10

def test_criterion_10_green_resolvent(suite):
    r = suite["green_resolvent"][0]
    _report_line(10, "Green kernel vs weighted resolvent", r.passed, f"cv {r.ratio_cv:.2e} (tol 1e-3); ratio {r.ratio.real:.6f}")
    assert r.passed and r.ratio_cv < 1e-3


# ------------------------------------------------------------ criterion 11

def test_criterion_11ab_projectors():
    p2 = new_parameters(1, 3.5)
    r = run_check("projectors", p2, SEED, SPEC)
    ok = r.passed and r.abs_err < 1e-6 and r.ratio_cv < 1e-2
    _report_line(
        11, "projector idempotence/orthogonality", ok,
        f"cross-energy {r.abs_err:.2e} (tol 1e-6); kappa_j cv {r.ratio_cv:.2e} (tol 1e-2); kappa {r.ratio.real:.6f}",
    )
    assert r.passed
    assert r.abs_err < 1e-6
    assert r.ratio_cv < 1e-2


def test_criterion_11c_atom_constant_closed_forms():
    """The two printed closed forms for the atom constant, asserted equal at
    rel 1e-12 as the criterion states.

    Measured fact (see the projector check's notes): the forms differ by
    exactly the factor 2 on the whole grid, the same global normalization
    the constant audit measures everywhere else, so this assertion fails
    honestly rather than being loosened.
    """
    worst = 0.0
    worst_case = None
    for n in (1, 2, 3):
        for dnu in (0.3, 1.4, 2.5, 3.6, 4.7):
            p = new_parameters(n, n + dnu)
            for atom in discrete_spectrum(p):
                a = bergman_projector_constant(p, atom.j)
                rel = abs(atom.c_j - a) / abs(a)
                if rel > worst:
                    worst = rel
                    worst_case = (n, n + dnu, atom.j, atom.c_j, a)
    ok = worst < 1e-12
    _report_line(
        11, "atom-constant closed forms agree (as printed)", ok,
        f"worst rel diff {worst:.3e} at (n,nu,j)={worst_case[:3]}; c_j={worst_case[3]:.6f} vs {worst_case[4]:.6f} "
        "(constant ratio 2: known printed-constants erratum, reported by the harness)",
    )
    assert worst < 1e-12, (
        f"printed closed forms differ by ratio {worst_case[3]/worst_case[4]:.12f}; "
        "the harness reports this constant-2 discrepancy as the global normalization erratum"
    )


# ------------------------------------------------------------ criterion 12

def test_criterion_12_inversion_and_audit(suite):
    inv = suite["inversion"][0]
    audit = suite["constant_audit"][0]
    ok = inv.passed and audit.passed
    _report_line(
        12, "round trip + constant audit", ok,
        f"L2 {inv.rel_err:.2e} (tol 1e-2) after kappa {inv.ratio.real:.6f}; audit spread {audit.abs_err:.2e} "
        f"(tol 1e-2), consensus {audit.ratio.real:.6f}",
    )
    assert inv.passed and inv.rel_err < 1e-2
    assert audit.passed and audit.abs_err < 1e-2


# ------------------------------------------------------------ criterion 13

def test_criterion_13_determinism(suite):
    mismatched = []
    for name in sorted(CHECKS):
        r = run_check(name, P, SEED, SPEC)
        again = json.dumps(r.to_json_dict(), indent=2).encode()
        if again != suite[name][1]:
            mismatched.append(name)
    ok = not mismatched
    _report_line(13, "byte-identical reports across reruns", ok, f"checks compared: {len(CHECKS)}; mismatches: {mismatched}")
    assert not mismatched
