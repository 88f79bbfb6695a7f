import math

import pytest

from hyperball.params import (
    atom_count,
    bergman_projector_constant,
    discrete_spectrum,
    new_parameters,
    resolvent_abscissa,
)


def test_valid_construction():
    p = new_parameters(1, 2.5)
    assert p.n == 1 and p.nu == 2.5


def test_nu_must_exceed_n():
    with pytest.raises(ValueError, match="must exceed n"):
        new_parameters(1, 1.0)
    with pytest.raises(ValueError, match="must exceed n"):
        new_parameters(2, 1.7)


def test_nu_must_be_non_integer():
    with pytest.raises(ValueError, match="non-integer"):
        new_parameters(2, 3.0)
    with pytest.raises(ValueError, match="non-integer"):
        new_parameters(1, 4.0 + 1e-12)
    # configurable tolerance
    new_parameters(1, 4.0 + 1e-7)
    with pytest.raises(ValueError, match="non-integer"):
        new_parameters(1, 4.0 + 1e-7, integrality_tol=1e-6)


def test_n_positive_integer():
    with pytest.raises(ValueError):
        new_parameters(0, 2.5)
    with pytest.raises(ValueError):
        new_parameters(-1, 2.5)


def test_single_atom_n1_nu25():
    atoms = discrete_spectrum(new_parameters(1, 2.5))
    assert len(atoms) == 1
    a = atoms[0]
    assert a.j == 0
    assert a.lambda_j == pytest.approx(-1.5j)
    assert a.s_j == pytest.approx(-2.25)
    assert a.rho_j == 0.0
    assert a.c_j == pytest.approx(3.0 / math.pi, rel=1e-14)
    assert a.tau_j == pytest.approx(a.c_j, rel=1e-14)


def test_two_atoms_n1_nu35():
    atoms = discrete_spectrum(new_parameters(1, 3.5))
    assert len(atoms) == 2
    assert atoms[0].s_j == pytest.approx(-6.25)
    assert atoms[1].s_j == pytest.approx(-0.25)
    # c_1 from the closed form: for n=1 the gamma quotient cancels exactly,
    # c_j = 2 (nu-1-2j) / pi
    assert atoms[1].c_j == pytest.approx(2.0 * 0.5 / math.pi, rel=1e-14)


def test_atom_count_floor():
    assert atom_count(new_parameters(2, 2.5)) == 1
    assert atom_count(new_parameters(1, 2.5)) == 1
    assert atom_count(new_parameters(1, 3.5)) == 2
    assert atom_count(new_parameters(1, 7.1)) == 4


def test_atom_count_monotone_in_nu():
    prev = 0
    for nu in [1.3, 2.1, 2.9, 3.7, 4.5, 5.3, 6.1]:
        c = atom_count(new_parameters(1, nu))
        assert c >= prev
        prev = c


def test_resolvent_abscissa_zero():
    for n, nu in [(1, 2.5), (1, 3.5), (2, 4.5)]:
        assert resolvent_abscissa(new_parameters(n, nu)) == pytest.approx(0.0, abs=1e-12)


def test_rho_consistency():
    # rho_j = 4 j (j+n-nu) and rho_j = -(s_j + (n-nu)^2) must agree
    for n, nu in [(1, 2.5), (1, 5.7), (2, 6.3), (3, 7.9)]:
        p = new_parameters(n, nu)
        for a in discrete_spectrum(p):
            alt = -(a.s_j + (n - nu) ** 2)
            assert abs(a.rho_j - alt) < 1e-12 * (1.0 + abs(a.rho_j))
            assert a.s_j < 0
            assert a.rho_j <= 0
            assert (a.rho_j == 0) == (a.j == 0)


def test_tau_c_relation():
    # tau_j * (n)_j / j! == c_j
    for n, nu in [(1, 4.5), (2, 5.3), (3, 6.9)]:
        p = new_parameters(n, nu)
        for a in discrete_spectrum(p):
            poch = 1.0
            for m in range(a.j):
                poch *= n + m
            assert a.tau_j * poch / math.factorial(a.j) == pytest.approx(a.c_j, rel=1e-14)


def test_atom_constant_vs_bergman_constant_ratio():
    # The two printed closed forms differ by a global factor; the ratio is
    # exactly 2 for every atom on the whole grid.
    for n in (1, 2, 3):
        for dnu in (0.3, 1.1, 2.3, 3.5, 4.7):
            p = new_parameters(n, n + dnu)
            for a in discrete_spectrum(p):
                ratio = a.c_j / bergman_projector_constant(p, a.j)
                assert ratio == pytest.approx(2.0, rel=1e-13)
