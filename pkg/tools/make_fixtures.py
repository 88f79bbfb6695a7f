"""Regenerate the pinned oracle fixtures.

Run from the repository root:

    python3 tools/make_fixtures.py specfun
    python3 tools/make_fixtures.py kernels

The 2F1 fixture values come from mpmath at 50 decimal digits and are written
with 17 significant digits; the kernel fixture values come from high-node
reference quadratures computed here, independent of the library's adaptive
paths.  Both CSVs are committed under src/hyperball/fixtures/ and the test
suite only reads them.
"""

from __future__ import annotations

import csv
import pathlib
import sys

FIXDIR = pathlib.Path(__file__).resolve().parent.parent / "src" / "hyperball" / "fixtures"


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def specfun_cases():
    cases = []
    # conjugate-parameter kernel shapes
    for n, nu in ((1, 2.5), (1, 4.3), (2, 3.7)):
        for lam in (0.5, 1.0, 2.3, 5.0, 8.0, 12.0):
            a = complex((n - nu) / 2.0, -lam / 2.0)
            b = complex((n - nu) / 2.0, lam / 2.0)
            for x in (-50.0, -10.0, -3.0, -0.8, -0.5, 0.0, 0.3):
                cases.append((a, b, complex(n), x))
    # real-parameter assortment
    for a in (0.5, 1.7, -1.2, 3.3):
        for b in (3.0, -2.5, 0.25):
            for x in (-20.0, -1.0, 0.4, 0.9):
                cases.append((complex(a), complex(b), complex(2.5), x))
    # imaginary second parameter
    for x in (-5.0, -0.5, 0.0, 0.6):
        cases.append((complex(0.7), complex(0.0, -1.2), complex(2.5), x))
    # terminating cases
    for j in range(6):
        for x in (-30.0, -2.0, 0.5, 0.9):
            cases.append((complex(-j), complex(j + 1 - 2.5), complex(1.0), x))
        cases.append((complex(-j), complex(0.4, 0.9), complex(3.2), -7.0))
    # 2F1(a, b; b; x) = (1-x)^{-a}
    for x in (-3.0, 0.25):
        cases.append((complex(0.5), complex(3.0), complex(3.0), x))
    # near-log case a=b=1, c=2
    for x in (-1.0, -9.0, 0.7):
        cases.append((complex(1.0), complex(1.0), complex(2.0), x))
    return cases[:200]


def write_specfun():
    import mpmath as mp

    mp.mp.dps = 50

    def _mp(v: complex):
        # keep exact integers integral so mpmath sees terminating cases
        if v.imag == 0.0:
            return int(v.real) if v.real == int(v.real) else mp.mpf(v.real)
        return mp.mpc(v)

    def _hyp2f1(a, b, c, x):
        # explicit finite sum for terminating cases (mpmath's relative-accuracy
        # target cannot be met when the exact value is 0)
        for p, q in ((a, b), (b, a)):
            if p.imag == 0 and p.real <= 0 and p.real == int(p.real):
                m = int(-p.real)
                term = mp.mpf(1)
                tot = mp.mpf(1)
                for k in range(m):
                    term = term * (-m + k) * (_mp(q) + k) * mp.mpf(x) / ((_mp(c) + k) * (k + 1))
                    tot += term
                return tot
        return mp.hyp2f1(_mp(a), _mp(b), _mp(c), mp.mpf(x))

    rows = []
    for a, b, c, x in specfun_cases():
        f = mp.mpc(_hyp2f1(a, b, c, x))
        rows.append(
            [
                _fmt(a.real), _fmt(a.imag),
                _fmt(b.real), _fmt(b.imag),
                _fmt(c.real), _fmt(c.imag),
                _fmt(x),
                _fmt(float(f.real)), _fmt(float(f.imag)),
            ]
        )
    out = FIXDIR / "specfun_oracle.csv"
    with out.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["a_re", "a_im", "b_re", "b_im", "c_re", "c_im", "x", "f_re", "f_im"])
        w.writerows(rows)
    print(f"wrote {out} ({len(rows)} cases)")


def write_kernels():
    """Pinned kernel values from reference quadratures (see kernel_reference)."""
    from kernel_reference import reference_rows

    out = FIXDIR / "kernel_oracle.csv"
    rows = reference_rows()
    with out.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["name", "n", "nu", "arg", "z_re", "z_im", "w_re", "w_im", "value_re", "value_im", "settings"])
        for r in rows:
            w.writerow(r)
    print(f"wrote {out} ({len(rows)} cases)")


if __name__ == "__main__":
    which = sys.argv[1] if len(sys.argv) > 1 else "all"
    if which in ("specfun", "all"):
        write_specfun()
    if which in ("kernels", "all"):
        sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))
        write_kernels()
