"""Command-line front end: evaluate kernels on grids and run the
verification suite, writing plot-ready CSV and machine-readable JSON.

Outputs are locale-independent (decimal point, 17 significant digits, LF
line endings) and every file embeds the parameters, quadrature settings,
seed and artifact version in a leading '#' comment line.  Reports are
deterministic given (params, seed): two runs produce byte-identical files.
"""

from __future__ import annotations

import json
import math
import pathlib
import sys

import click
import numpy as np

import hyperball
from hyperball.geometry import BallPoint, BoundaryPoint, ball_point, bergman_distance
from hyperball.kernels import (
    RegimeError,
    closed_form_wave_kernel,
    green_kernel,
    heat_kernel,
    projector_kernel,
    resolvent_kernel,
    spectral_density_continuous,
    wave_kernel,
)
from hyperball.params import discrete_spectrum, new_parameters
from hyperball.quad import QuadratureSpec
from hyperball.specfun import PoleError
from hyperball.transform import poisson_kernel
from hyperball.verify import CHECKS, run_check

EVAL_KINDS = ("heat", "wave", "resolvent", "density", "projector", "green", "poisson")


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _parse_complex(text: str) -> complex:
    return complex(text.replace(" ", "").replace("i", "j"))


def _parse_point(text: str) -> np.ndarray:
    return np.array([_parse_complex(c) for c in text.split(",")], dtype=complex)


def _parse_grid(text: str) -> list[np.ndarray]:
    """Grid strings: 'radial:start:stop:count' or 'list:v1,v2,...' (complex
    scalars; multi-coordinate points separated by ';')."""
    kind, _, rest = text.partition(":")
    if kind == "radial":
        start_s, stop_s, count_s = rest.split(":")
        radii = np.linspace(float(start_s), float(stop_s), int(count_s))
        return [np.array([complex(r)]) for r in radii]
    if kind == "list":
        return [_parse_point(part) for part in rest.split(";")]
    raise click.UsageError(f"unknown grid syntax {text!r} (use radial:... or list:...)")


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    cfg = json.loads(pathlib.Path(path).read_text())
    known = {"n", "nu", "seed", "rel_tol", "abs_tol", "lambda_max", "panel_points", "accel_terms", "format", "out"}
    unknown = set(cfg) - known
    if unknown:
        raise click.UsageError(f"unknown config keys: {sorted(unknown)}")
    return cfg


def _build(cfg: dict, n, nu, seed, lambda_max, rel_tol):
    n = n if n is not None else cfg.get("n", 1)
    nu = nu if nu is not None else cfg.get("nu", 2.5)
    seed = seed if seed is not None else cfg.get("seed", 0)
    p = new_parameters(int(n), float(nu))
    spec = QuadratureSpec(
        rel_tol=float(rel_tol if rel_tol is not None else cfg.get("rel_tol", 1e-8)),
        abs_tol=float(cfg.get("abs_tol", 1e-12)),
        lambda_max=float(lambda_max if lambda_max is not None else cfg.get("lambda_max", 60.0)),
        panel_points=int(cfg.get("panel_points", 32)),
        accel_terms=int(cfg.get("accel_terms", 12)),
    )
    return p, spec, int(seed)


def _header(p, spec, seed) -> str:
    return (
        f"# hyperball {hyperball.__version__} n={p.n} nu={_fmt(p.nu)} seed={seed} "
        f"rel_tol={_fmt(spec.rel_tol)} lambda_max={_fmt(spec.lambda_max)} "
        f"panel_points={spec.panel_points} accel_terms={spec.accel_terms}\n"
    )


@click.group()
def main():
    """Spectral kernels of the weighted invariant Laplacian on the complex ball."""


@main.command("eval")
@click.argument("kind", type=click.Choice(EVAL_KINDS))
@click.option("--n", type=int, default=None, help="complex dimension")
@click.option("--nu", type=float, default=None, help="weight parameter (> n, non-integer)")
@click.option("--t", type=float, default=None, help="time (heat/wave)")
@click.option("--xi", type=str, default=None, help="resolvent parameter, complex")
@click.option("--mu", type=str, default=None, help="Green-kernel parameter, complex")
@click.option("--s", type=float, default=None, help="spectral value (density)")
@click.option("--j", type=int, default=None, help="atom index (projector)")
@click.option("--lam", "--lambda", "lam", type=float, default=None, help="boundary frequency (poisson)")
@click.option("--z", type=str, default="0", help="first point, e.g. 0.3+0.1j or 0.1,0.2j for n=2")
@click.option("--w", type=str, default=None, help="second point")
@click.option("--w-grid", type=str, default=None, help="grid of second points (radial:a:b:k or list:...)")
@click.option("--omega", type=str, default="1", help="boundary point (poisson)")
@click.option("--seed", type=int, default=None)
@click.option("--config", type=click.Path(exists=True), default=None)
@click.option("--out", type=click.Path(), default=None)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--lambda-max", type=float, default=None)
@click.option("--rel-tol", type=float, default=None)
def cmd_eval(kind, n, nu, t, xi, mu, s, j, lam, z, w, w_grid, omega, seed, config, out, fmt, lambda_max, rel_tol):
    """Evaluate one kernel on a point or a grid of second arguments.

    Exit status: 0 on success, 2 if any quadrature flagged non-convergence
    (the file is still written), 1 on input error.
    """
    cfg = _load_config(config)
    p, spec, seed = _build(cfg, n, nu, seed, lambda_max, rel_tol)
    out = out or cfg.get("out") or f"eval_{kind}.{fmt}"
    fmt = cfg.get("format", fmt)
    try:
        zp = BallPoint(_parse_point(z))
        if w_grid:
            wpts = _parse_grid(w_grid)
        elif w is not None:
            wpts = [_parse_point(w)]
        else:
            wpts = [np.zeros(p.n, dtype=complex)]
    except ValueError as exc:
        raise click.UsageError(f"bad --z/--w/--w-grid value: {exc}") from exc

    atoms = discrete_spectrum(p)
    rows = []
    flagged = False
    for wv in wpts:
        try:
            wp = BallPoint(wv)
            if kind == "heat":
                if t is None:
                    raise click.UsageError("heat evaluation needs --t")
                kv = heat_kernel(p, t, zp, wp, spec)
                coord = [("t", t)]
            elif kind == "wave":
                if t is None:
                    raise click.UsageError("wave evaluation needs --t")
                kv = wave_kernel(p, t, zp, wp, spec)
                coord = [("t", t)]
            elif kind == "resolvent":
                if xi is None:
                    raise click.UsageError("resolvent evaluation needs --xi")
                xiv = _parse_complex(xi)
                kv = resolvent_kernel(p, xiv, zp, wp, spec)
                coord = [("xi_re", xiv.real), ("xi_im", xiv.imag)]
            elif kind == "density":
                if s is None:
                    raise click.UsageError("density evaluation needs --s")
                kv = spectral_density_continuous(p, s, zp, wp)
                coord = [("s", s)]
            elif kind == "projector":
                if j is None:
                    raise click.UsageError("projector evaluation needs --j")
                if not 0 <= j < len(atoms):
                    raise click.UsageError(f"--j must be in 0..{len(atoms)-1}")
                kv = projector_kernel(p, atoms[j], zp, wp)
                coord = [("j", float(j))]
            elif kind == "green":
                if mu is None:
                    raise click.UsageError("green evaluation needs --mu")
                kv = green_kernel(p, _parse_complex(mu), zp, wp)
                muv = _parse_complex(mu)
                coord = [("mu_re", muv.real), ("mu_im", muv.imag)]
            else:  # poisson
                if lam is None:
                    raise click.UsageError("poisson evaluation needs --lam")
                om = BoundaryPoint(_parse_point(omega))
                val = poisson_kernel(p, lam, zp, om)
                rows.append(([("lambda", lam)], om.omega, val, 0, ""))
                continue
            diag = kv.diagnostics
            nodes = diag.nodes if diag else 0
            flag = "" if (diag is None or diag.converged) else "tolerance-not-met"
            flagged = flagged or bool(flag)
            rows.append((coord, wv, kv.value, nodes, flag))
        except (RegimeError, PoleError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(1)

    header_cols = [name for name, _ in rows[0][0]]
    cols = (
        header_cols
        + [f"z{k}_{part}" for k in range(p.n) for part in ("re", "im")]
        + [f"w{k}_{part}" for k in range(p.n) for part in ("re", "im")]
        + ["value_re", "value_im", "diag_nodes", "diag_flag"]
    )
    lines = [_header(p, spec, seed).rstrip("\n")]
    if fmt == "csv":
        lines.append(",".join(cols))
        for coord, wv, val, nodes, flag in rows:
            vals = [_fmt(v) for _, v in coord]
            vals += [_fmt(part) for c in zp.z for part in (c.real, c.imag)]
            vals += [_fmt(part) for c in np.atleast_1d(wv) for part in (c.real, c.imag)]
            vals += [_fmt(val.real), _fmt(val.imag), str(nodes), flag]
            lines.append(",".join(vals))
        pathlib.Path(out).write_text("\n".join(lines) + "\n")
    else:
        payload = []
        for coord, wv, val, nodes, flag in rows:
            payload.append(
                {
                    **{name: v for name, v in coord},
                    "w": [[c.real, c.imag] for c in np.atleast_1d(wv)],
                    "value": {"re": val.real, "im": val.imag},
                    "nodes": nodes,
                    "flag": flag,
                }
            )
        pathlib.Path(out).write_text(lines[0] + "\n" + json.dumps(payload, indent=2) + "\n")
    click.echo(f"wrote {out} ({len(rows)} rows)")
    sys.exit(2 if flagged else 0)


@main.command("verify")
@click.argument("check", type=str)
@click.option("--n", type=int, default=None)
@click.option("--nu", type=float, default=None)
@click.option("--t", type=float, default=None, help="single-sample override (prop61)")
@click.option("--x", type=float, default=None, help="single-sample override (prop61/prop62)")
@click.option("--mu", type=str, default=None, help="parameter override (prop62/green_resolvent)")
@click.option("--seed", type=int, default=None)
@click.option("--config", type=click.Path(exists=True), default=None)
@click.option("--out", type=click.Path(), default=None, help="output directory for JSON reports")
@click.option("--lambda-max", type=float, default=None)
@click.option("--rel-tol", type=float, default=None)
def cmd_verify(check, n, nu, t, x, mu, seed, config, out, lambda_max, rel_tol):
    """Run one named check or 'all'; write one JSON report per check.

    Exit status 0 iff every check passed.  A summary line per check goes to
    stdout.
    """
    cfg = _load_config(config)
    p, spec, seed = _build(cfg, n, nu, seed, lambda_max, rel_tol)
    if check != "all" and check not in CHECKS:
        raise click.UsageError(f"unknown check {check!r}; known: {', '.join(sorted(CHECKS))} or 'all'")
    names = sorted(CHECKS) if check == "all" else [check]
    outdir = pathlib.Path(out) if out else pathlib.Path(".")
    outdir.mkdir(parents=True, exist_ok=True)
    all_passed = True
    click.echo(f"{'check':20s} {'ratio':>14s} {'cv':>10s} passed")
    for name in names:
        kwargs = {}
        if name == "prop61" and t is not None and x is not None:
            if t == 0.0:
                report = _degenerate_prop61(p, seed, x)
                kwargs = None
            else:
                kwargs = {"samples": [(t, x)] * 3}
        if name == "prop62" and mu is not None:
            kwargs = {"mu": _parse_complex(mu)}
        if kwargs is not None:
            report = run_check(name, p, seed, spec, **kwargs)
        all_passed = all_passed and report.passed
        path = outdir / f"verify_{name}.json"
        path.write_text(json.dumps(report.to_json_dict(), indent=2) + "\n")
        click.echo(f"{name:20s} {report.ratio.real:14.8f} {report.ratio_cv:10.2e} {report.passed}")
    sys.exit(0 if all_passed else 1)


def _degenerate_prop61(p, seed, x):
    from hyperball.verify import VerificationReport

    return VerificationReport(
        check_name="prop61",
        params={"n": p.n, "nu": p.nu, "samples": [[0.0, x]]},
        lhs=0.0,
        rhs_variants=[("verbatim_sinh2", 0.0), ("cosh2_support", 0.0)],
        seed=seed,
        passed=True,
        notes="degenerate t=0: every term vanishes identically",
    )


if __name__ == "__main__":
    main()
