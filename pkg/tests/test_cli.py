import csv
import json
import subprocess
import sys


def run_cli(args, cwd):
    return subprocess.run(
        [sys.executable, "-m", "hyperball.cli", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
    )


def test_eval_heat_radial_grid(tmp_path):
    out = tmp_path / "heat.csv"
    res = run_cli(
        ["eval", "heat", "--n", "1", "--nu", "2.5", "--t", "0.5", "--z", "0",
         "--w-grid", "radial:0:0.8:9", "--out", str(out)],
        tmp_path,
    )
    assert res.returncode == 0, res.stderr
    lines = out.read_text().splitlines()
    assert lines[0].startswith("#")
    rows = list(csv.DictReader(lines[1:]))
    assert len(rows) == 9
    assert all("value_re" in r for r in rows)
    # locale independence: decimal points, no commas inside numbers
    assert "." in rows[3]["value_re"]


def test_eval_wave_refused_regime(tmp_path):
    res = run_cli(
        ["eval", "wave", "--n", "1", "--nu", "2.5", "--t", "0.1", "--z", "0", "--w", "0.9"],
        tmp_path,
    )
    assert res.returncode == 1
    assert "refused" in res.stderr


def test_eval_density_negative_s(tmp_path):
    out = tmp_path / "dens.csv"
    res = run_cli(
        ["eval", "density", "--n", "1", "--nu", "2.5", "--s", "-1", "--z", "0",
         "--w-grid", "radial:0:0.5:4", "--out", str(out)],
        tmp_path,
    )
    assert res.returncode == 0
    rows = list(csv.DictReader(out.read_text().splitlines()[1:]))
    assert all(float(r["value_re"]) == 0.0 for r in rows)


def test_eval_missing_flag(tmp_path):
    res = run_cli(["eval", "heat", "--n", "1", "--nu", "2.5", "--z", "0", "--w", "0.3"], tmp_path)
    assert res.returncode != 0
    assert "--t" in res.stderr


def test_eval_rejects_bad_nu(tmp_path):
    res = run_cli(["eval", "density", "--n", "1", "--nu", "0.5", "--s", "1", "--z", "0", "--w", "0.3"], tmp_path)
    assert res.returncode != 0


def test_verify_lemma31_json(tmp_path):
    res = run_cli(["verify", "lemma31", "--n", "1", "--nu", "2.5", "--seed", "7", "--out", str(tmp_path)], tmp_path)
    assert res.returncode == 0, res.stdout + res.stderr
    report = json.loads((tmp_path / "verify_lemma31.json").read_text())
    for key in ("check", "params", "lhs", "rhs", "ratio", "ratio_cv", "abs_err", "rel_err",
                "nodes", "lambda_max", "seed", "passed", "notes"):
        assert key in report, key
    assert report["check"] == "lemma31"
    assert report["passed"] is True
    assert report["seed"] == 7


def test_verify_unknown_check(tmp_path):
    res = run_cli(["verify", "nope", "--seed", "1"], tmp_path)
    assert res.returncode != 0
    assert "unknown check" in res.stderr


def test_verify_prop61_degenerate_time(tmp_path):
    res = run_cli(
        ["verify", "prop61", "--n", "1", "--nu", "2.5", "--t", "0", "--x", "0.1",
         "--seed", "3", "--out", str(tmp_path)],
        tmp_path,
    )
    assert res.returncode == 0, res.stdout + res.stderr
    report = json.loads((tmp_path / "verify_prop61.json").read_text())
    assert "degenerate" in report["notes"]
    assert report["passed"] is True


def test_verify_deterministic_reports(tmp_path):
    d1, d2 = tmp_path / "a", tmp_path / "b"
    for d in (d1, d2):
        res = run_cli(
            ["verify", "eigenfunctions", "--n", "1", "--nu", "2.5", "--seed", "7", "--out", str(d)],
            tmp_path,
        )
        assert res.returncode == 0
    b1 = (d1 / "verify_eigenfunctions.json").read_bytes()
    b2 = (d2 / "verify_eigenfunctions.json").read_bytes()
    assert b1 == b2
