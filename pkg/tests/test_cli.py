"""Tests for the command-line interface."""

import json
import math

import numpy as np
import pytest

from hsh4.cli import main
from hsh4.multipole import CoeffTable, eval_expansion


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_c_harmonic_at_pole(capsys):
    code, out, _ = _run(capsys, "eval", "--family", "c", "--j", "1",
                        "--lambda", "0", "--alpha", "0",
                        "--point", "0,0,0,1")
    assert code == 0
    assert "1.4142135623730" in out


def test_eval_h_doubled(capsys):
    code, out, _ = _run(capsys, "eval", "--family", "h", "--j", "1",
                        "--mu", "1", "--nu", "1", "--point", "0,0,0,1",
                        "--doubled", "--output", "json")
    assert code == 0
    payload = json.loads(out)
    # H_{1,1/2,1/2} at the pole is (z0 + iz)/sqrt(2) * sqrt(2) = 1
    assert payload["re"] == pytest.approx(1 / math.sqrt(2) * math.sqrt(2))


def test_cgc_with_closed_form(capsys):
    code, out, _ = _run(capsys, "cgc", "--family", "c",
                        "--q", "1,0,0,1,0,0,2,0,0")
    assert code == 0
    assert "0.86602540378443" in out
    assert "closed[" in out
    assert "diff" in out


def test_cgc_h_family(capsys):
    code, out, _ = _run(capsys, "cgc", "--family", "h", "--doubled",
                        "--q", "1,1,1,1,-1,-1,0,0,0", "--output", "json")
    assert code == 0
    val = json.loads(out)["value"]
    assert val == pytest.approx(0.5)  # (1/sqrt 2)^2


def test_ninej(capsys):
    code, out, _ = _run(capsys, "ninej", "--q", "2,2,0,2,2,0,2,2,0",
                        "--output", "json")
    assert code == 0
    val = json.loads(out)["value"]
    assert val == pytest.approx(1.0 / 27.0, rel=1e-12)


def test_expand_csv_rows(capsys):
    code, out, _ = _run(capsys, "expand", "--n", "1", "--j", "1",
                        "--r1", "0.5", "--r2", "1", "--lmax", "10")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "l,lp,value"
    assert lines[1] == "0,1,1"
    assert lines[2] == "1,0,0.5"


def test_expand_csv_roundtrip_matches_eval(capsys):
    code, out, _ = _run(capsys, "expand", "--n", "-2", "--j", "0",
                        "--r1", "0.5", "--r2", "1", "--lmax", "25")
    assert code == 0
    table = CoeffTable.from_csv(out, j=0)
    rng = np.random.default_rng(31)
    h1 = rng.normal(size=4)
    h1 /= np.linalg.norm(h1)
    h2 = rng.normal(size=4)
    h2 /= np.linalg.norm(h2)
    from hsh4.multipole import ExpansionSpec, expand_translated
    ref = expand_translated(ExpansionSpec(-2.0, 0, 0.5, 1.0, l_max=25))
    a = eval_expansion(table, 0, h1, h2)
    b = eval_expansion(ref, 0, h1, h2)
    assert abs(a[0] - b[0]) < 1e-15


def test_expand_divergence_guard(capsys):
    code, _, err = _run(capsys, "expand", "--n", "-2", "--j", "0",
                        "--r1", "2", "--r2", "1")
    assert code == 2
    assert "swap" in err


def test_deterministic_output(capsys):
    args = ("expand", "--n", "-3", "--j", "1", "--r1", "0.3", "--r2", "1",
            "--lmax", "15")
    _, out1, _ = _run(capsys, *args)
    _, out2, _ = _run(capsys, *args)
    assert out1 == out2


def test_verify_coupling_exit_zero(capsys):
    code, out, _ = _run(capsys, "verify", "coupling")
    assert code == 0
    checks = json.loads(out)
    assert all(c["pass"] for c in checks)


def test_verify_orthogonality_small_grid(capsys):
    code, out, _ = _run(capsys, "verify", "orthogonality",
                        "--jmax", "3", "--grid", "12,12,25")
    assert code == 0
    assert all(c["pass"] for c in json.loads(out))


def test_verify_expansion(capsys):
    code, out, _ = _run(capsys, "verify", "expansion")
    assert code == 0


def test_tol_env_override(capsys, monkeypatch):
    monkeypatch.setenv("HSH4_TOL", "1e-30")
    code, out, _ = _run(capsys, "verify", "orthogonality",
                        "--jmax", "1", "--grid", "8,8,17")
    assert code == 1  # nothing is exact to 1e-30


def test_bad_flags_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--family", "q", "--j", "1", "--point", "0,0,0,1"])
    assert exc.value.code == 2


def test_bad_point_exit_two(capsys):
    code, _, err = _run(capsys, "eval", "--family", "c", "--j", "1",
                        "--lambda", "0", "--alpha", "0", "--point", "1,2")
    assert code == 2
    assert "point" in err
