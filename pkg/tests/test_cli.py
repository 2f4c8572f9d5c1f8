"""Command-line interface: flag grammar, exit codes, formats, determinism."""

import json

import pytest

import frozen_values as fv
from polymaass import (PointUHP, SpectralParam, default_policy,
                       doubly_completed_eval, eisenstein_expansion,
                       expansion_to_json, taylor_coeff)
from polymaass.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# eval

def test_eval_json_matches_library(capsys):
    code, out, _ = run_cli(capsys, "eval", "--weight", "4",
                           "--s", "2.0,0", "--z", "0.0,1.0")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"value", "abs_error_estimate", "method"}
    p = SpectralParam(4, 2.0)
    z = PointUHP(0.0, 1.0)
    ref = doubly_completed_eval(p, z, default_policy(p, z, 1e-10)).value
    assert abs(complex(*data["value"]) - ref) < 1e-10 * abs(ref)
    assert data["method"] == "fourier_series"


def test_eval_csv_and_text_formats(capsys):
    code, out, _ = run_cli(capsys, "eval", "--weight", "0", "--s", "0.25,0.6",
                           "--z", "0.3,1.1", "--output", "csv")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header == "re,im,abs_error_estimate,method"
    re_s, im_s, err_s, method = row.split(",")
    s = 0.25 + 0.6j
    want = s * (s - 1.0) * fv.EHAT0_A    # polynomial factor times completed
    assert abs(complex(float(re_s), float(im_s)) - want) < 1e-9
    assert float(err_s) >= 0.0 and method == "fourier_series"
    code, out, _ = run_cli(capsys, "eval", "--weight", "0", "--s", "0.25,0.6",
                           "--z", "0.3,1.1", "--output", "text")
    assert code == 0 and "method" in out


def test_eval_odd_weight_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "eval", "--weight", "3",
                           "--s", "2.0,0", "--z", "0.0,1.0")
    assert code == 2
    assert "weight must be even" in err
    assert "usage" in err.lower()


def test_eval_bad_complex_and_missing_flags(capsys):
    code, _, err = run_cli(capsys, "eval", "--weight", "2", "--s", "nope",
                           "--z", "0.0,1.0")
    assert code == 2 and "re,im" in err
    code, _, err = run_cli(capsys, "eval", "--weight", "2")
    assert code == 2 and "--s" in err and "--z" in err


def test_eval_lower_half_plane_rejected(capsys):
    code, _, err = run_cli(capsys, "eval", "--weight", "2", "--s", "1.0,0",
                           "--z", "0.0,-2.0")
    assert code == 2 and "upper half-plane" in err


def test_eval_numeric_failure_exit_code(capsys):
    # One mode cannot meet the requested tolerance at low y.
    code, _, err = run_cli(capsys, "eval", "--weight", "0", "--s", "0.5,0",
                           "--z", "0.3,0.5", "--modes", "1", "--tol", "1e-10")
    assert code == 3 and "numeric error" in err


# ---------------------------------------------------------------------------
# taylor

def test_taylor_matches_library(capsys):
    code, out, _ = run_cli(capsys, "taylor", "--weight", "2", "--s0", "0.3,0",
                           "--z", "0.3,1.1", "--order", "1")
    assert code == 0
    data = json.loads(out)
    assert data["order"] == 1 and data["method"] == "cauchy_circle"
    assert abs(complex(*data["value"]) - fv.TAY2_03[1]) < 1e-9


def test_taylor_order_validation(capsys):
    code, _, err = run_cli(capsys, "taylor", "--weight", "2", "--s0", "0.3,0",
                           "--z", "0.3,1.1", "--order", "99")
    assert code == 2 and "order" in err


# ---------------------------------------------------------------------------
# fourier-table

def test_fourier_table_csv_matches_expansion_json(capsys):
    code, out, _ = run_cli(capsys, "fourier-table", "--weight", "0",
                           "--s0", "1.3,0", "--modes", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,j,re,im"
    rows = [line.split(",") for line in lines[1:]]
    ref = json.loads(expansion_to_json(
        eisenstein_expansion(SpectralParam(0, 1.3), 4)))["modes"]
    assert len(rows) == len(ref) == 8
    for row, want in zip(rows, ref):
        assert int(row[0]) == want["n"] and int(row[1]) == want["j"]
        assert float(row[2]) == want["c"][0]   # 17g is round-trip exact
        assert float(row[3]) == want["c"][1]


def test_fourier_table_json_format(capsys):
    code, out, _ = run_cli(capsys, "fourier-table", "--weight", "2",
                           "--s0", "0.8,0.3", "--modes", "3",
                           "--output", "json")
    assert code == 0
    data = json.loads(out)
    assert data["weight"] == 2 and data["N"] == 3
    assert len(data["modes"]) == 6


# ---------------------------------------------------------------------------
# verify

def test_verify_single_suite_text(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "functional-equation",
                           "--weight", "0")
    assert code == 0
    assert "functional-equation" in out and "pass" in out
    assert "0 failed" in out


def test_verify_unknown_suite_rejected_before_compute(capsys):
    code, _, err = run_cli(capsys, "verify", "--suite", "not-a-suite")
    assert code == 2 and "unknown suite" in err


def test_verify_json_is_byte_identical(tmp_path, capsys):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    for out in (out1, out2):
        code, _, _ = run_cli(capsys, "verify", "--suite", "whittaker",
                             "--output", "json", "--out", str(out),
                             "--threads", "2")
        assert code == 0
    assert out1.read_bytes() == out2.read_bytes()
    rows = json.loads(out1.read_text())
    assert rows and all("runtime_ms" not in row for row in rows)
    assert all(row["passed"] for row in rows)


def test_verify_csv_format(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "xi-action",
                           "--output", "csv", "--seed", "9")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "check,status,residual,tolerance"
    assert all(line.count(",") == 3 for line in lines[1:])


# ---------------------------------------------------------------------------
# manifest

def test_manifest_text_and_exit(capsys):
    code, out, _ = run_cli(capsys, "manifest")
    assert code == 0
    assert "complete: yes" in out


def test_manifest_json(capsys):
    code, out, _ = run_cli(capsys, "manifest", "--output", "json")
    assert code == 0
    data = json.loads(out)
    assert data["complete"] is True and data["problems"] == []


# ---------------------------------------------------------------------------
# environment defaults

def test_env_config_supplies_defaults_and_flags_override(tmp_path, monkeypatch,
                                                         capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"weight": 4, "s": "2.0,0", "z": [0.0, 1.0]}))
    monkeypatch.setenv("POLYMAASS_CONFIG", str(cfg))
    code, out, _ = run_cli(capsys, "eval")
    assert code == 0
    base = json.loads(out)["value"]
    code, out, _ = run_cli(capsys, "eval", "--s", "3.0,0")
    assert code == 0
    assert json.loads(out)["value"] != base


def test_env_config_rejects_unknown_keys(tmp_path, monkeypatch, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"bogus_knob": 1}))
    monkeypatch.setenv("POLYMAASS_CONFIG", str(cfg))
    code, _, err = run_cli(capsys, "manifest")
    assert code == 2 and "bogus_knob" in err


def test_env_config_can_set_numeric_knobs(tmp_path, monkeypatch, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"default_seed": 123}))
    monkeypatch.setenv("POLYMAASS_CONFIG", str(cfg))
    code, out, _ = run_cli(capsys, "verify", "--suite", "functional-equation")
    assert code == 0 and "0 failed" in out


def test_missing_subcommand_is_usage(capsys):
    code, _, _ = run_cli(capsys)
    assert code == 2
