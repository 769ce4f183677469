import json
import os
import subprocess

import pytest

CLI = os.environ.get("GCTK_CLI", "gctk")


def run(*args, env=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


def test_verify_writes_report(tmp_path):
    out = tmp_path / "r.json"
    r = run("verify", "--n", "1", "--seed", "42", "--samples", "5", "--out", str(out))
    assert r.returncode == 0, r.stderr
    report = json.loads(out.read_text())
    assert report["schema"] == 1
    dpsi = next(c for c in report["checks"] if c["check_id"] == "twistor.check_dpsi_zero")
    assert dpsi["status"] == "pass"
    assert dpsi["residual"]["exact_zero"] is True


def test_verify_same_seed_same_report():
    def strip(text):
        report = json.loads(text)
        for c in report["checks"]:
            c.pop("elapsed_ms")
        return report

    a = run("verify", "--n", "1", "--seed", "7", "--samples", "3")
    env = dict(os.environ, GCTK_THREADS="1")
    b = run("verify", "--n", "1", "--seed", "7", "--samples", "3", env=env)
    assert a.returncode == b.returncode == 0
    assert strip(a.stdout) == strip(b.stdout)


def test_verify_rejects_n4():
    r = run("verify", "--n", "4")
    assert r.returncode == 2
    assert "--n" in r.stderr


def test_mutation_fails():
    r = run("verify", "--n", "1", "--samples", "2", "--mutate", "nonclosed-omega")
    assert r.returncode != 0
    assert "twistor.check_dpsi_zero" in r.stderr
    report = json.loads(r.stdout)
    assert report["failing"] == ["twistor.check_dpsi_zero"]


def test_typemap_csv(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run("typemap", "--n", "1", "--grid", "3", "--out", str(a)).returncode == 0
    assert run("typemap", "--n", "1", "--grid", "3", "--out", str(b)).returncode == 0
    data = a.read_bytes()
    assert data == b.read_bytes()
    assert b"\r" not in data
    lines = data.decode().splitlines()
    assert lines[0] == "alpha_re,alpha_im,beta_re,beta_im,chart_a,chart_b,type"
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) == 36
    for chart_pair in [("0", "0"), ("0", "1"), ("1", "0"), ("1", "1")]:
        assert sum(1 for r in rows if (r[4], r[5]) == chart_pair) == 9
    for r in rows:
        diagonal = r[:2] == r[2:4] and r[4] == r[5]
        assert r[6] == ("4" if diagonal else "2")


def test_typemap_fiber():
    r = run("typemap", "--n", "2", "--grid", "2", "--fiber")
    assert r.returncode == 0
    types = {line.split(",")[6] for line in r.stdout.splitlines()[1:]}
    assert types == {"0", "4"}


def test_spinor_outputs():
    r = run("spinor", "--n", "1", "--alpha", "0", "--beta", "0")
    assert r.returncode == 0
    # sigma = omega_J + i omega_K
    assert r.stdout.strip() == "1 * dx0^dx2 + i * dx1^dx2 + i * dx0^dx3 + -1 * dx1^dx3"
    r = run("spinor", "--n", "2", "--alpha", "1", "--beta", "1", "--format", "json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["n"] == 2
    assert all(bin(t["mask"]).count("1") == 4 for t in doc["terms"])
    sym = run("spinor", "--n", "1")
    assert sym.returncode == 0 and "alpha*beta" in sym.stdout


@pytest.mark.parametrize("literal", ["1.5", "abc", "1/0", "1+2j"])
def test_spinor_rejects_literals(literal):
    r = run("spinor", "--n", "1", "--alpha", literal, "--beta", "0")
    assert r.returncode == 2


@pytest.mark.parametrize(
    "eta,zeta,expected",
    [("0", "1/2", "(1/2, -1/2)"), ("1", "0", "(1, 1)"), ("1", "1", "(inf, 0)")],
)
def test_fmap(eta, zeta, expected):
    r = run("fmap", "--eta", eta, "--zeta", zeta)
    assert r.returncode == 0
    assert r.stdout.strip() == expected
