from fractions import Fraction

import pytest

import gctk


def test_version():
    assert gctk.__version__ == "0.1.0"


def test_literal():
    assert gctk.literal(3) == "3"
    assert gctk.literal(Fraction(-1, 2)) == "-1/2"
    assert gctk.literal((1, Fraction(-2, 3))) == "1-2/3*i"
    with pytest.raises(TypeError):
        gctk.literal(0.5)


def test_four_dimensional_spinor():
    # alpha = 0, beta = 1: -i + sigma - omega_I - sigma_bar ... with vol coefficient i
    terms = gctk.spinor(1, 0, 1)
    assert terms[0] == "0-1*i"
    assert terms[15] == "0+1*i"
    assert len(terms) == 8
    assert gctk.is_pure(1, 0, 1)


def test_symbolic():
    text = gctk.symbolic_spinor_text(1)
    assert "alpha*beta" in text
    assert text.startswith("((0-1*i)*beta + (0+1*i)*alpha) * 1 + ")
    assert text.count(" * dx") == 7


def test_types_and_signature():
    assert gctk.structure_type(1, 0, 1) == 0
    assert gctk.structure_type(2, (1, 2), (1, 2)) == 4
    assert gctk.structure_type(1, "inf", "inf") == 2
    assert gctk.pseudo_kahler_signature(1, 0, 1) == (12, 4)
    assert gctk.pseudo_kahler_signature(2, (1, 1), 3) == (20, 4)


def test_fmap():
    assert gctk.fmap("0", "1/2") == ("1/2", "-1/2")
    assert gctk.fmap("1", "0") == ("1", "1")
    assert gctk.fmap("1", "1") == ("inf", "0")


def test_bad_literal():
    with pytest.raises(ValueError):
        gctk.spinor(1, "1.5", 0)


def test_integrability():
    assert gctk.check_dpsi_zero(1, False)
    assert not gctk.check_dpsi_zero(1, True)
    assert gctk.check_dpsi_prime_zero(2)


def test_type_map_csv():
    csv = gctk.type_map_csv(1, 2, True)
    lines = csv.split("\n")
    assert lines[0] == "alpha_re,alpha_im,beta_re,beta_im,chart_a,chart_b,type"
    assert lines[-1] == ""
    assert len(lines) == 1 + 16 + 1
    assert "\r" not in csv


def test_verify_report():
    report = gctk.verify(n=1, samples=2)
    assert report["schema"] == 1
    assert report["failing"] == []
    ids = [c["check_id"] for c in report["checks"]]
    assert len(ids) == len(set(ids))
    dpsi = next(c for c in report["checks"] if c["check_id"] == "twistor.check_dpsi_zero")
    assert dpsi["residual"]["exact_zero"] is True
