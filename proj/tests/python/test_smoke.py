import math
from fractions import Fraction

import pytest

import angelesco


def test_pnn_at_zero_plain():
    # a^n / binom(3n, n)
    assert angelesco.pnn_at_zero(2, -1) == Fraction(1, 15)
    assert angelesco.pnn_at_zero(3, "-1/2") == Fraction(-1, 8 * 84)


def test_mop_matches_closed_form():
    coeffs = angelesco.mop_coefficients(3, 3, -2)
    assert len(coeffs) == 7
    assert float(coeffs[-1]) == 1.0
    assert math.isclose(float(coeffs[0]), -8 / 84, rel_tol=1e-14)


def test_q_at_zero():
    q = angelesco.q_eval(0, tau=0.7, beta=0.5)
    assert abs(q - 2 * math.pi / math.gamma(1.5)) < 1e-12


def test_cj_constant():
    k = math.log(2) - 0.5 * math.log(3)
    assert math.isclose(float(angelesco.cj_constant(1, gamma="1/2")), 0.5 * k, rel_tol=1e-12)
    assert float(angelesco.cj_constant(2, alpha=0)) == 0.0


def test_curve_report():
    data = angelesco.curve(-2, digits=30)
    assert math.isclose(float(data["b"]), -1 / 63, rel_tol=1e-15)


def test_run_report_shape():
    rep = angelesco.run("mehler-heine", "--z", "0", "--tau", "0", "--ladder", "16,64", "--digits", "30")
    assert rep["kind"] == "mehler-heine"
    assert rep["pass"] is True
    assert len(rep["table"]["rows"]) == 2


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        angelesco.run("equilibrium", "--a", "0.5")
    with pytest.raises(ValueError):
        angelesco.cj_constant(3)
