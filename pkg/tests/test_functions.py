"""Tests for the deformation operators on normalized functions."""

import numpy as np
import pytest

from unideform.functions import (
    AnalyticFunction,
    alexander,
    integral_deform_I,
    integral_deform_J,
    log_coordinate_phi,
    log_coordinate_psi,
    log_derivative_ratio,
    power_deform,
)
from unideform.series import PowerSeries
from unideform.zoo import half_plane, identity_fn, koebe, strongly_starlike


def binomial_coeffs(a, order):
    k = np.arange(1, order + 1)
    return np.concatenate([[1.0 + 0j], np.cumprod((a + k - 1) / k)])


def test_requires_unit_constant_term():
    with pytest.raises(ValueError):
        AnalyticFunction(h_series=PowerSeries([2.0, 1.0]), label="bad")


def test_power_deform_matches_closed_form():
    # K_c of z/(1-z)^2 is z/(1-z)^{2c}
    for c in (0.5, 1.5, 0.3 - 0.7j):
        g = power_deform(koebe(48), c)
        assert np.abs(g.h_series.coeffs
                      - binomial_coeffs(2 * c, 48)).max() < 1e-11


def test_power_deform_identity_and_collapse():
    f = koebe(32)
    assert np.allclose(power_deform(f, 1.0).h_series.coeffs, f.h_series.coeffs)
    g = power_deform(f, 0.0)
    assert np.allclose(g.h_series.coeffs, identity_fn(32).h_series.coeffs)


def test_power_deform_records_provenance_and_label():
    f = koebe(16)
    g = power_deform(f, 0.5 + 0.25j)
    assert g.deformed_from is not None
    base, c = g.deformed_from
    assert base is f and c == 0.5 + 0.25j
    assert g.label == "K_0.5+0.25i[koebe]"
    assert power_deform(f, -2).label == "K_-2[koebe]"


def test_alexander_is_termwise_division():
    # the transform of the koebe function is the half-plane map
    f = koebe(40)
    g = alexander(f)
    assert np.abs(g.h_series.coeffs
                  - half_plane(40).h_series.coeffs).max() < 1e-14


def test_alexander_exact_evaluator_matches_series():
    g = alexander(koebe(128))
    z = 0.4 * np.exp(1j * np.linspace(0, 6.28, 8))
    exact = g.eval(z)
    series = z * np.polynomial.polynomial.polyval(z, g.h_series.coeffs)
    assert np.abs(exact - series).max() < 1e-12


def test_integral_deform_J_exact_matches_series():
    g = integral_deform_J(koebe(128), 0.6 + 0.2j)
    z = 0.5 * np.exp(1j * np.linspace(0, 6.28, 8))
    series = z * np.polynomial.polynomial.polyval(z, g.h_series.coeffs)
    assert np.abs(g.eval(z) - series).max() < 1e-11


def test_derivative_ratio_transport():
    # z g'/g = 1 - c + c (z f'/f) for g = K_c[f]
    f = strongly_starlike(0.5, 64)
    c = 0.7 - 0.4j
    g = power_deform(f, c)
    p_f, _ = log_derivative_ratio(f)
    p_g, _ = log_derivative_ratio(g)
    expected = np.concatenate([[1.0 + 0j], c * p_f.coeffs[1:]])
    assert np.abs(p_g.coeffs - expected).max() < 1e-12


def test_derivative_ratio_evaluator_prefers_exact():
    f = koebe(32)
    _, p_eval = log_derivative_ratio(f)
    z = np.array([0.5 + 0j])
    assert abs(p_eval(z)[0] - (1 + 0.5) / (1 - 0.5)) < 1e-14


def test_log_coordinates_are_linear_in_the_exponent():
    f = koebe(48)
    c = 1.3 + 0.2j
    psi = log_coordinate_psi(power_deform(f, c))
    assert np.abs(psi.coeffs - c * log_coordinate_psi(f).coeffs).max() < 1e-10
    phi = log_coordinate_phi(integral_deform_I(f, c))
    assert np.abs(phi.coeffs - c * log_coordinate_phi(f).coeffs).max() < 1e-9


def test_j_factorizations_agree():
    f = koebe(48)
    c = 0.4 + 0.3j
    jc = integral_deform_J(f, c).h_series.coeffs
    via_I = integral_deform_I(alexander(f), c).h_series.coeffs
    via_K = alexander(power_deform(f, c)).h_series.coeffs
    assert np.abs(via_I - jc).max() < 1e-10
    assert np.abs(via_K - jc).max() < 1e-10


def test_fprime_series():
    f = koebe(8)
    fp = f.fprime_series()
    # f' of z/(1-z)^2 is (1+z)/(1-z)^3 with coefficients (k+1)^2... check k=0..2
    assert fp.coeffs[0] == 1.0
    assert fp.coeffs[1] == 4.0
    assert fp.coeffs[2] == 9.0


def test_eval_uses_series_when_no_exact_form():
    g = integral_deform_I(koebe(64), 0.5)
    assert not g.has_exact
    z = np.array([0.3 + 0j])
    val = g.eval(z)
    assert np.isfinite(val).all()
    with pytest.raises(ValueError):
        g.eval(np.array([0.99 + 0j]))
