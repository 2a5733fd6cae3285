"""Tests for the closed-form extremal functions."""

import math

import numpy as np
import pytest

from unideform.functions import power_deform
from unideform.zoo import (
    ZooSpec,
    from_log_ratio,
    half_plane,
    identity_fn,
    koebe,
    make_named,
    parse_function_spec,
    spirallike_koebe,
    starlike_order,
    strongly_spirallike,
    strongly_starlike,
)

CIRCLE = 0.6 * np.exp(1j * np.linspace(0.0, 2.0 * math.pi, 32, endpoint=False))


def test_koebe_coefficients():
    f = koebe(10)
    # z/(1-z)^2 = sum n z^n, so h = f/z has coefficients n+1
    assert np.allclose(f.h_series.coeffs, np.arange(1, 12))
    assert np.allclose(f.eval(CIRCLE), CIRCLE / (1 - CIRCLE) ** 2)


def test_identity_and_half_plane():
    assert np.allclose(identity_fn(5).eval(CIRCLE), CIRCLE)
    assert np.allclose(half_plane(64).eval(CIRCLE), CIRCLE / (1 - CIRCLE))


def test_starlike_order_is_power_deformation_of_koebe():
    # the extremal of order alpha is K_{1-alpha} applied to the koebe function
    for alpha in (0.25, 0.5, 0.75):
        f = starlike_order(alpha, 48)
        g = power_deform(koebe(48), 1.0 - alpha)
        assert np.abs(f.h_series.coeffs - g.h_series.coeffs).max() <= 1e-12
        assert np.abs(f.eval(CIRCLE) - g.eval(CIRCLE)).max() <= 1e-12


def test_spirallike_koebe_is_power_deformation_of_koebe():
    for lam in (-0.9, 0.3, 1.2):
        c = complex(math.cos(lam)) * np.exp(1j * lam)
        f = spirallike_koebe(lam, 48)
        g = power_deform(koebe(48), c)
        assert np.abs(f.h_series.coeffs - g.h_series.coeffs).max() <= 1e-12


def test_exact_evaluators_match_series():
    for f in (koebe(96), starlike_order(0.3, 96), spirallike_koebe(0.4, 96),
              strongly_starlike(0.5, 96), strongly_spirallike(0.3, 0.6, 96)):
        series = CIRCLE * np.polynomial.polynomial.polyval(
            CIRCLE, f.h_series.coeffs)
        assert np.abs(f.eval(CIRCLE) - series).max() < 1e-12, f.label


def test_derivative_ratio_closed_forms():
    z = CIRCLE
    assert np.allclose(koebe(8).p_exact(z), (1 + z) / (1 - z))
    alpha = 0.5
    f = strongly_starlike(alpha, 8)
    expected = np.exp(alpha * (np.log(1 + z) - np.log(1 - z)))
    assert np.allclose(f.p_exact(z), expected)


def test_strongly_spirallike_argument_stays_in_sector():
    lam, alpha = 0.3, 0.6
    f = strongly_spirallike(lam, alpha, 16)
    args = np.angle(f.p_exact(0.999 * np.exp(1j * np.linspace(0, 2 * math.pi,
                                                              512))))
    assert np.abs(args - lam).max() <= math.pi * alpha / 2 + 1e-9


def test_from_log_ratio_reproduces_koebe():
    p_eval = lambda z: (1 + z) / (1 - z)
    k = koebe(64)
    p_series = np.full(65, 2.0, dtype=complex)
    p_series[0] = 1.0
    from unideform.series import PowerSeries
    f = from_log_ratio(p_eval, PowerSeries(p_series), "rebuilt")
    assert np.abs(f.h_series.coeffs - k.h_series.coeffs).max() < 1e-10
    assert np.abs(f.eval(CIRCLE) - k.eval(CIRCLE)).max() < 1e-12


def test_from_log_ratio_requires_normalization():
    from unideform.series import PowerSeries
    with pytest.raises(ValueError):
        from_log_ratio(lambda z: 2 * np.ones_like(z),
                       PowerSeries([2.0, 0.0]), "bad")


def test_zoo_spec_validation():
    with pytest.raises(ValueError):
        ZooSpec("no-such-function")
    with pytest.raises(ValueError):
        ZooSpec("starlike_order", alpha=1.0)
    with pytest.raises(ValueError):
        ZooSpec("spirallike_koebe", lam=2.0)
    with pytest.raises(ValueError):
        ZooSpec("strongly_spirallike", lam=0.9, alpha=0.5)
    spec = ZooSpec("strongly_starlike", alpha=0.5)
    assert make_named(spec, 16).label == "strongly-starlike:0.5"


def test_parse_function_spec_names():
    cases = {
        "identity": "identity",
        "koebe": "koebe",
        "half-plane": "half-plane",
        "starlike-order:0.25": "starlike-order:0.25",
        "spiral-koebe:0.5": "spiral-koebe:0.5",
        "strongly-starlike:0.5": "strongly-starlike:0.5",
        "strongly-spirallike:0.3,0.6": "strongly-spirallike:0.3,0.6",
    }
    for text, label in cases.items():
        assert parse_function_spec(text, 16).label == label
    with pytest.raises(ValueError):
        parse_function_spec("mystery")
