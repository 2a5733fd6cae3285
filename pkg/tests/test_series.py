"""Tests for truncated power-series arithmetic."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unideform.series import (
    PowerSeries,
    UnwrapError,
    evaluate,
    evaluate_checked,
    series_exp,
    series_from_json,
    series_log,
    series_mul,
    series_pow,
    series_to_json,
    tail_bound,
    unwrap_arg_along_ray,
    unwrap_arg_rays,
)


def geometric(order, ratio=0.5):
    return PowerSeries(ratio ** np.arange(order + 1, dtype=complex))


# -- construction -------------------------------------------------------------

def test_rejects_empty_and_nonfinite():
    with pytest.raises(ValueError):
        PowerSeries([])
    with pytest.raises(ValueError):
        PowerSeries([1.0, float("nan")])
    with pytest.raises(ValueError):
        PowerSeries([1.0, float("inf")])


def test_coeffs_are_immutable():
    s = PowerSeries([1.0, 2.0])
    with pytest.raises(ValueError):
        s.coeffs[0] = 5.0


def test_truncate_cuts_and_pads():
    s = PowerSeries([1.0, 2.0, 3.0])
    assert s.truncate(1).order == 1
    padded = s.truncate(5)
    assert padded.order == 5
    assert padded.coeffs[4] == 0


def test_deriv_integ_roundtrip():
    s = PowerSeries([0.0, 1.0, 0.5, -0.25])
    back = s.deriv().integ()
    assert np.allclose(back.coeffs, s.coeffs)


# -- multiplication, log, exp, pow ---------------------------------------------

def test_mul_matches_polynomial_product():
    a = PowerSeries([1.0, 2.0, 3.0])
    b = PowerSeries([1.0, -1.0, 0.5])
    prod = series_mul(a, b)
    assert np.allclose(prod.coeffs, [1.0, 1.0, 1.5])


def test_log_of_geometric_series():
    # h = 1/(1-z/2); log h = -log(1 - z/2) = sum (z/2)^k / k
    h = geometric(12)
    v = series_log(h)
    k = np.arange(1, 13)
    assert np.allclose(v.coeffs[1:], (0.5 ** k) / k)


def test_log_requires_unit_constant_term():
    with pytest.raises(ValueError):
        series_log(PowerSeries([2.0, 1.0]))
    with pytest.raises(ValueError):
        series_exp(PowerSeries([0.5, 1.0]))


@st.composite
def unit_series(draw, max_order=64, mass=0.9):
    """Series with c_0 = 1, kept zero-free on the closed disk by bounding
    the total tail mass below 1."""
    order = draw(st.integers(min_value=1, max_value=max_order))
    re = draw(st.lists(st.floats(-1, 1), min_size=order, max_size=order))
    im = draw(st.lists(st.floats(-1, 1), min_size=order, max_size=order))
    tail = np.array(re) + 1j * np.array(im)
    total = np.abs(tail).sum()
    if total > mass:
        tail *= mass / total
    return PowerSeries(np.concatenate([[1.0 + 0j], tail]))


@settings(max_examples=60, deadline=None)
@given(unit_series())
def test_exp_log_roundtrip(h):
    back = series_exp(series_log(h))
    assert np.abs(back.coeffs - h.coeffs).max() <= 1e-12


@settings(max_examples=40, deadline=None)
@given(unit_series(max_order=32, mass=0.5),
       st.complex_numbers(max_magnitude=2.0, allow_nan=False,
                          allow_infinity=False),
       st.complex_numbers(max_magnitude=2.0, allow_nan=False,
                          allow_infinity=False))
def test_power_semigroup(h, c, cp):
    lhs = series_pow(series_pow(h, c), cp)
    rhs = series_pow(h, c * cp)
    assert np.abs(lhs.coeffs - rhs.coeffs).max() <= 1e-10


def test_pow_rejects_nonfinite_exponent():
    with pytest.raises(ValueError):
        series_pow(geometric(4), complex("inf"))


# -- evaluation ----------------------------------------------------------------

def test_evaluate_matches_closed_form():
    h = geometric(200)
    z = 0.3 * np.exp(1j * np.linspace(0, 2 * math.pi, 16))
    assert np.allclose(evaluate(h, z), 1.0 / (1.0 - z / 2), atol=1e-14)


def test_evaluate_scalar_returns_python_complex():
    assert isinstance(evaluate(geometric(4), 0.1 + 0j), complex)


def test_evaluate_rejects_outside_radius():
    with pytest.raises(ValueError):
        evaluate(geometric(4), 0.99)
    # roundoff-level excursion above the radius is tolerated
    z = 0.95 * np.exp(1j * np.linspace(0, 2 * math.pi, 64))
    evaluate(geometric(4), z)


def test_tail_bound_and_checked_eval():
    h = geometric(64)
    assert tail_bound(h, 0.5) < 1e-9
    evaluate_checked(h, 0.5 + 0j)
    short = geometric(4, ratio=0.9)
    with pytest.raises(ValueError):
        evaluate_checked(short, 0.9 + 0j, tol=1e-12)


# -- argument unwrapping ---------------------------------------------------------

def test_unwrap_follows_multiple_turns():
    t = np.linspace(0.0, 3.0 * 2 * math.pi, 400)
    vals = np.exp(1j * t)
    args = unwrap_arg_along_ray(vals)
    assert abs(args[-1] - t[-1]) < 1e-9


@settings(max_examples=30, deadline=None)
@given(st.floats(-20.0, 20.0))
def test_unwrap_total_is_argument_mod_2pi(total):
    t = np.linspace(0.0, total, 600)
    args = unwrap_arg_along_ray(np.exp(1j * t))
    # unwrapped value differs from the true argument by an exact 2 pi multiple
    assert abs((args[-1] - total) / (2 * math.pi)
               - round((args[-1] - total) / (2 * math.pi))) < 1e-9


def test_unwrap_rejects_coarse_sampling_and_zeros():
    with pytest.raises(UnwrapError):
        unwrap_arg_along_ray(np.exp(1j * np.linspace(0, 10 * math.pi, 10)))
    with pytest.raises(UnwrapError):
        unwrap_arg_along_ray(np.array([1.0, 0.0, 1.0], dtype=complex))


def test_unwrap_rays_matches_per_ray():
    t = np.linspace(0.0, 4 * math.pi, 300)
    vals = np.stack([np.exp(1j * t), np.exp(-1j * t)], axis=1)
    args = unwrap_arg_rays(vals)
    assert np.allclose(args[:, 0], unwrap_arg_along_ray(vals[:, 0]))
    assert np.allclose(args[:, 1], unwrap_arg_along_ray(vals[:, 1]))


# -- JSON ------------------------------------------------------------------------

def test_json_roundtrip():
    s = PowerSeries([1.0, 0.5 - 0.25j, 0.125j])
    obj = series_to_json(s)
    assert obj["order"] == 2
    back = series_from_json(obj)
    assert np.array_equal(back.coeffs, s.coeffs)


def test_json_length_mismatch_rejected():
    with pytest.raises(ValueError):
        series_from_json({"order": 3, "coeffs": [[1.0, 0.0]]})
