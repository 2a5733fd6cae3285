"""Closed-form extremal functions with exact evaluators.

Every function here is zero-free off the origin, carries the series of
f(z)/z, the continuous branch of log(f(z)/z), and a closed form for
z f'(z)/f(z). The principal logarithm is safe in every closed form below
because each factor (1 - z, 1 + z e^{i mu}) has positive real part on the
disk, so the principal branch is the one anchored at the origin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .functions import AnalyticFunction
from .quadrature import radial_path_integral
from .series import DEFAULT_ORDER, PowerSeries, series_exp, series_mul, series_pow

ZOO_NAMES = (
    "identity",
    "koebe",
    "half_plane",
    "starlike_order",
    "spirallike_koebe",
    "strongly_starlike",
    "strongly_spirallike",
)


@dataclass(frozen=True)
class ZooSpec:
    name: str
    alpha: Optional[float] = None
    lam: Optional[float] = None

    def __post_init__(self):
        if self.name not in ZOO_NAMES:
            raise ValueError(f"unknown zoo function {self.name!r}")
        if self.name == "starlike_order":
            if self.alpha is None or not 0.0 <= self.alpha < 1.0:
                raise ValueError("starlike_order requires 0 <= alpha < 1")
        if self.name == "spirallike_koebe":
            if self.lam is None or not abs(self.lam) < math.pi / 2:
                raise ValueError("spirallike_koebe requires |lambda| < pi/2")
        if self.name == "strongly_starlike":
            if self.alpha is None or not 0.0 < self.alpha < 1.0:
                raise ValueError("strongly_starlike requires 0 < alpha < 1")
        if self.name == "strongly_spirallike":
            if self.alpha is None or self.lam is None:
                raise ValueError("strongly_spirallike requires lambda and alpha")
            if not abs(self.lam) < math.pi * self.alpha / 2 < math.pi / 2:
                raise ValueError(
                    "strongly_spirallike requires |lambda| < pi*alpha/2 < pi/2")


def _binomial_ratio_series(a: complex, order: int) -> PowerSeries:
    """Series of (1 - z)^(-a): c_k = prod_{j=1}^{k} (a + j - 1)/j."""
    k = np.arange(1, order + 1)
    factors = (a + k - 1) / k
    coeffs = np.concatenate([[1.0 + 0j], np.cumprod(factors)])
    return PowerSeries(coeffs)


def _koebe_like(c: complex, label: str, order: int) -> AnalyticFunction:
    """z / (1 - z)^(2c): the K_c image of the Koebe function."""
    c = complex(c)
    return AnalyticFunction(
        h_series=_binomial_ratio_series(2 * c, order),
        label=label,
        log_ratio=lambda z: -2 * c * np.log(1 - z),
        p_exact=lambda z: (1 - c) + c * (1 + z) / (1 - z),
    )


def identity_fn(order: int = DEFAULT_ORDER) -> AnalyticFunction:
    ones = np.zeros(order + 1, dtype=complex)
    ones[0] = 1.0
    return AnalyticFunction(
        h_series=PowerSeries(ones),
        label="identity",
        log_ratio=lambda z: np.zeros_like(np.asarray(z, dtype=complex)),
        p_exact=lambda z: np.ones_like(np.asarray(z, dtype=complex)),
    )


def koebe(order: int = DEFAULT_ORDER) -> AnalyticFunction:
    """k(z) = z/(1-z)^2, the extremal starlike function."""
    return _koebe_like(1.0, "koebe", order)


def half_plane(order: int = DEFAULT_ORDER) -> AnalyticFunction:
    """l(z) = z/(1-z), convex onto a half-plane."""
    return _koebe_like(0.5, "half-plane", order)


def starlike_order(alpha: float, order: int = DEFAULT_ORDER) -> AnalyticFunction:
    """z/(1-z)^(2(1-alpha)), extremal starlike of order alpha."""
    if not 0.0 <= alpha < 1.0:
        raise ValueError("starlike_order requires 0 <= alpha < 1")
    return _koebe_like(1.0 - alpha, f"starlike-order:{alpha:g}", order)


def spirallike_koebe(lam: float, order: int = DEFAULT_ORDER) -> AnalyticFunction:
    """z/(1-z)^(2 e^{i lam} cos lam), extremal lam-spirallike."""
    if not abs(lam) < math.pi / 2:
        raise ValueError("spirallike_koebe requires |lambda| < pi/2")
    c = complex(math.cos(lam) * math.cos(lam), math.sin(lam) * math.cos(lam))
    return _koebe_like(c, f"spiral-koebe:{lam:g}", order)


def from_log_ratio(p_eval: Callable, p_series: PowerSeries, label: str) -> AnalyticFunction:
    """The function in the normalized class determined by z f'/f = p.

    Realized as ``f(z) = z exp(int_0^z (p - 1)/zeta d zeta)`` with the
    integral taken along the radius, which fixes the branch.
    """
    if p_series.coeffs[0] != 1:
        raise ValueError("p must have constant term exactly 1 (p(0) = 1)")
    p0 = complex(np.asarray(p_eval(np.zeros(1, dtype=complex)))[0])
    if abs(p0 - 1.0) > 1e-12:
        raise ValueError(f"p(0) must be 1, got {p0}")
    k = np.arange(p_series.order + 1, dtype=float)
    v = np.zeros(p_series.order + 1, dtype=complex)
    v[1:] = p_series.coeffs[1:] / k[1:]
    h = series_exp(PowerSeries(v))
    log_ratio = lambda z: radial_path_integral(
        lambda w: (p_eval(w) - 1.0) / w, np.asarray(z, dtype=complex))
    return AnalyticFunction(
        h_series=h, label=label, log_ratio=log_ratio, p_exact=p_eval)


def _sector_p(alpha: float, phase: complex, order: int):
    """Evaluator and series of ((1 + z*phase)/(1 - z))^alpha."""
    def p_eval(z, alpha=alpha, phase=phase):
        z = np.asarray(z, dtype=complex)
        return np.exp(alpha * (np.log(1 + phase * z) - np.log(1 - z)))

    top = np.zeros(order + 1, dtype=complex)
    top[0] = 1.0
    top[1] = phase
    num = series_pow(PowerSeries(top), alpha)
    den = _binomial_ratio_series(alpha, order)
    return p_eval, series_mul(num, den)


def strongly_starlike(alpha: float, order: int = DEFAULT_ORDER) -> AnalyticFunction:
    """Extremal strongly starlike of order alpha: z f'/f = ((1+z)/(1-z))^alpha."""
    if not 0.0 < alpha < 1.0:
        raise ValueError("strongly_starlike requires 0 < alpha < 1")
    p_eval, p_series = _sector_p(alpha, 1.0 + 0j, order)
    return from_log_ratio(p_eval, p_series, f"strongly-starlike:{alpha:g}")


def strongly_spirallike(lam: float, alpha: float,
                        order: int = DEFAULT_ORDER) -> AnalyticFunction:
    """Extremal strongly lam-spirallike of order alpha.

    z f'/f = ((1 + z e^{2 i lam / alpha})/(1 - z))^alpha, valid for
    |lam| < pi*alpha/2 < pi/2.
    """
    if not abs(lam) < math.pi * alpha / 2 < math.pi / 2:
        raise ValueError("requires |lambda| < pi*alpha/2 < pi/2")
    phase = np.exp(2j * lam / alpha)
    p_eval, p_series = _sector_p(alpha, phase, order)
    return from_log_ratio(
        p_eval, p_series, f"strongly-spirallike:{lam:g},{alpha:g}")


def make_named(spec: ZooSpec, order: int = DEFAULT_ORDER) -> AnalyticFunction:
    if spec.name == "identity":
        return identity_fn(order)
    if spec.name == "koebe":
        return koebe(order)
    if spec.name == "half_plane":
        return half_plane(order)
    if spec.name == "starlike_order":
        return starlike_order(spec.alpha, order)
    if spec.name == "spirallike_koebe":
        return spirallike_koebe(spec.lam, order)
    if spec.name == "strongly_starlike":
        return strongly_starlike(spec.alpha, order)
    return strongly_spirallike(spec.lam, spec.alpha, order)


def parse_function_spec(text: str, order: int = DEFAULT_ORDER) -> AnalyticFunction:
    """Parse CLI names: identity, koebe, half-plane, starlike-order:A,
    spiral-koebe:L, strongly-starlike:A, strongly-spirallike:L,A."""
    name, _, args = text.partition(":")
    name = name.strip()
    if name == "identity":
        return identity_fn(order)
    if name == "koebe":
        return koebe(order)
    if name == "half-plane":
        return half_plane(order)
    if name == "starlike-order":
        return starlike_order(float(args), order)
    if name == "spiral-koebe":
        return spirallike_koebe(float(args), order)
    if name == "strongly-starlike":
        return strongly_starlike(float(args), order)
    if name == "strongly-spirallike":
        lam_s, _, alpha_s = args.partition(",")
        return strongly_spirallike(float(lam_s), float(alpha_s), order)
    raise ValueError(f"unknown function spec {text!r}")
