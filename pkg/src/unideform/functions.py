"""Normalized analytic functions and the deformation operators.

An :class:`AnalyticFunction` represents f with f(0) = 0, f'(0) = 1 through
the series of f(z)/z, optionally together with closed-form evaluators:

* ``point_eval``  -- z -> f(z)
* ``log_ratio``   -- z -> log(f(z)/z), the continuous branch vanishing at 0
* ``p_exact``     -- z -> z f'(z)/f(z)

The operators here are the power deformation ``K_c[f] = z (f(z)/z)^c``, the
integral deformations ``I_c[f] = int (f')^c`` and ``J_c[f] = int (f/zeta)^c``,
the Alexander transform ``J_1``, and the logarithmic coordinates in which
``K_c`` and ``I_c`` act as scalar multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Tuple

import numpy as np

from .quadrature import radial_path_integral
from .series import (
    PowerSeries,
    evaluate,
    series_exp,
    series_log,
    series_pow,
)

Evaluator = Callable[[np.ndarray], np.ndarray]


def _format_c(c: complex) -> str:
    c = complex(c)
    if c.imag == 0:
        return f"{c.real:g}"
    sign = "+" if c.imag >= 0 else "-"
    return f"{c.real:g}{sign}{abs(c.imag):g}i"


@dataclass(frozen=True)
class AnalyticFunction:
    """A function in the normalized class, represented by the series of f/z."""

    h_series: PowerSeries
    label: str
    point_eval: Optional[Evaluator] = None
    log_ratio: Optional[Evaluator] = None
    p_exact: Optional[Evaluator] = None
    # (base, c) when this function was produced as a power deformation
    deformed_from: Optional[Tuple["AnalyticFunction", complex]] = field(
        default=None, repr=False)

    def __post_init__(self):
        c0 = self.h_series.coeffs[0]
        if abs(c0 - 1.0) > 1e-12:
            raise ValueError(f"h_series must have constant term 1, got {c0}")
        if self.point_eval is None and self.log_ratio is not None:
            lr = self.log_ratio
            object.__setattr__(
                self, "point_eval", lambda z, lr=lr: np.asarray(z) * np.exp(lr(z)))

    @property
    def order(self) -> int:
        return self.h_series.order

    @property
    def has_exact(self) -> bool:
        return self.point_eval is not None

    def eval(self, z, r_eval: float = 0.95):
        """f(z): exact evaluator when present, otherwise the series."""
        if self.point_eval is not None:
            z = np.asarray(z, dtype=complex)
            return self.point_eval(z)
        return np.asarray(z, dtype=complex) * evaluate(self.h_series, z, r_eval)

    def fprime_series(self) -> PowerSeries:
        """Series of f'(z) = sum (k+1) h_k z^k; constant term 1."""
        k = np.arange(self.h_series.order + 1)
        return PowerSeries((k + 1) * self.h_series.coeffs)


def power_deform(f: AnalyticFunction, c: complex) -> AnalyticFunction:
    """K_c[f] = z (f(z)/z)^c with the branch anchored at the origin."""
    c = complex(c)
    h = series_pow(f.h_series, c)
    log_ratio = None
    p_exact = None
    if f.log_ratio is not None:
        base_lr = f.log_ratio
        log_ratio = lambda z: c * base_lr(z)
    if f.p_exact is not None:
        base_p = f.p_exact
        p_exact = lambda z: (1.0 - c) + c * base_p(z)
    return AnalyticFunction(
        h_series=h,
        label=f"K_{_format_c(c)}[{f.label}]",
        log_ratio=log_ratio,
        p_exact=p_exact,
        deformed_from=(f, c),
    )


def _antiderivative_ratio(integrand: PowerSeries) -> PowerSeries:
    """Series of g(z)/z for g(z) = int_0^z q, given the series q."""
    k = np.arange(integrand.order + 1)
    return PowerSeries(integrand.coeffs / (k + 1))


def alexander(f: AnalyticFunction) -> AnalyticFunction:
    """J_1[f](z) = int_0^z f(zeta)/zeta d zeta; a_n -> a_n / n termwise."""
    h = _antiderivative_ratio(f.h_series)
    point_eval = None
    p_exact = None
    if f.point_eval is not None:
        fe = f.point_eval
        point_eval = lambda z: radial_path_integral(
            lambda w: fe(w) / w, np.asarray(z, dtype=complex))
        p_exact = lambda z: fe(np.asarray(z, dtype=complex)) / point_eval(z)
    return AnalyticFunction(
        h_series=h, label=f"J_1[{f.label}]",
        point_eval=point_eval, p_exact=p_exact)


def integral_deform_J(f: AnalyticFunction, c: complex) -> AnalyticFunction:
    """J_c[f](z) = int_0^z (f(zeta)/zeta)^c d zeta."""
    c = complex(c)
    h = _antiderivative_ratio(series_pow(f.h_series, c))
    point_eval = None
    p_exact = None
    if f.log_ratio is not None:
        lr = f.log_ratio
        integrand = lambda w: np.exp(c * lr(w))
        point_eval = lambda z: radial_path_integral(
            integrand, np.asarray(z, dtype=complex))
        p_exact = lambda z: (np.asarray(z, dtype=complex)
                             * integrand(np.asarray(z, dtype=complex))
                             / point_eval(z))
    return AnalyticFunction(
        h_series=h, label=f"J_{_format_c(c)}[{f.label}]",
        point_eval=point_eval, p_exact=p_exact)


def integral_deform_I(f: AnalyticFunction, c: complex) -> AnalyticFunction:
    """I_c[f](z) = int_0^z (f'(zeta))^c d zeta.

    Closed-form evaluators are not propagated: the zoo does not carry a
    branch-tracked log f', and the series path covers every check here.
    """
    c = complex(c)
    h = _antiderivative_ratio(series_pow(f.fprime_series(), c))
    return AnalyticFunction(h_series=h, label=f"I_{_format_c(c)}[{f.label}]")


def log_coordinate_psi(f: AnalyticFunction) -> PowerSeries:
    """Psi[f] = log(f(z)/z); the coordinate in which K_c is scalar."""
    return series_log(f.h_series)


def log_coordinate_phi(f: AnalyticFunction) -> PowerSeries:
    """Phi[f] = log f'; the coordinate in which I_c is scalar."""
    return series_log(f.fprime_series())


def log_derivative_ratio(f: AnalyticFunction):
    """Series and evaluator of p(z) = z f'(z)/f(z) = 1 + z (log f/z)'.

    Returns ``(series, evaluator)``; the evaluator is exact when the
    function carries one, otherwise truncated-series Horner evaluation.
    """
    v = series_log(f.h_series)
    k = np.arange(v.order + 1)
    coeffs = k * v.coeffs
    coeffs[0] = 1.0
    p = PowerSeries(coeffs)
    if f.p_exact is not None:
        return p, f.p_exact
    return p, lambda z: evaluate(p, z)
