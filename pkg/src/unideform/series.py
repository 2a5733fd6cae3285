"""Truncated complex power-series arithmetic on the unit disk.

A :class:`PowerSeries` stores the Taylor coefficients ``c_0 ... c_N`` of an
analytic function at 0. The log/exp/power routines work on the normalized
branch: ``log`` expects a unit constant term and returns a series vanishing
at 0, ``exp`` does the reverse, and ``h ** c`` means ``exp(c * log(h))``.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

import numpy as np

DEFAULT_ORDER = 256
MAX_ORDER = 4096
DEFAULT_EVAL_RADIUS = 0.95

# Raw phase jumps at or above this are treated as aliasing, not branch motion.
UNWRAP_MAX_JUMP = np.pi / 2


class UnwrapError(RuntimeError):
    """Sampling too coarse to follow a continuous argument branch."""


class PowerSeries:
    """Immutable truncated Taylor series ``sum_k c_k z^k``, ``k = 0..order``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[complex]):
        arr = np.array(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs,
                       dtype=complex)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coefficients must form a non-empty 1-d sequence")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be finite")
        arr.setflags(write=False)
        self.coeffs = arr

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def truncate(self, order: int) -> "PowerSeries":
        """Cut or zero-pad to the given order."""
        if order < 0:
            raise ValueError("order must be nonnegative")
        n = self.coeffs.size
        if order + 1 <= n:
            return PowerSeries(self.coeffs[: order + 1])
        out = np.zeros(order + 1, dtype=complex)
        out[:n] = self.coeffs
        return PowerSeries(out)

    def __len__(self) -> int:
        return self.coeffs.size

    def __repr__(self) -> str:
        head = np.array2string(self.coeffs[:6], precision=6, separator=", ")
        return f"PowerSeries(order={self.order}, coeffs={head}...)"

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        return PowerSeries(self.coeffs[: n + 1] + other.coeffs[: n + 1])

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        return PowerSeries(self.coeffs[: n + 1] - other.coeffs[: n + 1])

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return series_mul(self, other)
        return PowerSeries(self.coeffs * complex(other))

    __rmul__ = __mul__

    def deriv(self) -> "PowerSeries":
        """Termwise derivative; drops the order by one."""
        if self.order == 0:
            return PowerSeries([0.0])
        k = np.arange(1, self.order + 1)
        return PowerSeries(k * self.coeffs[1:])

    def integ(self) -> "PowerSeries":
        """Termwise antiderivative with zero constant; raises the order by one."""
        k = np.arange(1, self.order + 2)
        out = np.zeros(self.order + 2, dtype=complex)
        out[1:] = self.coeffs / k
        return PowerSeries(out)


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the smaller of the two orders."""
    n = min(a.order, b.order)
    full = np.convolve(a.coeffs[: n + 1], b.coeffs[: n + 1])
    return PowerSeries(full[: n + 1])


def series_log(h: PowerSeries) -> PowerSeries:
    """Branch of log h with value 0 at the origin, for h with c_0 = 1.

    Solved from the linear recurrence h' = v' h rather than by composing
    with the scalar log series.
    """
    c = h.coeffs
    if c[0] != 1:
        raise ValueError("series_log requires constant term exactly 1")
    n = h.order
    v = np.zeros(n + 1, dtype=complex)
    jv = np.zeros(n + 1, dtype=complex)  # j * v_j
    for k in range(1, n + 1):
        acc = k * c[k]
        if k > 1:
            acc -= np.dot(jv[1:k], c[k - 1:0:-1])
        jv[k] = acc
        v[k] = acc / k
    return PowerSeries(v)


def series_exp(v: PowerSeries) -> PowerSeries:
    """Series h with h(0) = 1 and log h = v, for v vanishing at 0."""
    c = v.coeffs
    if c[0] != 0:
        raise ValueError("series_exp requires constant term exactly 0")
    n = v.order
    h = np.zeros(n + 1, dtype=complex)
    h[0] = 1.0
    jv = np.arange(n + 1) * c
    for k in range(1, n + 1):
        h[k] = np.dot(jv[1: k + 1], h[k - 1::-1]) / k
    return PowerSeries(h)


def series_pow(h: PowerSeries, c: complex) -> PowerSeries:
    """Principal power ``h^c = exp(c log h)`` for h with unit constant term."""
    c = complex(c)
    if not (np.isfinite(c.real) and np.isfinite(c.imag)):
        raise ValueError("exponent must be finite")
    return series_exp(series_log(h) * c)


def evaluate(s: PowerSeries, z, r_eval: float = DEFAULT_EVAL_RADIUS):
    """Horner evaluation of the truncated polynomial; vectorized over z.

    Points with ``|z| > r_eval`` are rejected: there the truncation error of
    a disk-scale series is uncontrolled.
    """
    z = np.asarray(z, dtype=complex)
    # tiny slack absorbs roundoff in |r e^{i theta}|
    if np.any(np.abs(z) > r_eval + 1e-12):
        raise ValueError(f"evaluation outside |z| <= {r_eval} rejected")
    out = np.polynomial.polynomial.polyval(z, s.coeffs)
    return out if z.ndim else complex(out)


def tail_bound(s: PowerSeries, r: float) -> float:
    """Conservative geometric bound on the dropped tail at radius r.

    Estimates the coefficient growth rate from the trailing terms and
    majorizes the tail by a geometric series; returns ``inf`` when the
    estimated ratio times r reaches 1.
    """
    mags = np.abs(s.coeffs)
    n = s.order
    k0 = max(1, n - max(8, n // 8))
    tail = mags[k0:]
    m = float(tail.max(initial=0.0))
    if m == 0.0:
        return 0.0
    ratios = tail[1:] / np.where(tail[:-1] > 0, tail[:-1], np.inf)
    q = float(max(1.0, ratios.max(initial=1.0)))
    if q * r >= 1.0:
        return np.inf
    return m * r ** (n + 1) / (1.0 - q * r)


def evaluate_checked(s: PowerSeries, z, tol: float = 1e-9):
    """Evaluate after verifying the truncation tail bound at ``max |z|``."""
    z = np.asarray(z, dtype=complex)
    r = float(np.abs(z).max()) if z.size else 0.0
    b = tail_bound(s, r)
    if not b <= tol:
        raise ValueError(f"truncation tail bound {b:.3g} exceeds tol {tol:.3g} at |z|={r}")
    out = np.polynomial.polynomial.polyval(z, s.coeffs)
    return out if z.ndim else complex(out)


def unwrap_arg_along_ray(values, max_jump: float = UNWRAP_MAX_JUMP) -> np.ndarray:
    """Continuous argument along a sequence of nonzero samples.

    The first element is the principal argument of the first value; the
    caller anchors the branch by starting near a point where the function
    is close to 1.
    """
    vals = np.asarray(values, dtype=complex)
    if vals.ndim != 1 or vals.size == 0:
        raise ValueError("values must form a non-empty 1-d sequence")
    if np.any(vals == 0):
        raise UnwrapError("zero value encountered; argument undefined")
    raw = np.angle(vals)
    d = np.diff(raw)
    d = (d + np.pi) % (2.0 * np.pi) - np.pi
    if d.size and float(np.abs(d).max()) >= max_jump:
        raise UnwrapError(
            f"phase jump {float(np.abs(d).max()):.4f} >= {max_jump:.4f}; refine the sampling")
    out = np.empty_like(raw)
    out[0] = raw[0]
    out[1:] = raw[0] + np.cumsum(d)
    return out


def unwrap_arg_rays(values: np.ndarray, max_jump: float = UNWRAP_MAX_JUMP) -> np.ndarray:
    """Vectorized unwrap along axis 0 of a (radii, angles) sample array."""
    vals = np.asarray(values, dtype=complex)
    if np.any(vals == 0):
        raise UnwrapError("zero value encountered; argument undefined")
    raw = np.angle(vals)
    d = np.diff(raw, axis=0)
    d = (d + np.pi) % (2.0 * np.pi) - np.pi
    if d.size and float(np.abs(d).max()) >= max_jump:
        raise UnwrapError("phase jump too large; refine the radial sampling")
    out = np.empty_like(raw)
    out[0] = raw[0]
    out[1:] = raw[0] + np.cumsum(d, axis=0)
    return out


# -- JSON interchange --------------------------------------------------

def series_to_json(s: PowerSeries) -> dict:
    """``{"order": N, "coeffs": [[re, im], ...]}`` with ``order+1`` entries."""
    return {
        "order": s.order,
        "coeffs": [[float(c.real), float(c.imag)] for c in s.coeffs],
    }


def series_from_json(obj) -> PowerSeries:
    if isinstance(obj, (str, bytes)):
        obj = json.loads(obj)
    order = int(obj["order"])
    coeffs = obj["coeffs"]
    if len(coeffs) != order + 1:
        raise ValueError("coeffs length must equal order + 1")
    return PowerSeries([complex(re, im) for re, im in coeffs])
