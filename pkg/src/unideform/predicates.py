"""Numerical membership predicates for the classical disk classes.

Open conditions like "Re(z f'/f) > 0 on the disk" are undecidable from
samples, so every predicate works on a compact subgrid and reports the
worst margin it saw. Verdicts within the strictness band around the
threshold come back 'inconclusive' instead of pass/fail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from .functions import AnalyticFunction, log_coordinate_phi, log_derivative_ratio
from .series import (
    DEFAULT_EVAL_RADIUS,
    PowerSeries,
    UnwrapError,
    evaluate,
    unwrap_arg_rays,
)

STANDARD_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99)
EXACT_EXTRA_RADII = (0.995, 0.999)
STRICTNESS = 1e-9

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SampleGrid:
    radii: Tuple[float, ...]
    angles_per_radius: int = 512
    uses_exact_eval: bool = False

    def __post_init__(self):
        r = np.asarray(self.radii)
        if r.size == 0 or np.any(np.diff(r) <= 0) or not r[-1] < 1.0:
            raise ValueError("radii must be strictly increasing and < 1")
        if self.angles_per_radius <= 0:
            raise ValueError("angles_per_radius must be positive")

    def points(self) -> np.ndarray:
        """Complex samples, shape (len(radii), angles_per_radius)."""
        theta = np.linspace(0.0, 2.0 * math.pi, self.angles_per_radius,
                            endpoint=False)
        r = np.asarray(self.radii)
        return r[:, None] * np.exp(1j * theta)[None, :]


def standard_grid(exact: bool = False, angles: int = 512) -> SampleGrid:
    radii = STANDARD_RADII + EXACT_EXTRA_RADII if exact else STANDARD_RADII
    return SampleGrid(radii=radii, angles_per_radius=angles, uses_exact_eval=exact)


@dataclass(frozen=True)
class PredicateReport:
    verdict: str
    margin: float
    witness: Optional[Tuple[complex, complex]] = None  # (z, value)

    def __post_init__(self):
        if self.verdict == FAIL and self.witness is None:
            raise ValueError("a failing report must carry a witness")


def _verdict(margin: float, band: float = STRICTNESS) -> str:
    if margin > band:
        return PASS
    if margin < -band:
        return FAIL
    return INCONCLUSIVE


def _report_min(values: np.ndarray, z: np.ndarray, threshold: float) -> PredicateReport:
    """Report from a min-slack field: slack = values - threshold."""
    i = int(np.argmin(values))
    margin = float(values.flat[i]) - threshold
    verdict = _verdict(margin)
    witness = (complex(z.flat[i]), complex(values.flat[i])) if verdict != PASS else None
    return PredicateReport(verdict=verdict, margin=margin, witness=witness)


def _grid_p_values(f: AnalyticFunction, grid: SampleGrid):
    """p = z f'/f on the grid; series-only functions are clipped to r_eval."""
    z = grid.points()
    if f.p_exact is not None and grid.uses_exact_eval:
        return np.asarray(f.p_exact(z), dtype=complex), z
    p_series, p_eval = log_derivative_ratio(f)
    if f.p_exact is None:
        keep = np.asarray(grid.radii) <= DEFAULT_EVAL_RADIUS
        z = z[keep]
    return np.asarray(p_eval(z), dtype=complex), z


def _newton_root(p_eval: Callable, target: complex, z0: complex,
                 steps: int = 60, h: float = 1e-7) -> Optional[complex]:
    """Solve p(z) = target from z0 by Newton with a numeric derivative."""
    z = complex(z0)
    for _ in range(steps):
        fz = complex(np.asarray(p_eval(np.array([z])))[0]) - target
        if abs(fz) < 1e-13:
            break
        dz = complex(np.asarray(
            p_eval(np.array([z + h])) - p_eval(np.array([z - h])))[0]) / (2 * h)
        if dz == 0:
            return None
        z = z - fz / dz
        if abs(z) >= 1.0 - 1e-12:
            z = z / abs(z) * (1.0 - 1e-9)
    fz = complex(np.asarray(p_eval(np.array([z])))[0]) - target
    if abs(fz) < 1e-8 and abs(z) < 1.0:
        return z
    return None


def is_locally_univalent(f: AnalyticFunction, grid: SampleGrid,
                         tol: float = STRICTNESS) -> PredicateReport:
    """min |f'| over the grid, plus a critical-point hunt for deformations.

    |f'| is computed as |p| * |f/z|, which stays stable where both factors
    are moderate. When f is a recorded power deformation K_c[f0], the zero
    of 1 - c + c p0(z) is additionally polished by Newton from the grid
    minimum, giving an explicit witness when c lies outside the exponent
    region.
    """
    if f.deformed_from is not None:
        base, c = f.deformed_from
        if c != 0 and base.p_exact is not None:
            target = 1.0 - 1.0 / c
            zg = grid.points()
            q = np.abs(np.asarray(base.p_exact(zg)) - target)
            i = int(np.argmin(q))
            root = _newton_root(base.p_exact, target, complex(zg.flat[i]))
            if root is not None:
                qval = c * (complex(np.asarray(
                    base.p_exact(np.array([root])))[0]) - target)
                return PredicateReport(verdict=FAIL, margin=-abs(qval),
                                       witness=(root, qval))

    p_vals, z = _grid_p_values(f, grid)
    if f.log_ratio is not None:
        ratio = np.exp(np.asarray(f.log_ratio(z)).real)
    else:
        # |f/z| from the truncated series; keep rows inside its trust radius
        keep = np.abs(z[:, 0]) <= DEFAULT_EVAL_RADIUS
        z, p_vals = z[keep], p_vals[keep]
        ratio = np.abs(evaluate(f.h_series, z, r_eval=DEFAULT_EVAL_RADIUS))
    fprime = np.abs(p_vals) * ratio
    return _report_min(fprime, z, tol)


def is_spirallike(f: AnalyticFunction, lam: float, grid: SampleGrid,
                  margin: float = 0.0) -> PredicateReport:
    """Re(e^{-i lam} z f'/f) > margin over the grid."""
    if not abs(lam) < math.pi / 2:
        raise ValueError("|lambda| < pi/2 required")
    p_vals, z = _grid_p_values(f, grid)
    vals = (np.exp(-1j * lam) * p_vals).real
    return _report_min(vals, z, margin)


def is_strongly_spirallike(f: AnalyticFunction, lam: float, alpha: float,
                           grid: SampleGrid, margin: float = 0.0) -> PredicateReport:
    """|Arg(z f'/f) - lam| < pi*alpha/2 - margin with ray-tracked arguments."""
    if not (abs(lam) < math.pi / 2 and 0.0 < alpha < 1.0):
        raise ValueError("require |lambda| < pi/2 and 0 < alpha < 1")
    try:
        args, z = _continuous_p_args(f, grid)
    except UnwrapError:
        return PredicateReport(verdict=INCONCLUSIVE, margin=float("nan"))
    slack = (math.pi * alpha / 2 - margin) - np.abs(args - lam)
    return _report_min(slack, z, 0.0)


def _continuous_p_args(f: AnalyticFunction, grid: SampleGrid):
    """Continuous Arg of p on the grid, unwrapped radially from z near 0."""
    rmax = grid.radii[-1]
    # dense radial ladder anchored near the origin keeps phase jumps small
    dense = np.unique(np.concatenate([
        np.linspace(1e-4, rmax, 256), np.asarray(grid.radii)]))
    theta = np.linspace(0.0, 2.0 * math.pi, grid.angles_per_radius, endpoint=False)
    z = dense[:, None] * np.exp(1j * theta)[None, :]
    if f.p_exact is not None and grid.uses_exact_eval:
        vals = np.asarray(f.p_exact(z), dtype=complex)
    else:
        if f.p_exact is None:
            dense = dense[dense <= DEFAULT_EVAL_RADIUS]
            z = dense[:, None] * np.exp(1j * theta)[None, :]
        _, p_eval = log_derivative_ratio(f)
        vals = np.asarray(p_eval(z), dtype=complex)
    args = unwrap_arg_rays(vals)
    keep = np.isin(dense, np.asarray(grid.radii))
    return args[keep], z[keep]


def is_convex(f: AnalyticFunction, grid: SampleGrid,
              margin: float = 0.0) -> PredicateReport:
    """Re(1 + z f''/f') > margin, computed from the series of log f'."""
    phi = log_coordinate_phi(f)
    k = np.arange(phi.order + 1)
    q = PowerSeries(k * phi.coeffs + (k == 0))  # 1 + z (log f')'
    radii = np.asarray(grid.radii)
    radii = radii[radii <= DEFAULT_EVAL_RADIUS]
    theta = np.linspace(0.0, 2 * math.pi, grid.angles_per_radius, endpoint=False)
    z = radii[:, None] * np.exp(1j * theta)[None, :]
    vals = np.asarray(evaluate(q, z), dtype=complex).real
    return _report_min(vals, z, margin)


def is_univalent_numeric(f: AnalyticFunction, r: float, n: int = 1024,
                         seed: int = 0) -> PredicateReport:
    """Injectivity and argument-principle check on the circle |z| = r.

    The verdict is scoped to the subdisk |z| <= r: the sampled boundary
    curve must be simple (pairwise closest-point check) and must wind
    exactly once around interior points of its image.
    """
    if not 0.0 < r < 1.0:
        raise ValueError("0 < r < 1 required")
    theta = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    for _ in range(4):
        z = r * np.exp(1j * theta)
        w = np.asarray(f.eval(z, r_eval=max(DEFAULT_EVAL_RADIUS, r)), dtype=complex)
        spacing = np.abs(np.roll(w, -1) - w)
        diam = float(max(np.ptp(w.real), np.ptp(w.imag)))
        if diam == 0.0 or float(spacing.max()) <= diam / 8.0:
            break
        # resample the circle so image samples are equally spaced in arc
        # length; cusps of the image otherwise leave the curve undersampled
        s = np.concatenate([[0.0], np.cumsum(spacing)])
        target = np.linspace(0.0, s[-1], n, endpoint=False)
        theta_ext = np.concatenate([theta, [2.0 * math.pi]])
        theta = np.interp(target, s, theta_ext)
    if diam == 0.0 or float(spacing.max()) > diam / 8.0:
        return PredicateReport(verdict=INCONCLUSIVE, margin=float("nan"))

    # (a) injectivity: non-neighbour samples closer than a fraction of the
    # local step indicate a crossing or touching boundary curve
    local = 0.5 * (spacing + np.roll(spacing, 1))
    coll = _closest_collision(w, local, min_index_gap=3)
    if coll is not None:
        i, j, d = coll
        return PredicateReport(
            verdict=FAIL, margin=-d,
            witness=(complex(z[i]), complex(w[i] - w[j])))

    # (b) winding number 1 around random interior points of the image
    from .sampling import winding_number  # local import avoids a cycle
    rng = np.random.default_rng(seed)
    lo_x, hi_x = w.real.min(), w.real.max()
    lo_y, hi_y = w.imag.min(), w.imag.max()
    found = 0
    tries = 0
    min_margin = math.inf
    while found < 10 and tries < 4000:
        tries += 1
        pt = complex(rng.uniform(lo_x, hi_x), rng.uniform(lo_y, hi_y))
        if float(np.abs(w - pt).min()) < 2.0 * float(np.median(spacing)):
            continue  # too close to the curve for a stable winding number
        k = winding_number(w, pt)
        if k == 0:
            continue
        found += 1
        if k != 1:
            return PredicateReport(verdict=FAIL, margin=-float(abs(k - 1)),
                                   witness=(pt, complex(k)))
        min_margin = min(min_margin, 1.0)
    if found == 0:
        return PredicateReport(verdict=INCONCLUSIVE, margin=float("nan"))
    return PredicateReport(verdict=PASS, margin=1.0)


def _closest_collision(w: np.ndarray, local: np.ndarray, min_index_gap: int):
    """Closest pair of non-neighbouring samples, if closer than local/4."""
    n = w.size
    # O(n^2) pairwise check in blocks; n is ~1k-2k here
    best = None
    for i in range(0, n, 256):
        block = w[i:i + 256, None] - w[None, :]
        d = np.abs(block)
        ii = np.arange(i, min(i + 256, n))[:, None]
        jj = np.arange(n)[None, :]
        gap = np.abs(ii - jj)
        gap = np.minimum(gap, n - gap)
        thresh = 0.25 * np.minimum(local[i:i + 256, None], local[None, :])
        hit = (gap > min_index_gap) & (d < thresh)
        if np.any(hit):
            flat = np.argmin(np.where(hit, d, np.inf))
            bi, bj = np.unravel_index(flat, d.shape)
            cand = (int(ii[bi, 0]), int(bj), float(d[bi, bj]))
            if best is None or cand[2] < best[2]:
                best = cand
    return best


def goodman_check(f: AnalyticFunction, grid: SampleGrid,
                  slack: float = 1e-9) -> PredicateReport:
    """|Arg f(z)/z| <= 2 arcsin|z| + slack at every grid point."""
    z = grid.points()
    if f.log_ratio is not None and grid.uses_exact_eval:
        args = np.asarray(f.log_ratio(z)).imag
    else:
        try:
            args, z = _continuous_h_args(f, grid)
        except UnwrapError:
            return PredicateReport(verdict=INCONCLUSIVE, margin=float("nan"))
    bound = 2.0 * np.arcsin(np.abs(z)) + slack
    margin_field = bound - np.abs(args)
    return _report_min(margin_field, z, 0.0)


def _continuous_h_args(f: AnalyticFunction, grid: SampleGrid):
    """Continuous Arg of f(z)/z via radial unwrapping of the series values."""
    rmax = min(grid.radii[-1], DEFAULT_EVAL_RADIUS)
    dense = np.unique(np.concatenate([
        np.linspace(1e-4, rmax, 256),
        np.asarray([r for r in grid.radii if r <= rmax])]))
    theta = np.linspace(0.0, 2.0 * math.pi, grid.angles_per_radius, endpoint=False)
    z = dense[:, None] * np.exp(1j * theta)[None, :]
    vals = np.asarray(evaluate(f.h_series, z, r_eval=rmax), dtype=complex)
    args = unwrap_arg_rays(vals)
    keep = np.isin(dense, np.asarray(grid.radii))
    return args[keep], z[keep]


# -- boundedness profile ---------------------------------------------------

PROBE_RADII = tuple(1.0 - 10.0 ** (-a) for a in np.linspace(0.3, 3.0, 25))


@dataclass(frozen=True)
class ProbeProfile:
    radii: Tuple[float, ...]
    values: Tuple[float, ...]   # M(r) = max_theta |log f(z)/z|
    verdict: str                # 'bounded-plateau', 'growing', 'indeterminate'


def boundedness_probe(f: AnalyticFunction,
                      radii: Sequence[float] = PROBE_RADII,
                      angles: int = 256) -> ProbeProfile:
    """Profile M(r) = max over the circle of |log f(z)/z| near the boundary.

    'bounded-plateau' means the last value gained less than 5% over the
    value a few steps back; 'growing' means the final increments keep
    increasing.
    """
    if f.log_ratio is None:
        raise ValueError("boundedness probe needs an exact log-ratio evaluator")
    radii = tuple(radii)
    theta = np.linspace(0.0, 2.0 * math.pi, angles, endpoint=False)
    z = np.asarray(radii)[:, None] * np.exp(1j * theta)[None, :]
    m = np.abs(np.asarray(f.log_ratio(z), dtype=complex)).max(axis=1)

    mid = max(0, len(radii) - 3)
    last = float(m[-1])
    if last == 0.0 or last - float(m[mid]) < 0.05 * last:
        verdict = "bounded-plateau"
    else:
        inc = np.diff(m[-4:])
        verdict = "growing" if np.all(np.diff(inc) > -1e-9) and np.all(inc > 0) \
            else "indeterminate"
    return ProbeProfile(radii=radii, values=tuple(float(v) for v in m),
                        verdict=verdict)
