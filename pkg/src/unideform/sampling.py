"""Sampled reconstruction of the single-function exponent region.

For one function f, the exponent set against local univalence is the
complement of T(V(f)) with V(f) the image of z f'/f. A point c lies in
T(V(f)) restricted to the subdisk |z| <= r exactly when
q(z) = 1 - c + c p(z) has a zero there, i.e. when the winding number of
the boundary-circle image of p around u = 1 - 1/c is nonzero. The raster
is classified cell by cell from that winding number, which is exact for
the sampled curve, and the boundary polyline comes from marching squares.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np
from skimage import measure

from .functions import AnalyticFunction, log_derivative_ratio
from .predicates import SampleGrid

DEFAULT_BOX = 3.0
DEFAULT_RESOLUTION = 600


def winding_number(curve: np.ndarray, point: complex) -> int:
    """Winding number of a closed polyline around one point."""
    rel = np.asarray(curve, dtype=complex) - complex(point)
    d = np.angle(np.roll(rel, -1) / rel)
    return int(round(float(d.sum()) / (2.0 * np.pi)))


def winding_numbers(curve: np.ndarray, points: np.ndarray) -> np.ndarray:
    """Winding numbers of a closed polyline around many points at once.

    Points are bucketed by imaginary part so each edge only touches the
    band it actually crosses.
    """
    pts = np.asarray(points, dtype=complex)
    shape = pts.shape
    x = pts.real.ravel()
    y = pts.imag.ravel()
    order = np.argsort(y, kind="stable")
    ysort = y[order]
    xsort = x[order]
    wn = np.zeros(x.size, dtype=np.int64)
    px, py = curve.real, curve.imag
    qx, qy = np.roll(px, -1), np.roll(py, -1)
    for x1, y1, x2, y2 in zip(px, py, qx, qy):
        if y1 == y2:
            continue
        s = 1 if y2 > y1 else -1
        ylo, yhi = (y1, y2) if s > 0 else (y2, y1)
        i0 = np.searchsorted(ysort, ylo, side="left")
        i1 = np.searchsorted(ysort, yhi, side="left")
        if i1 <= i0:
            continue
        xc = x1 + (ysort[i0:i1] - y1) * (x2 - x1) / (y2 - y1)
        sel = order[i0:i1]
        wn[sel] += s * (xsort[i0:i1] < xc)
    return wn.reshape(shape)


@dataclass(frozen=True)
class SampledRegion:
    """Raster classification of the complement of T(V(f)) on a square box."""
    xs: np.ndarray           # cell-center x coordinates
    ys: np.ndarray           # cell-center y coordinates
    complement: np.ndarray   # bool (ny, nx): True where c is NOT in T(V(f))
    boundary: Tuple[np.ndarray, ...]  # complex polylines, marching squares
    curve: np.ndarray        # sampled p values on the outermost circle


def sampled_exponent_region(f: AnalyticFunction, grid: SampleGrid,
                            box: float = DEFAULT_BOX,
                            resolution: int = DEFAULT_RESOLUTION) -> SampledRegion:
    """Classify the box [-box, box]^2 against T(V(f)) on the subdisk |z| <= r.

    r is the largest grid radius; the subdisk image of p is determined by
    the boundary-circle curve, so only that circle is sampled.
    """
    r = grid.radii[-1]
    theta = np.linspace(0.0, 2.0 * np.pi, grid.angles_per_radius, endpoint=False)
    zc = r * np.exp(1j * theta)
    if f.p_exact is not None and grid.uses_exact_eval:
        curve = np.asarray(f.p_exact(zc), dtype=complex)
    else:
        _, p_eval = log_derivative_ratio(f)
        curve = np.asarray(p_eval(zc), dtype=complex)

    step = 2.0 * box / resolution
    xs = -box + step * (np.arange(resolution) + 0.5)
    ys = xs.copy()
    cx, cy = np.meshgrid(xs, ys)
    c = cx + 1j * cy
    with np.errstate(divide="ignore", invalid="ignore"):
        u = 1.0 - 1.0 / c
    # c = 0 maps to infinity, never enclosed by the bounded curve
    u[c == 0] = 1e30 + 0j

    if np.ptp(curve.real) < 1e-15 and np.ptp(curve.imag) < 1e-15:
        wn = np.zeros((resolution, resolution), dtype=np.int64)
    else:
        wn = winding_numbers(curve, u)
    complement = wn == 0

    contours = measure.find_contours(complement.astype(float), 0.5)
    polylines = tuple(
        (xs[0] + cont[:, 1] * step) + 1j * (ys[0] + cont[:, 0] * step)
        for cont in contours
    )
    return SampledRegion(xs=xs, ys=ys, complement=complement,
                         boundary=polylines, curve=curve)
