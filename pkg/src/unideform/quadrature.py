"""Path integration along disk radii.

All extremal functions defined only through ``z f'/f`` are realized by
integrating along the straight segment from 0; the integrand is analytic
on the open disk, so this fixes the branch without any unwrapping.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(24)

# Panels refine geometrically toward t = 1 where the integrand may steepen
# as z approaches the unit circle.
_REFINEMENT = 20
_BREAKPOINTS = np.concatenate(
    [[0.0], 1.0 - 0.5 ** np.arange(1, _REFINEMENT), [1.0]])

_T = np.concatenate([
    0.5 * (b - a) * _GL_NODES + 0.5 * (a + b)
    for a, b in zip(_BREAKPOINTS[:-1], _BREAKPOINTS[1:])
])
_W = np.concatenate([
    0.5 * (b - a) * _GL_WEIGHTS
    for a, b in zip(_BREAKPOINTS[:-1], _BREAKPOINTS[1:])
])


def radial_path_integral(g: Callable[[np.ndarray], np.ndarray], z):
    """``int_0^z g(zeta) d zeta`` along the segment [0, z]; vectorized in z.

    ``g`` must accept complex arrays. Quadrature nodes stay strictly inside
    (0, 1) in the path parameter, so integrands with a removable singularity
    at 0 (like ``(p(zeta) - 1)/zeta``) are safe.
    """
    z = np.asarray(z, dtype=complex)
    flat = z.ravel()
    nodes = _T[:, None] * flat[None, :]
    vals = g(nodes)
    out = flat * (_W @ vals)
    return out.reshape(z.shape) if z.ndim else complex(out[0])
