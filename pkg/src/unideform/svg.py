"""Minimal deterministic SVG rendering for exponent regions.

Everything is drawn in the fixed viewBox "-3 -3 6 6" so outputs from
different classes and functions are directly comparable. Closed-form
geometry (disks, segments, points) is stroked in one color, sampled
boundary polylines in another. The y axis is flipped on output so the
upper half-plane appears on top.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence

import numpy as np

from .regions import ExponentRegion

VIEWBOX = "-3 -3 6 6"
CLOSED_FORM_COLOR = "#1f77b4"
SAMPLED_COLOR = "#d62728"
STROKE_WIDTH = 0.02
POINT_RADIUS = 0.04


def _num(x: float) -> str:
    return f"{float(x):.6f}".rstrip("0").rstrip(".")


def region_elements(region: ExponentRegion,
                    color: str = CLOSED_FORM_COLOR) -> List[str]:
    """SVG elements for the disks, segments, and points of a region."""
    out = []
    for d in region.disks:
        out.append(
            f'<circle cx="{_num(d.center.real)}" cy="{_num(-d.center.imag)}" '
            f'r="{_num(d.radius)}" fill="none" stroke="{color}" '
            f'stroke-width="{_num(STROKE_WIDTH)}"/>')
    for s in region.segments:
        out.append(
            f'<line x1="{_num(s.start.real)}" y1="{_num(-s.start.imag)}" '
            f'x2="{_num(s.end.real)}" y2="{_num(-s.end.imag)}" '
            f'stroke="{color}" stroke-width="{_num(STROKE_WIDTH)}"/>')
    for p in region.points:
        out.append(
            f'<circle cx="{_num(p.real)}" cy="{_num(-p.imag)}" '
            f'r="{_num(POINT_RADIUS)}" fill="{color}"/>')
    return out


def polyline_elements(polylines: Iterable[np.ndarray],
                      color: str = SAMPLED_COLOR) -> List[str]:
    """SVG elements for sampled complex boundary polylines."""
    out = []
    for poly in polylines:
        pts = " ".join(f"{_num(p.real)},{_num(-p.imag)}"
                       for p in np.asarray(poly, dtype=complex))
        out.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" '
            f'stroke-width="{_num(STROKE_WIDTH)}"/>')
    return out


def svg_document(elements: Sequence[str], viewbox: str = VIEWBOX) -> str:
    body = "\n".join(f"  {e}" for e in elements)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{viewbox}" '
        f'width="600" height="600">\n'
        f'  <rect x="-3" y="-3" width="6" height="6" fill="white"/>\n'
        f'{body}\n</svg>\n')


def render_region_svg(closed: Optional[ExponentRegion],
                      sampled_polylines: Iterable[np.ndarray] = ()) -> str:
    """Full SVG overlaying closed-form geometry and sampled boundaries."""
    elements: List[str] = [
        # light axes for orientation
        '<line x1="-3" y1="0" x2="3" y2="0" stroke="#cccccc" '
        f'stroke-width="{_num(STROKE_WIDTH / 2)}"/>',
        '<line x1="0" y1="-3" x2="0" y2="3" stroke="#cccccc" '
        f'stroke-width="{_num(STROKE_WIDTH / 2)}"/>',
    ]
    if closed is not None:
        elements.extend(region_elements(closed))
    elements.extend(polyline_elements(sampled_polylines))
    return svg_document(elements)
