"""Variability regions, exponent regions, and the Moebius map T(w) = 1/(1-w).

The exponent set of the power deformation against local univalence is the
complement of T applied to the variability region of z f'/f. Half-planes
map to closed disks under that complement, sectors (intersections of two
half-planes through 0) to unions of two closed disks, the slit plane to the
segment [0, 1], and the punctured plane to the pair {0, 1}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

import numpy as np

INF = complex(float("inf"), 0.0)


class RegionError(ValueError):
    """The requested region is not representable in closed form."""


# -- descriptors --------------------------------------------------------

@dataclass(frozen=True)
class HalfPlane:
    """{w : Re(normal * w) > offset} with |normal| = 1."""
    normal: complex
    offset: float

    def __post_init__(self):
        if abs(abs(self.normal) - 1.0) > 1e-12:
            raise ValueError("half-plane normal must have unit modulus")


@dataclass(frozen=True)
class Sector:
    """{w != 0 : |arg w - bisector| < half_opening}, vertex at 0."""
    bisector: float
    half_opening: float

    def __post_init__(self):
        if not 0.0 < self.half_opening < math.pi / 2:
            raise ValueError("sector half-opening must lie in (0, pi/2)")


@dataclass(frozen=True)
class SlitPlane:
    """The plane slit along (-inf, 0]."""


@dataclass(frozen=True)
class PuncturedPlane:
    """The plane with the origin removed."""


RegionDescriptor = Union[HalfPlane, Sector, SlitPlane, PuncturedPlane]


@dataclass(frozen=True)
class Disk:
    center: complex
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("disk radius must be positive")


@dataclass(frozen=True)
class Segment:
    start: complex
    end: complex


@dataclass(frozen=True)
class ExponentRegion:
    """Closed bounded set: a union of closed disks, segments, and points."""
    disks: Tuple[Disk, ...] = ()
    segments: Tuple[Segment, ...] = ()
    points: Tuple[complex, ...] = ()

    def components(self):
        return (*self.disks, *self.segments, *self.points)


# -- class specifications ------------------------------------------------

class ClassId(Enum):
    S = "S"
    STARLIKE = "S*"
    STARLIKE_ORDER = "S*(alpha)"
    CONVEX = "K"
    CLOSE_TO_CONVEX = "C"
    SPIRALLIKE = "Sp(lambda)"
    SPIRALLIKE_ALL = "Sp"
    STRONGLY_STARLIKE = "SS(alpha)"
    STRONGLY_SPIRALLIKE = "Sp(lambda,alpha)"


@dataclass(frozen=True)
class ClassSpec:
    id: ClassId
    alpha: Optional[float] = None
    lam: Optional[float] = None

    def __post_init__(self):
        cid = self.id
        if cid is ClassId.STARLIKE_ORDER:
            if self.alpha is None or not 0.0 <= self.alpha < 1.0:
                raise ValueError("S*(alpha) requires 0 <= alpha < 1")
        elif cid is ClassId.STRONGLY_STARLIKE:
            if self.alpha is None or not 0.0 < self.alpha < 1.0:
                raise ValueError("SS(alpha) requires 0 < alpha < 1")
        elif cid is ClassId.SPIRALLIKE:
            if self.lam is None or not abs(self.lam) < math.pi / 2:
                raise ValueError("Sp(lambda) requires |lambda| < pi/2")
        elif cid is ClassId.STRONGLY_SPIRALLIKE:
            if (self.alpha is None or self.lam is None
                    or not abs(self.lam) < math.pi * self.alpha / 2 < math.pi / 2):
                raise ValueError(
                    "Sp(lambda,alpha) requires |lambda| < pi*alpha/2 < pi/2")

    def describe(self) -> str:
        parts = [self.id.value]
        if self.alpha is not None:
            parts.append(f"alpha={self.alpha:g}")
        if self.lam is not None:
            parts.append(f"lambda={self.lam:g}")
        return " ".join(parts)


# -- the Moebius map -----------------------------------------------------

def mobius_T(w):
    """T(w) = 1/(1 - w) on the extended plane; T(1) = inf, T(inf) = 0."""
    if w is INF or (isinstance(w, complex) and not np.isfinite(abs(w))):
        return 0j
    w = complex(w)
    if w == 1:
        return INF
    return 1.0 / (1.0 - w)


def mobius_T_inv(c):
    """T^{-1}(c) = 1 - 1/c; T^{-1}(0) = inf, T^{-1}(inf) = 1."""
    if c is INF or (isinstance(c, complex) and not np.isfinite(abs(c))):
        return 1.0 + 0j
    c = complex(c)
    if c == 0:
        return INF
    return 1.0 - 1.0 / c


# -- closed forms --------------------------------------------------------

def closed_form_variability(cls: ClassSpec) -> RegionDescriptor:
    """Exact variability region of z f'/f over the class."""
    cid = cls.id
    if cid is ClassId.STARLIKE:
        return HalfPlane(1.0 + 0j, 0.0)
    if cid is ClassId.STARLIKE_ORDER:
        return HalfPlane(1.0 + 0j, cls.alpha)
    if cid is ClassId.CONVEX:
        return HalfPlane(1.0 + 0j, 0.5)
    if cid is ClassId.SPIRALLIKE:
        return HalfPlane(complex(math.cos(cls.lam), -math.sin(cls.lam)), 0.0)
    if cid is ClassId.SPIRALLIKE_ALL:
        return SlitPlane()
    if cid is ClassId.STRONGLY_STARLIKE:
        return Sector(0.0, math.pi * cls.alpha / 2)
    if cid is ClassId.STRONGLY_SPIRALLIKE:
        return Sector(cls.lam, math.pi * cls.alpha / 2)
    # S and close-to-convex
    return PuncturedPlane()


def _spiral_disk(lam: float) -> Disk:
    """Closed disk with center (1 - i tan lam)/2 and radius 1/(2 cos lam)."""
    if not abs(lam) < math.pi / 2:
        raise RegionError("disk parameter must satisfy |lambda| < pi/2")
    return Disk(complex(0.5, -0.5 * math.tan(lam)), 0.5 / math.cos(lam))


def closed_form_exponent_region(cls: ClassSpec) -> ExponentRegion:
    """Exact exponent region of the power deformation for the class."""
    cid = cls.id
    if cid is ClassId.STARLIKE:
        return ExponentRegion(disks=(Disk(0.5 + 0j, 0.5),))
    if cid is ClassId.STARLIKE_ORDER:
        r = 0.5 / (1.0 - cls.alpha)
        return ExponentRegion(disks=(Disk(complex(r, 0.0), r),))
    if cid is ClassId.CONVEX:
        return ExponentRegion(disks=(Disk(1.0 + 0j, 1.0),))
    if cid is ClassId.SPIRALLIKE:
        return ExponentRegion(disks=(_spiral_disk(cls.lam),))
    if cid is ClassId.SPIRALLIKE_ALL:
        return ExponentRegion(segments=(Segment(0j, 1.0 + 0j),))
    if cid is ClassId.STRONGLY_STARLIKE:
        half = math.pi * cls.alpha / 2
        cot = math.cos(half) / math.sin(half)
        r = 0.5 / math.sin(half)
        return ExponentRegion(disks=(
            Disk(complex(0.5, -0.5 * cot), r),
            Disk(complex(0.5, 0.5 * cot), r),
        ))
    if cid is ClassId.STRONGLY_SPIRALLIKE:
        lam_plus = cls.lam + math.pi * (1.0 - cls.alpha) / 2
        lam_minus = cls.lam - math.pi * (1.0 - cls.alpha) / 2
        return ExponentRegion(disks=(_spiral_disk(lam_plus),
                                     _spiral_disk(lam_minus)))
    # S and close-to-convex
    return ExponentRegion(points=(0j, 1.0 + 0j))


# -- computed complements --------------------------------------------------

def _halfplane_complement_disk(v: HalfPlane) -> Disk:
    # c outside T({Re(n w) > b}) iff Re(n / c) >= Re(n) - b, a closed disk
    # about n/(2d) of radius 1/(2d) with d = Re(n) - b, provided d > 0.
    d = v.normal.real - v.offset
    if d <= 0:
        raise RegionError(
            "complement of the T-image is unbounded; half-plane must contain 1")
    return Disk(v.normal / (2.0 * d), 1.0 / (2.0 * d))


def complement_of_T_image(v: RegionDescriptor) -> ExponentRegion:
    """The set of c with 1 - 1/c outside the descriptor (plus c = 0)."""
    if isinstance(v, HalfPlane):
        return ExponentRegion(disks=(_halfplane_complement_disk(v),))
    if isinstance(v, Sector):
        lam, half = v.bisector, v.half_opening
        if not abs(lam) < half:
            raise RegionError("sector must contain the positive real axis (1 in V)")
        # The sector is the intersection of two half-planes whose boundary
        # lines carry the edge rays; the complement of the T-image is then
        # the union of the two half-plane complements.
        disks = []
        for mu in (lam - half + math.pi / 2, lam + half - math.pi / 2):
            n = complex(math.cos(mu), -math.sin(mu))
            disks.append(_halfplane_complement_disk(HalfPlane(n, 0.0)))
        return ExponentRegion(disks=tuple(disks))
    if isinstance(v, SlitPlane):
        # 1 - 1/c lands on (-inf, 0] exactly for real c in (0, 1]; with T of
        # infinity excluded, c = 0 joins the complement.
        return ExponentRegion(segments=(Segment(0j, 1.0 + 0j),))
    if isinstance(v, PuncturedPlane):
        return ExponentRegion(points=(0j, 1.0 + 0j))
    raise RegionError(f"unsupported descriptor {type(v).__name__}")


# -- region predicates and algebra ----------------------------------------

def _segment_distance(c: complex, seg: Segment) -> float:
    d = seg.end - seg.start
    L2 = abs(d) ** 2
    if L2 == 0:
        return abs(c - seg.start)
    t = ((c - seg.start).real * d.real + (c - seg.start).imag * d.imag) / L2
    t = min(1.0, max(0.0, t))
    return abs(c - (seg.start + t * d))


def signed_distance(region: ExponentRegion, c: complex) -> float:
    """Negative inside, zero on the boundary, positive outside."""
    best = math.inf
    for disk in region.disks:
        best = min(best, abs(c - disk.center) - disk.radius)
    for seg in region.segments:
        best = min(best, _segment_distance(c, seg))
    for p in region.points:
        best = min(best, abs(c - p))
    return best


def region_contains(region: ExponentRegion, c: complex, tol: float = 1e-9) -> str:
    """Classify c as 'inside', 'boundary', or 'outside' with a tol band."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    d = signed_distance(region, complex(c))
    if d < -tol:
        return "inside"
    if d <= tol:
        return "boundary"
    return "outside"


def scale_region(region: ExponentRegion, s: complex) -> ExponentRegion:
    """Multiply the region by the nonzero scalar s."""
    s = complex(s)
    if s == 0:
        raise ValueError("scale factor must be nonzero")
    return ExponentRegion(
        disks=tuple(Disk(s * d.center, abs(s) * d.radius) for d in region.disks),
        segments=tuple(Segment(s * g.start, s * g.end) for g in region.segments),
        points=tuple(s * p for p in region.points),
    )


def region_subset(a: ExponentRegion, b: ExponentRegion, tol: float = 1e-12) -> bool:
    """Whether a is contained in b, for disk/segment/point unions."""
    for disk in a.disks:
        if not any(abs(disk.center - d.center) + disk.radius <= d.radius + tol
                   for d in b.disks):
            return False
    for seg in a.segments:
        ts = np.linspace(0.0, 1.0, 65)
        pts = seg.start + ts * (seg.end - seg.start)
        if not all(signed_distance(b, complex(p)) <= tol for p in pts):
            return False
    for p in a.points:
        if not signed_distance(b, p) <= tol:
            return False
    return True


def region_boundary_points(region: ExponentRegion, n: int,
                           samples_per_disk: int = 4096):
    """n points on the boundary of a union of disks, with their owning centers.

    Returns two complex arrays (points, centers). Points interior to another
    disk of the union are discarded before downsampling.
    """
    if not region.disks:
        raise RegionError("boundary points are defined for disk unions only")
    pts = []
    owners = []
    for i, disk in enumerate(region.disks):
        theta = np.linspace(0.0, 2.0 * math.pi, samples_per_disk, endpoint=False)
        b = disk.center + disk.radius * np.exp(1j * theta)
        keep = np.ones(b.size, dtype=bool)
        for j, other in enumerate(region.disks):
            if j != i:
                keep &= np.abs(b - other.center) >= other.radius - 1e-12
        pts.append(b[keep])
        owners.append(np.full(int(keep.sum()), disk.center, dtype=complex))
    pts = np.concatenate(pts)
    owners = np.concatenate(owners)
    if pts.size < n:
        raise RegionError("not enough boundary samples; increase samples_per_disk")
    idx = np.linspace(0, pts.size, n, endpoint=False).astype(int)
    return pts[idx], owners[idx]
