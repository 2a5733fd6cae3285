"""Tests for winding numbers and sampled region reconstruction."""

import math

import numpy as np

from unideform.predicates import SampleGrid
from unideform.sampling import (
    sampled_exponent_region,
    winding_number,
    winding_numbers,
)
from unideform.zoo import identity_fn, koebe

UNIT_CIRCLE = np.exp(2j * math.pi * np.linspace(0, 1, 256, endpoint=False))


def test_winding_number_basic():
    assert winding_number(UNIT_CIRCLE, 0j) == 1
    assert winding_number(UNIT_CIRCLE, 0.5 + 0.2j) == 1
    assert winding_number(UNIT_CIRCLE, 2.0 + 0j) == 0
    assert winding_number(UNIT_CIRCLE[::-1], 0j) == -1
    double = np.exp(2j * math.pi * np.linspace(0, 2, 256, endpoint=False))
    assert winding_number(double, 0j) == 2


def test_winding_numbers_matches_single_point_version():
    rng = np.random.default_rng(3)
    # a wobbly closed curve
    t = np.linspace(0, 2 * math.pi, 400, endpoint=False)
    curve = (1.0 + 0.3 * np.cos(5 * t)) * np.exp(1j * t)
    pts = rng.uniform(-2, 2, size=(200,)) + 1j * rng.uniform(-2, 2, size=(200,))
    batch = winding_numbers(curve, pts)
    for p, wn in zip(pts, batch):
        assert wn == winding_number(curve, complex(p))


def test_winding_numbers_preserves_shape():
    pts = np.zeros((3, 4), dtype=complex)
    assert winding_numbers(UNIT_CIRCLE, pts).shape == (3, 4)


def test_identity_region_is_whole_box():
    # p is identically 1, so no exponent is ever excluded
    grid = SampleGrid(radii=(0.5, 0.9), angles_per_radius=64,
                      uses_exact_eval=True)
    sampled = sampled_exponent_region(identity_fn(16), grid, resolution=32)
    assert sampled.complement.all()
    assert sampled.boundary == ()


def test_koebe_sampled_region_approximates_half_disk_circle():
    grid = SampleGrid(radii=(0.5, 0.99), angles_per_radius=512,
                      uses_exact_eval=True)
    sampled = sampled_exponent_region(koebe(64), grid, resolution=200)
    boundary = np.concatenate(sampled.boundary)
    # every boundary point near the circle |c - 1/2| = 1/2
    dist = np.abs(np.abs(boundary - 0.5) - 0.5)
    assert dist.max() < 0.05
    # classification agrees with the disk away from its boundary:
    # the disk center is in the exponent region, points above it are not
    assert sampled.complement[
        np.argmin(np.abs(sampled.ys - 0.0)),
        np.argmin(np.abs(sampled.xs - 0.5))]
    assert not sampled.complement[
        np.argmin(np.abs(sampled.ys - 1.5)),
        np.argmin(np.abs(sampled.xs - 0.5))]


def test_sampled_region_is_bounded():
    # the exponent region is compact, so the window corners lie outside it
    grid = SampleGrid(radii=(0.5, 0.9), angles_per_radius=128,
                      uses_exact_eval=True)
    sampled = sampled_exponent_region(koebe(32), grid, resolution=64)
    assert not sampled.complement[0, 0] and not sampled.complement[-1, -1]
