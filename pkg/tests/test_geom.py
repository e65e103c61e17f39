"""Geometry layer: membership, ray coordinates, orders, graded enumeration."""

import random

import pytest

from conesemi import Cone, enumerate_cone_points, lower_set, weight
from conesemi.errors import CapacityExceeded, DimensionMismatch, InvalidInput
from conesemi.geom import add, canon_key, scale, sub


def test_cone_normalizes_rays():
    c = Cone.from_rays((2, 0), (3, 3))
    assert c.rays == ((1, 0), (1, 1))
    assert c.det == 1


def test_cone_swaps_to_counterclockwise():
    c = Cone.from_rays((1, 1), (1, 0))
    assert c.rays == ((1, 0), (1, 1))
    assert c.det > 0


def test_cone_rejects_bad_rays():
    with pytest.raises(InvalidInput):
        Cone.from_rays((1, 0), (2, 0))  # dependent
    with pytest.raises(InvalidInput):
        Cone.from_rays((0, 0), (1, 0))
    with pytest.raises(DimensionMismatch):
        Cone.full_cone(4)


def test_full2_is_canonical_sector():
    assert Cone.from_rays((1, 0), (0, 1)) == Cone.full_cone(2)


def test_contains_examples(cone_a, full2):
    assert cone_a.contains((3, 1))
    assert not cone_a.contains((1, 2))
    assert full2.contains((0, 0))


def test_contains_dimension_mismatch(cone_a):
    with pytest.raises(DimensionMismatch):
        cone_a.contains((1, 2, 3))


def test_ray_coords_examples(cone_a):
    rc = cone_a.ray_coords((3, 1))
    assert (rc.alpha, rc.beta) == (2, 1)
    rc = cone_a.ray_coords((2, 2))
    assert (rc.alpha, rc.beta) == (0, 2)
    c = Cone.from_rays((2, 1), (1, 3))
    rc = c.ray_coords((3, 4))
    assert (rc.alpha, rc.beta) == (1, 1)


def test_ray_coords_reconstruct_random(cone_skew):
    rng = random.Random(0)
    r1, r2 = cone_skew.rays
    for _ in range(1000):
        x = (rng.randint(-50, 50), rng.randint(-50, 50))
        rc = cone_skew.ray_coords(x)
        rebuilt = (rc.alpha * r1[0] + rc.beta * r2[0], rc.alpha * r1[1] + rc.beta * r2[1])
        assert rebuilt == x


def test_contains_iff_coords_nonnegative(cone_skew):
    rng = random.Random(1)
    for _ in range(500):
        x = (rng.randint(-30, 30), rng.randint(-30, 30))
        rc = cone_skew.ray_coords(x)
        assert cone_skew.contains(x) == (rc.alpha >= 0 and rc.beta >= 0)


def test_cone_order_examples(cone_a):
    assert cone_a.leq((1, 1), (2, 2))
    assert not cone_a.leq((3, 1), (4, 0))
    assert cone_a.leq((3, 1), (3, 1))


def test_cone_order_is_partial_order(cone_skew):
    rng = random.Random(2)
    pts = enumerate_cone_points(cone_skew, 12)
    for _ in range(300):
        x, y, z = (rng.choice(pts) for _ in range(3))
        assert cone_skew.leq(x, x)
        if cone_skew.leq(x, y) and cone_skew.leq(y, x):
            assert x == y
        if cone_skew.leq(x, y) and cone_skew.leq(y, z):
            assert cone_skew.leq(x, z)


def test_weight_examples():
    assert weight((2, 2)) == 4
    assert weight((0, 0)) == 0
    assert weight((3, 1)) == 4


def test_enumerate_examples(cone_a, full1):
    assert enumerate_cone_points(cone_a, 2) == [(0, 0), (1, 0), (1, 1), (2, 0)]
    assert enumerate_cone_points(full1, 3) == [(0,), (1,), (2,), (3,)]
    assert enumerate_cone_points(cone_a, 0) == [(0, 0)]


def test_enumerate_matches_rectangle_scan(cone_a, cone_skew, full2):
    for cone in (cone_a, cone_skew, full2):
        for bound in (0, 1, 7, 12):
            expected = sorted(
                (
                    (x, y)
                    for x in range(bound + 1)
                    for y in range(bound + 1)
                    if x + y <= bound and cone.contains((x, y))
                ),
                key=canon_key,
            )
            got = enumerate_cone_points(cone, bound)
            assert got == expected
            assert sorted(set(got), key=canon_key) == got  # strictly increasing


def test_enumerate_full3(full3):
    pts = enumerate_cone_points(full3, 2)
    assert pts[0] == (0, 0, 0)
    assert len(pts) == 1 + 3 + 6


def test_enumerate_capacity(cone_a):
    with pytest.raises(CapacityExceeded):
        enumerate_cone_points(cone_a, 100, budget=10)


def test_capacity_env_override(monkeypatch, cone_a):
    monkeypatch.setenv("CONESEMI_CAPACITY", "5")
    with pytest.raises(CapacityExceeded):
        enumerate_cone_points(cone_a, 100)
    monkeypatch.setenv("CONESEMI_CAPACITY", "junk")
    with pytest.raises(InvalidInput):
        enumerate_cone_points(cone_a, 1)


def test_lower_set_matches_scan(cone_skew, full2):
    rng = random.Random(3)
    for cone in (cone_skew, full2):
        pts = enumerate_cone_points(cone, 14)
        for _ in range(40):
            h = rng.choice(pts)
            expected = [a for a in pts if weight(a) <= weight(h) and cone.leq(a, h)]
            assert lower_set(cone, h) == expected


def test_lower_set_outside_cone_is_empty(cone_a):
    assert lower_set(cone_a, (1, 2)) == []


def test_lower_set_budget_guard(cone_a, full2, monkeypatch):
    monkeypatch.setenv("CONESEMI_CAPACITY", "100")
    with pytest.raises(CapacityExceeded):
        lower_set(cone_a, (2000, 0))
    with pytest.raises(CapacityExceeded):
        lower_set(full2, (50, 50))


def test_point_arithmetic_guards():
    with pytest.raises(DimensionMismatch):
        add((1, 2), (1, 2, 3))
    with pytest.raises(DimensionMismatch):
        sub((1,), (1, 2))
    assert scale(3, (1, 2)) == (3, 6)


def test_normals_point_inward(cone_a, cone_skew, full2):
    for cone in (cone_a, cone_skew, full2):
        for x in enumerate_cone_points(cone, 9):
            assert all(
                n[0] * x[0] + n[1] * x[1] >= 0 for n in cone.normals
            )


def test_cone_json_roundtrip(cone_a, cone_skew, full1, full3):
    for cone in (cone_a, cone_skew, full1, full3):
        assert Cone.from_obj(cone.to_obj()) == cone
    # wrapped form is accepted too
    assert Cone.from_obj({"cone": {"type": "full", "p": 2}}) == Cone.full_cone(2)
    with pytest.raises(InvalidInput):
        Cone.from_obj({"type": "hexagonal"})
