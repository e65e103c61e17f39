"""Exact lattice geometry: points, pointed integer cones, orders, enumeration.

Points are plain tuples of Python ints (dimension 1..3). A cone is either
the full nonnegative orthant of its dimension or a two-dimensional sector
between two primitive integer rays. All arithmetic is exact; there is no
floating point anywhere in this module.

The canonical total order on lattice points is weight-graded lexicographic:
``key(x) = (weight(x), x)``. It is bookkeeping for deterministic output and
duplicate-free enumeration, nothing more.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import CapacityExceeded, DimensionMismatch, InvalidInput

Point = tuple[int, ...]

DEFAULT_POINT_BUDGET = 10_000_000


def point_budget() -> int:
    """Active cap on enumerated point counts (env CONESEMI_CAPACITY overrides)."""
    raw = os.environ.get("CONESEMI_CAPACITY")
    if raw is None:
        return DEFAULT_POINT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise InvalidInput(f"CONESEMI_CAPACITY must be an integer, got {raw!r}")
    if value <= 0:
        raise InvalidInput("CONESEMI_CAPACITY must be positive")
    return value


def weight(x: Point) -> int:
    """Coordinate sum of a lattice point."""
    return sum(x)


def add(x: Point, y: Point) -> Point:
    if len(x) != len(y):
        raise DimensionMismatch(f"{x} and {y} have different dimensions")
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Point, y: Point) -> Point:
    if len(x) != len(y):
        raise DimensionMismatch(f"{x} and {y} have different dimensions")
    return tuple(a - b for a, b in zip(x, y))


def scale(k: int, x: Point) -> Point:
    return tuple(k * a for a in x)


def is_zero(x: Point) -> bool:
    return all(a == 0 for a in x)


def canon_key(x: Point) -> tuple[int, Point]:
    """Sort key for the canonical (weight-graded lexicographic) order."""
    return (weight(x), x)


def _cross(a: Point, b: Point) -> int:
    return a[0] * b[1] - a[1] * b[0]


def _ceil_div(a: int, b: int) -> int:
    # b > 0
    return -((-a) // b)


def _floor_div(a: int, b: int) -> int:
    return a // b


def _primitive(r: Point) -> Point:
    g = gcd(r[0], r[1])
    return (r[0] // g, r[1] // g)


@dataclass(frozen=True)
class RayCoords:
    """Exact coordinates of a 2D point in the ray basis: x = alpha*r1 + beta*r2."""

    alpha: Fraction
    beta: Fraction


@dataclass(frozen=True)
class Cone:
    """A pointed integer cone: full orthant, or 2D sector between two rays.

    Invariants (established by the constructors, assumed everywhere else):
      * ``rays`` are primitive, nonzero, nonnegative integer vectors;
      * for sectors, rays are stored counterclockwise, so ``det > 0``;
      * the full orthant in dimension p has the standard basis as rays.
    """

    p: int
    rays: tuple[Point, ...]
    full: bool
    det: int

    @staticmethod
    def full_cone(p: int) -> "Cone":
        if p not in (1, 2, 3):
            raise DimensionMismatch(f"dimension must be 1, 2 or 3, got {p}")
        rays = tuple(tuple(1 if j == i else 0 for j in range(p)) for i in range(p))
        return Cone(p=p, rays=rays, full=True, det=1)

    @staticmethod
    def from_rays(r1, r2) -> "Cone":
        r1, r2 = tuple(r1), tuple(r2)
        if len(r1) != 2 or len(r2) != 2:
            raise DimensionMismatch("sector cones are two-dimensional")
        for r in (r1, r2):
            if any(c < 0 for c in r) or r == (0, 0):
                raise InvalidInput(f"ray {r} must be a nonzero vector of naturals")
        r1, r2 = _primitive(r1), _primitive(r2)
        d = _cross(r1, r2)
        if d == 0:
            raise InvalidInput(f"rays {r1}, {r2} are linearly dependent")
        if d < 0:
            r1, r2 = r2, r1
            d = -d
        if r1 == (1, 0) and r2 == (0, 1):
            return Cone.full_cone(2)
        return Cone(p=2, rays=(r1, r2), full=False, det=d)

    # -- membership and orders ------------------------------------------------

    def _check_dim(self, x: Point) -> None:
        if len(x) != self.p:
            raise DimensionMismatch(f"point {x} has dimension {len(x)}, cone has {self.p}")

    def scaled_coords(self, x: Point) -> tuple[int, ...]:
        """Per-ray coordinates scaled by det, as exact integers.

        x lies in the cone iff every scaled coordinate is >= 0.
        """
        self._check_dim(x)
        if self.full:
            return tuple(x)
        r1, r2 = self.rays
        return (_cross(x, r2), _cross(r1, x))

    def contains(self, x: Point) -> bool:
        return all(c >= 0 for c in self.scaled_coords(x))

    def ray_coords(self, x: Point) -> RayCoords:
        """Solve x = alpha*r1 + beta*r2 exactly (2D only; signs unrestricted)."""
        if self.p != 2:
            raise DimensionMismatch("ray coordinates are defined for 2D cones")
        u, v = self.scaled_coords(x)
        return RayCoords(Fraction(u, self.det), Fraction(v, self.det))

    def leq(self, x: Point, y: Point) -> bool:
        """Cone order: x <= y iff y - x lies in the cone."""
        self._check_dim(x)
        return self.contains(sub(y, x))

    @property
    def normals(self) -> tuple[Point, ...]:
        """Inward normals of the supporting hyperplanes."""
        if self.full:
            return self.rays
        r1, r2 = self.rays
        return ((-r1[1], r1[0]), (r2[1], -r2[0]))

    # -- graded enumeration ---------------------------------------------------

    def _sector_xrange(self, t: int) -> tuple[int, int]:
        # On the level x+y = t the sector cuts x into [lo, hi].
        r1, r2 = self.rays
        w1, w2 = weight(r1), weight(r2)
        lo = _ceil_div(t * r2[0], w2)
        hi = _floor_div(t * r1[0], w1)
        return lo, hi

    def points_at_weight(self, t: int) -> list[Point]:
        """Lattice points of the cone on the level of weight t, lex order."""
        if t < 0:
            return []
        if self.p == 1:
            return [(t,)]
        if self.p == 3:
            return [(a, b, t - a - b) for a in range(t + 1) for b in range(t - a + 1)]
        if self.full:
            return [(a, t - a) for a in range(t + 1)]
        lo, hi = self._sector_xrange(t)
        return [(a, t - a) for a in range(lo, hi + 1)]

    def level_is_empty(self, t: int) -> bool:
        """Whether the cone has no lattice point of weight t."""
        if t < 0:
            return True
        if self.full or self.p != 2:
            return False
        lo, hi = self._sector_xrange(t)
        return lo > hi

    def empty_level_bound(self) -> int:
        """A level T such that every level >= T contains a cone lattice point.

        For a sector, the level line cuts the cone in a segment whose
        x-extent is t*|r1x*w2 - r2x*w1| / (w1*w2); once that reaches 1 the
        segment contains an integer point. Full orthants never miss a level.
        """
        if self.full or self.p != 2:
            return 0
        r1, r2 = self.rays
        w1, w2 = weight(r1), weight(r2)
        spread = abs(r1[0] * w2 - r2[0] * w1)  # nonzero: rays independent
        return _ceil_div(w1 * w2, spread)

    # -- serialization ----------------------------------------------------------

    def to_obj(self) -> dict:
        if self.full:
            return {"type": "full", "p": self.p}
        return {"type": "rays2d", "rays": [list(r) for r in self.rays]}

    @staticmethod
    def from_obj(obj) -> "Cone":
        if isinstance(obj, dict) and "cone" in obj:
            obj = obj["cone"]
        if not isinstance(obj, dict) or "type" not in obj:
            raise InvalidInput("cone object must have a 'type' field")
        kind = obj["type"]
        if kind == "full":
            return Cone.full_cone(int(obj["p"]))
        if kind == "rays2d":
            rays = obj["rays"]
            if len(rays) != 2:
                raise InvalidInput("rays2d cone takes exactly two rays")
            return Cone.from_rays([int(c) for c in rays[0]], [int(c) for c in rays[1]])
        raise InvalidInput(f"unknown cone type {kind!r}")


def lower_set(cone: Cone, x: Point) -> list[Point]:
    """Cone lattice points a with x - a also in the cone, canonical order.

    In scaled ray coordinates this is a coordinate box, so the size is
    proportional to the output, not to a graded sweep of the whole cone.
    """
    x = tuple(x)
    cone._check_dim(x)
    if not cone.contains(x):
        return []
    cap = point_budget()
    if cone.full:
        size = 1
        for c in x:
            size *= c + 1
        if size > cap:
            raise CapacityExceeded(f"lower set of {x} has more than {cap} points")
        pts = list(itertools.product(*(range(c + 1) for c in x)))
    else:
        d = cone.det
        r1, r2 = cone.rays
        uh, vh = cone.scaled_coords(x)
        if (uh + 1) * (vh + 1) > cap:
            raise CapacityExceeded(f"lower set of {x} has more than {cap} candidates")
        pts = []
        for u in range(uh + 1):
            for v in range(vh + 1):
                px = u * r1[0] + v * r2[0]
                py = u * r1[1] + v * r2[1]
                if px % d == 0 and py % d == 0:
                    pts.append((px // d, py // d))
    pts.sort(key=canon_key)
    return pts


def enumerate_cone_points(cone: Cone, max_weight: int, budget: int | None = None) -> list[Point]:
    """All cone lattice points of weight <= max_weight in canonical order."""
    if max_weight < 0:
        raise InvalidInput("max_weight must be nonnegative")
    cap = point_budget() if budget is None else budget
    out: list[Point] = []
    for t in range(max_weight + 1):
        level = cone.points_at_weight(t)
        if len(out) + len(level) > cap:
            raise CapacityExceeded(
                f"more than {cap} points below weight {max_weight}; "
                "raise CONESEMI_CAPACITY to override"
            )
        out.extend(level)
    return out
