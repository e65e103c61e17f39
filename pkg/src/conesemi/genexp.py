"""Expand a finite generating set inside a 2D cone into its gap set.

The complement of the generated semigroup is computed exactly, with a
termination certificate instead of open-ended search:

  1. Per extremal ray, the generators lying on the ray must generate a
     cofinite numerical semigroup (scaled gcd 1); its conductor k_i bounds
     behaviour along that ray.
  2. Lattice lines parallel to a ray are swept in order of distance from it.
     On each line, the first member is computed (not searched for) from the
     already-summarized lower lines, one window of k_i further points is
     tested, and everything beyond is a member because adding k_i times the
     primitive ray vector preserves membership. A line with no member at all
     proves the complement infinite.
  3. The region at ray-distance >= K_i from both rays is certified gap-free
     by checking the finite box [K_1, 2K_1) x [K_2, 2K_2) in ray coordinates:
     any deeper point is a box point plus multiples of K_i * r_i. The K_i
     double (and the strips re-sweep) while the box still contains gaps.

Every sweep step is a finite exact computation, so the result is the exact
gap set whenever it is finite, and a NotCofinite diagnosis with a witness
line otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import (
    BudgetExceeded,
    CapacityExceeded,
    ConeMismatch,
    NotCofinite,
    PointOutsideCone,
    UnsupportedDimension,
    ZeroPoint,
)
from .geom import Cone, Point, canon_key, is_zero, point_budget
from .semigroup import CSemigroup, NumericalSemigroup, make_csemigroup

DEFAULT_DEPTH_BUDGET = 1 << 14


@dataclass(frozen=True)
class GeneratorInput:
    """A 2D cone plus a deduplicated set of nonzero generators inside it."""

    cone: Cone
    generators: tuple[Point, ...]

    def __post_init__(self):
        if self.cone.p != 2:
            raise UnsupportedDimension("generator expansion is implemented for 2D cones")
        gens = []
        seen = set()
        for a in self.generators:
            a = tuple(int(c) for c in a)
            if is_zero(a):
                raise ZeroPoint("0 is not a useful generator")
            if not self.cone.contains(a):
                raise PointOutsideCone(f"generator {a} is outside the cone", point=list(a))
            if a not in seen:
                seen.add(a)
                gens.append(a)
        if not gens:
            raise ConeMismatch("at least one generator is required")
        gens.sort(key=canon_key)
        object.__setattr__(self, "generators", tuple(gens))


@dataclass(frozen=True)
class ExpandDecision:
    """Outcome of the membership-closure decision for a generating set."""

    ok: bool
    genus: int | None = None
    reason: str | None = None
    detail: str = ""

    def to_obj(self) -> dict:
        obj: dict = {"is_csemigroup": self.ok}
        if self.ok:
            obj["genus"] = self.genus
        else:
            obj["reason"] = self.reason
            obj["detail"] = self.detail
        return obj


def _cross(a: Point, b: Point) -> int:
    return a[0] * b[1] - a[1] * b[0]


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g."""
    if b == 0:
        return (a, 1, 0)
    g, s, t = _ext_gcd(b, a % b)
    return (g, t, s - (a // b) * t)


@dataclass
class _LineTable:
    """Membership summary of one lattice line x = base + t * ray.

    t_min is the first parameter inside the cone; t0 the first member
    (None for a memberless line); window covers [t0, t0 + k) and every
    t >= t0 + k is a member.
    """

    t_min: int
    t0: int | None
    k: int
    window: tuple[bool, ...] = field(default=())

    def member(self, t: int) -> bool:
        if self.t0 is None or t < self.t0:
            return False
        if t < self.t0 + self.k:
            return self.window[t - self.t0]
        return True

    def first_member_at_least(self, s: int) -> int | None:
        if self.t0 is None:
            return None
        s = max(s, self.t0)
        while s < self.t0 + self.k:
            if self.window[s - self.t0]:
                return s
            s += 1
        return s


class _Sweep:
    """Line-by-line membership tables parallel to one extremal ray."""

    def __init__(self, cone: Cone, gens, axis: int, ray_ns: NumericalSemigroup):
        r1, r2 = cone.rays
        self.d = cone.det
        self.ray = r1 if axis == 0 else r2
        if axis == 0:
            self._line_of = lambda x: _cross(r1, x)
            self._offset = lambda x: _cross(x, r2)
            g, s, t = _ext_gcd(r1[0], r1[1])
            base1 = (-t, s)  # cross(r1, base1) == 1
        else:
            self._line_of = lambda x: _cross(x, r2)
            self._offset = lambda x: _cross(r1, x)
            g, s, t = _ext_gcd(r2[1], r2[0])
            base1 = (s, -t)  # cross(base1, r2) == 1
        self.base1 = base1
        self.ob1 = self._offset(base1)
        self.k = max(ray_ns.conductor, 1)
        self.same_steps = []
        self.offline = []
        for a in gens:
            ja = self._line_of(a)
            if ja == 0:
                self.same_steps.append(self._offset(a) // self.d)
            else:
                # a sits at parameter mu on its line; landing offset is -mu
                delta, rem = divmod(ja * self.ob1 - self._offset(a), self.d)
                assert rem == 0
                self.offline.append((ja, delta))
        self.same_steps.sort()
        self.offline.sort()
        # line 0 is the ray itself, summarized by its numerical semigroup
        self.tables = [
            _LineTable(0, 0, self.k, tuple(t in ray_ns for t in range(self.k)))
        ]

    def line_point(self, j: int, t: int) -> Point:
        return (
            j * self.base1[0] + t * self.ray[0],
            j * self.base1[1] + t * self.ray[1],
        )

    def member_at(self, j: int, t: int) -> bool:
        return self.tables[j].member(t)

    def member_point(self, x: Point) -> bool:
        """Membership of a lattice point lying on a swept line."""
        j = self._line_of(x)
        t, rem = divmod(self._offset(x) - j * self.ob1, self.d)
        assert rem == 0
        return self.tables[j].member(t)

    def extend(self, n_lines: int) -> None:
        """Summarize lines up to index n_lines - 1 (continuing past work)."""
        for j in range(len(self.tables), n_lines):
            self.tables.append(self._summarize(j))

    def _summarize(self, j: int) -> _LineTable:
        t_min = _ceil_div(-j * self.ob1, self.d)
        t0 = None
        for ja, delta in self.offline:
            if ja > j:
                continue
            s = self.tables[j - ja].first_member_at_least(t_min + delta)
            if s is None:
                continue
            cand = s - delta
            if t0 is None or cand < t0:
                t0 = cand
        if t0 is None:
            witness = self.line_point(j, max(t_min, 0))
            raise NotCofinite(
                f"no member on the lattice line through {witness} with "
                f"direction {self.ray}; the complement is infinite",
                line_point=list(witness),
                direction=list(self.ray),
            )
        window = []
        for t in range(t0, t0 + self.k):
            hit = False
            for m in self.same_steps:
                tt = t - m
                if tt >= t0 and window[tt - t0]:
                    hit = True
                    break
            if not hit:
                for ja, delta in self.offline:
                    if ja <= j and self.tables[j - ja].member(t + delta):
                        hit = True
                        break
            window.append(hit)
        return _LineTable(t_min, t0, self.k, tuple(window))

    def gaps_of_line(self, j: int) -> list[Point]:
        table = self.tables[j]
        out = [self.line_point(j, t) for t in range(table.t_min, table.t0)]
        out.extend(
            self.line_point(j, table.t0 + i)
            for i, ok in enumerate(table.window)
            if not ok
        )
        return out


def _ray_multiples(cone: Cone, gens, i: int) -> list[int]:
    d = cone.det
    out = []
    for a in gens:
        sc = cone.scaled_coords(a)
        if all(sc[j] == 0 for j in range(2) if j != i):
            out.append(sc[i] // d)
    return sorted(set(out))


def _box_is_clear(cone: Cone, sweep1: _Sweep, k1: int, k2: int) -> bool:
    """Whether every lattice point with ray coordinates in
    [k1, 2*k1) x [k2, 2*k2) is a member."""
    d = cone.det
    r1, r2 = cone.rays
    for u in range(k1 * d, 2 * k1 * d):
        for v in range(k2 * d, 2 * k2 * d):
            px = u * r1[0] + v * r2[0]
            py = u * r1[1] + v * r2[1]
            if px % d or py % d:
                continue
            if not sweep1.member_point((px // d, py // d)):
                return False
    return True


def expand(g: GeneratorInput, depth_budget: int = DEFAULT_DEPTH_BUDGET) -> CSemigroup:
    """The semigroup generated by g, provided its gap set is finite.

    Raises ConeMismatch when a ray carries no generator, NotCofinite when
    the complement is provably infinite, BudgetExceeded when the certified
    region outgrows depth_budget before stabilizing.
    """
    cone = g.cone
    d = cone.det
    ray_ns = []
    for i, r in enumerate(cone.rays):
        multiples = _ray_multiples(cone, g.generators, i)
        if not multiples:
            raise ConeMismatch(
                f"no generator lies on extremal ray {r}", ray=list(r)
            )
        common = 0
        for m in multiples:
            common = gcd(common, m)
        if common != 1:
            raise NotCofinite(
                f"generators on ray {r} are multiples of {common}", ray=list(r)
            )
        ray_ns.append(NumericalSemigroup.from_generators(multiples))

    cap1 = max(ray_ns[0].conductor, 1)
    cap2 = max(ray_ns[1].conductor, 1)
    sweep1 = _Sweep(cone, g.generators, 0, ray_ns[0])
    sweep2 = _Sweep(cone, g.generators, 1, ray_ns[1])
    budget = point_budget()
    while True:
        # sweep work is lines times window width; charge it like enumeration
        if 2 * d * (cap2 * cap1 + cap1 * cap2) > budget:
            raise CapacityExceeded(
                f"strip sweeps would summarize more than {budget} points; "
                "raise CONESEMI_CAPACITY to override"
            )
        sweep1.extend(2 * cap2 * d)  # lines indexed by distance from ray 1
        sweep2.extend(2 * cap1 * d)
        if _box_is_clear(cone, sweep1, cap1, cap2):
            break
        cap1 *= 2
        cap2 *= 2
        if max(cap1, cap2) > depth_budget:
            raise BudgetExceeded(
                f"certified region exceeded depth {depth_budget} without stabilizing"
            )

    gaps: set[Point] = set()
    for j in range(cap2 * d):
        gaps.update(sweep1.gaps_of_line(j))
    for i in range(cap1 * d):
        gaps.update(sweep2.gaps_of_line(i))
    return make_csemigroup(cone, sorted(gaps, key=canon_key))


def is_csemigroup(g: GeneratorInput, depth_budget: int = DEFAULT_DEPTH_BUDGET) -> ExpandDecision:
    """Decide whether the generators span a cofinite subsemigroup of the cone."""
    try:
        s = expand(g, depth_budget)
    except NotCofinite as e:
        return ExpandDecision(False, reason="NotCofinite", detail=str(e))
    except ConeMismatch as e:
        return ExpandDecision(False, reason="ConeMismatch", detail=str(e))
    return ExpandDecision(True, genus=s.genus)
