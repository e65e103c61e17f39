"""Cofinite subsemigroups of a pointed integer cone and their invariants.

A C-semigroup is stored by its cone together with the finite set of cone
lattice points it misses (the gaps). Everything else (minimal generators,
Frobenius/pseudo-Frobenius sets, Apery sets, weight data) is derived on
demand with exact arithmetic and cached on the immutable value.

Orders in play:
  * cone order:     x <= y  iff  y - x lies in the cone;
  * induced order:  x <= y  iff  y - x lies in the semigroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from .errors import (
    EmptyGapSet,
    GapOutsideCone,
    InvalidInput,
    InvalidRay,
    NotAMember,
    NotClosed,
    ZeroGap,
    ZeroShift,
)
from .fme import feasible_strict
from .geom import (
    Cone,
    Point,
    add,
    canon_key,
    enumerate_cone_points,
    is_zero,
    lower_set,
    sub,
    weight,
)


@dataclass(frozen=True)
class NumericalSemigroup:
    """A cofinite additive submonoid of the naturals, stored by its gap set."""

    gaps: tuple[int, ...]

    @classmethod
    def from_gaps(cls, gaps) -> "NumericalSemigroup":
        normalized = sorted({int(g) for g in gaps})
        if normalized and normalized[0] < 1:
            raise ZeroGap("numerical semigroup gaps must be positive")
        gap_set = set(normalized)
        for h in normalized:
            for a in range(1, h // 2 + 1):
                if a not in gap_set and h - a not in gap_set:
                    raise NotClosed((h,), (a,), (h - a,))
        return cls(tuple(normalized))

    @classmethod
    def from_generators(cls, generators) -> "NumericalSemigroup":
        """Expand a coprime generating set; gaps found by graded reachability."""
        gens = sorted({int(g) for g in generators})
        if not gens or gens[0] < 1:
            raise InvalidInput("generators must be positive integers")
        if _gcd_all(gens) != 1:
            raise InvalidInput(f"generators {gens} must have gcd 1")
        m = gens[0]
        bound = m * gens[-1] + 2
        while True:
            reach = bytearray(bound)
            reach[0] = 1
            for t in range(1, bound):
                for a in gens:
                    if a <= t and reach[t - a]:
                        reach[t] = 1
                        break
            # m consecutive members make everything beyond them reachable
            run = 0
            for t in range(bound):
                run = run + 1 if reach[t] else 0
                if run == m:
                    stable = t - m + 1
                    return cls.from_gaps(
                        k for k in range(stable) if not reach[k]
                    )
            bound *= 2

    @cached_property
    def _gap_set(self) -> frozenset[int]:
        return frozenset(self.gaps)

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def frobenius(self) -> int:
        """Largest gap, or -1 when the semigroup is all of the naturals."""
        return self.gaps[-1] if self.gaps else -1

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @property
    def multiplicity(self) -> int:
        """Least nonzero element."""
        t = 1
        while t in self._gap_set:
            t += 1
        return t

    def __contains__(self, n: int) -> bool:
        return n >= 0 and n not in self._gap_set

    def pseudo_frobenius(self) -> tuple[int, ...]:
        """Gaps a with a + n in the semigroup for every nonzero element n."""
        if not self.gaps:
            raise EmptyGapSet("the full semigroup has no pseudo-Frobenius numbers")
        out = []
        for a in self.gaps:
            # elements beyond frobenius - a push a + n past every gap
            if all(
                a + n not in self._gap_set
                for n in range(1, self.frobenius - a + 1)
                if n in self
            ):
                out.append(a)
        return tuple(out)

    def to_obj(self) -> dict:
        return {
            "gaps": list(self.gaps),
            "frobenius": self.frobenius,
            "conductor": self.conductor,
            "multiplicity": self.multiplicity,
        }


def _gcd_all(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


@dataclass(frozen=True)
class CofiniteNat:
    """The naturals minus a finite excluded set."""

    excluded: tuple[int, ...]

    def __contains__(self, t: int) -> bool:
        return t >= 0 and t not in self.excluded

    def to_obj(self) -> dict:
        return {"excluded": list(self.excluded)}


@dataclass(frozen=True)
class CSemigroup:
    """Cone plus canonically sorted gap tuple.

    Construct through :func:`make_csemigroup`, which validates that the
    gaps are nonzero cone points whose complement is closed under addition.
    Direct construction assumes those invariants. Instances are immutable
    and safe to share between threads; derived data is cached.
    """

    cone: Cone
    gaps: tuple[Point, ...]

    # -- basic structure -------------------------------------------------------

    @cached_property
    def gap_set(self) -> frozenset[Point]:
        return frozenset(self.gaps)

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @cached_property
    def max_gap_weight(self) -> int:
        return max((weight(h) for h in self.gaps), default=0)

    def member(self, x) -> bool:
        x = tuple(x)
        return self.cone.contains(x) and x not in self.gap_set

    def induced_leq(self, x, y) -> bool:
        """Induced order: x <= y iff y - x belongs to the semigroup."""
        return self.member(sub(tuple(y), tuple(x)))

    # -- generators ------------------------------------------------------------

    @cached_property
    def _generator_region(self) -> tuple[tuple[int, ...], int]:
        """Scaled per-ray bounds containing every minimal generator, plus a
        weight cap for the bounded region.

        If the i-th scaled ray coordinate of x exceeds every gap's by more
        than step_i * det (step_i a nonzero element of the i-th ray
        restriction), then x - step_i * r_i is a nonzero member, so x
        decomposes. Minimal generators therefore fit in the box below.
        """
        cone = self.cone
        d = cone.det
        bounds = []
        for i, r in enumerate(cone.rays):
            step = max(self.ray_restriction(i).conductor, 1)
            hmax = max((cone.scaled_coords(h)[i] for h in self.gaps), default=0)
            bounds.append(hmax + step * d)
        cap = sum(u * weight(r) for u, r in zip(bounds, cone.rays)) // d
        return tuple(bounds), cap

    @cached_property
    def minimal_generators(self) -> tuple[Point, ...]:
        """The unique minimal generating set: minimal nonzero elements under
        the induced order, i.e. the members with no two-member decomposition."""
        bounds, cap = self._generator_region
        cone = self.cone
        members: list[tuple[Point, tuple[int, ...]]] = []
        for x in enumerate_cone_points(cone, cap):
            if is_zero(x) or x in self.gap_set:
                continue
            sc = cone.scaled_coords(x)
            if all(u <= b for u, b in zip(sc, bounds)):
                members.append((x, sc))
        out = []
        for x, sx in members:
            wx = weight(x)
            decomposable = False
            for a, sa in members:
                if weight(a) >= wx:
                    break
                if all(c <= t for c, t in zip(sa, sx)):
                    # x - a stays in the cone; nonzero since weights differ
                    if sub(x, a) not in self.gap_set:
                        decomposable = True
                        break
            if not decomposable:
                out.append(x)
        return tuple(out)

    # -- gap-side invariants -----------------------------------------------------

    def frobenius_set(self, order: str = "cone") -> tuple[Point, ...]:
        """Maximal gaps under the cone order (default) or the induced order."""
        if order == "cone":
            dominated = self.cone.leq
        elif order == "induced":
            dominated = self.induced_leq
        else:
            raise InvalidInput(f"order must be 'cone' or 'induced', got {order!r}")
        return tuple(
            h
            for h in self.gaps
            if not any(k != h and dominated(h, k) for k in self.gaps)
        )

    def pseudo_frobenius(self) -> tuple[Point, ...]:
        """Gaps a with a + s in the semigroup for every nonzero member s.

        Checking minimal generators suffices: a + m1 + m2 = (a + m1) + m2
        with a + m1 already a member, and inductively for longer sums.
        """
        if not self.gaps:
            raise EmptyGapSet("the gap-free semigroup has no pseudo-Frobenius set")
        msg = self.minimal_generators
        return tuple(
            a
            for a in self.gaps
            if all(add(a, m) not in self.gap_set for m in msg)
        )

    def apery_set(self, b) -> tuple[Point, ...]:
        """Members a with a - b a gap; equivalently gaps shifted by b that land
        back in the semigroup."""
        b = tuple(b)
        self.cone._check_dim(b)
        if is_zero(b):
            raise ZeroShift("Apery shift must be nonzero")
        if not self.member(b):
            raise NotAMember(f"{b} is not in the semigroup", point=list(b))
        shifted = (add(h, b) for h in self.gaps)
        return tuple(sorted((a for a in shifted if a not in self.gap_set), key=canon_key))

    def frobenius_elements(self) -> tuple[Point, ...]:
        """Gaps that a strictly positive weight vector separates from all other
        gaps; equivalently the possible gap maxima over all term orders.

        Feasibility of the open system {a > 0, (f-h).a > 0 for all h} is
        decided exactly by Fourier-Motzkin elimination.
        """
        if not self.gaps:
            raise EmptyGapSet("the gap-free semigroup has no Frobenius elements")
        p = self.cone.p
        units = [tuple(1 if j == i else 0 for j in range(p)) for i in range(p)]
        out = []
        for f in self.gaps:
            rows = [sub(f, h) for h in self.gaps if h != f]
            if feasible_strict(rows + units):
                out.append(f)
        return tuple(out)

    # -- weight data ---------------------------------------------------------------

    def weight_set(self) -> CofiniteNat:
        """Weights whose level line exists in the cone and carries no
        Frobenius-set gap, as a cofinite subset of the naturals."""
        excluded = {weight(f) for f in self.frobenius_set()}
        for t in range(self.cone.empty_level_bound()):
            if self.cone.level_is_empty(t):
                excluded.add(t)
        return CofiniteNat(tuple(sorted(excluded)))

    def quasi_elasticity(self) -> Fraction:
        """max/min of the Frobenius-set weights."""
        if not self.gaps:
            raise EmptyGapSet("quasi-elasticity undefined for the gap-free semigroup")
        ws = [weight(f) for f in self.frobenius_set()]
        return Fraction(max(ws), min(ws))

    def ray_restriction(self, i: int) -> NumericalSemigroup:
        """Multiples k of ray i with k * r_i missing from the semigroup, as a
        numerical semigroup gap set."""
        rays = self.cone.rays
        if not 0 <= i < len(rays):
            raise InvalidRay(f"ray index {i} out of range for {len(rays)} rays")
        d = self.cone.det
        ks = []
        for h in self.gaps:
            sc = self.cone.scaled_coords(h)
            if all(sc[j] == 0 for j in range(len(rays)) if j != i):
                ks.append(sc[i] // d)
        return NumericalSemigroup.from_gaps(ks)

    # -- serialization ----------------------------------------------------------------

    def to_obj(self) -> dict:
        return {"cone": self.cone.to_obj(), "gaps": [list(g) for g in self.gaps]}

    @staticmethod
    def from_obj(obj) -> "CSemigroup":
        if "cone" not in obj or "gaps" not in obj:
            raise InvalidInput("semigroup object needs 'cone' and 'gaps' fields")
        cone = Cone.from_obj(obj["cone"])
        gaps = [tuple(int(c) for c in g) for g in obj["gaps"]]
        return make_csemigroup(cone, gaps)

    def sort_key(self):
        return tuple(canon_key(g) for g in self.gaps)


def make_csemigroup(cone: Cone, gaps) -> CSemigroup:
    """Validate a gap set and build the semigroup.

    Checks: every gap is a nonzero lattice point of the cone, and for every
    gap h each decomposition h = a + b into nonzero cone points has a or b
    among the gaps (the complement is closed under addition). The witness in
    a NotClosed error is the canonically first offending decomposition.
    """
    seen = set()
    normalized = []
    for g in gaps:
        g = tuple(int(c) for c in g)
        cone._check_dim(g)
        if is_zero(g):
            raise ZeroGap(f"{g} cannot be a gap")
        if not cone.contains(g):
            raise GapOutsideCone(f"{g} is not in the cone", point=list(g))
        if g not in seen:
            seen.add(g)
            normalized.append(g)
    normalized.sort(key=canon_key)
    gap_set = frozenset(normalized)
    for h in normalized:
        for a in lower_set(cone, h):
            if is_zero(a) or a == h:
                continue
            b = sub(h, a)
            if a not in gap_set and b not in gap_set:
                raise NotClosed(h, a, b)
    return CSemigroup(cone=cone, gaps=tuple(normalized))


def msg_weight_bound(s: CSemigroup) -> int:
    """Weight cap of the certified search region for minimal generators."""
    return s._generator_region[1]
