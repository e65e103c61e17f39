"""Wilf-type counts and exhaustive genus-indexed enumeration.

The counts c (cone points under some gap), n (members under some gap) and
e (minimal generators) feed the inequality e * n >= p * c, checked here over
every semigroup of bounded genus on a fixed cone.

Enumeration walks the semigroup tree: the root is the gap-free semigroup,
and the children of S remove one minimal generator beyond the canonically
largest gap. Adding the canonically largest gap back is the unique inverse
step, so every gap set of each genus appears exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from multiprocessing import get_context

from .errors import CapacityExceeded, InvalidInput
from .geom import Cone, canon_key, lower_set, point_budget, sub
from .semigroup import CSemigroup, make_csemigroup


@dataclass(frozen=True)
class WilfReport:
    """One evaluation of e * n >= p * c."""

    e: int
    n: int
    c: int
    p: int
    margin: int
    holds: bool

    def to_obj(self) -> dict:
        return {
            "e": self.e,
            "n": self.n,
            "c": self.c,
            "p": self.p,
            "margin": self.margin,
            "holds": self.holds,
        }


def wilf_report(s: CSemigroup, order: str = "cone") -> WilfReport:
    """Count the region under the gaps and test the inequality.

    With the default cone order, c counts cone points below some gap
    (reflexively, so 0 and the gaps themselves count) and n the members
    among them. The induced-order variant is exposed for comparison; under
    it no member is ever below a gap, so n = 0 and the inequality fails on
    any semigroup with gaps.
    """
    cone = s.cone
    region: set = set()
    for b in s.gaps:
        region.update(lower_set(cone, b))
    if order == "cone":
        inside = region
    elif order == "induced":
        inside = {
            a for a in region if any(s.member(sub(b, a)) for b in s.gaps)
        }
    else:
        raise InvalidInput(f"order must be 'cone' or 'induced', got {order!r}")
    c = len(inside)
    n = sum(1 for a in inside if a not in s.gap_set)
    e = len(s.minimal_generators)
    margin = e * n - cone.p * c
    return WilfReport(e=e, n=n, c=c, p=cone.p, margin=margin, holds=margin >= 0)


@dataclass(frozen=True)
class GenusLevel:
    """All semigroups of one genus over a cone, canonically sorted."""

    genus: int
    semigroups: tuple[CSemigroup, ...]

    @property
    def count(self) -> int:
        return len(self.semigroups)


def _children(s: CSemigroup) -> list[CSemigroup]:
    """Remove each minimal generator beyond the canonically largest gap.

    Removing a minimal generator keeps the complement closed (it has no
    two-member decomposition), and the restriction to generators past the
    largest gap makes the parent map (put the largest gap back) unique.
    """
    biggest = canon_key(s.gaps[-1]) if s.gaps else None
    out = []
    for m in s.minimal_generators:
        if biggest is None or canon_key(m) > biggest:
            gaps = tuple(sorted(s.gaps + (m,), key=canon_key))
            out.append(CSemigroup(s.cone, gaps))
    return out


def enumerate_genus(cone: Cone, g_max: int, budget: int | None = None) -> list[GenusLevel]:
    """GenusLevel for each genus up to g_max, exhaustive and duplicate-free."""
    if g_max < 0:
        raise InvalidInput("g_max must be nonnegative")
    cap = point_budget() if budget is None else budget
    root = make_csemigroup(cone, [])
    levels = [GenusLevel(0, (root,))]
    frontier = [root]
    total = 1
    for g in range(1, g_max + 1):
        grown: list[CSemigroup] = []
        for s in frontier:
            grown.extend(_children(s))
        grown.sort(key=CSemigroup.sort_key)
        total += len(grown)
        if total > cap:
            raise CapacityExceeded(
                f"more than {cap} semigroups up to genus {g_max}"
            )
        frontier = grown
        levels.append(GenusLevel(g, tuple(grown)))
    return levels


@dataclass(frozen=True)
class WilfSummary:
    """Outcome of a sweep: per-genus counts, worst margin, violations."""

    cone: Cone
    max_genus: int
    order: str
    counts: tuple[int, ...]
    min_margin: int
    counterexamples: tuple[tuple[CSemigroup, WilfReport], ...]

    def to_obj(self) -> dict:
        return {
            "cone": self.cone.to_obj(),
            "max_genus": self.max_genus,
            "order": self.order,
            "counts": list(self.counts),
            "min_margin": self.min_margin,
            "counterexamples": [
                {"gaps": [list(g) for g in s.gaps], "report": rep.to_obj()}
                for s, rep in self.counterexamples
            ],
        }


def _sweep_node(args):
    s, order, expand_children = args
    report = wilf_report(s, order)
    kids = _children(s) if expand_children else []
    return report, kids


def wilf_sweep(
    cone: Cone,
    g_max: int,
    order: str = "cone",
    jobs: int = 1,
    budget: int | None = None,
) -> WilfSummary:
    """Run wilf_report over every semigroup of genus <= g_max.

    Levels are barriers; nodes within a level may be evaluated in parallel
    (jobs > 1) and the result is identical to the sequential run because
    per-level output order is canonical and the aggregates are order-free.
    """
    if g_max < 0:
        raise InvalidInput("g_max must be nonnegative")
    if jobs < 1:
        raise InvalidInput("jobs must be at least 1")
    cap = point_budget() if budget is None else budget
    frontier = [make_csemigroup(cone, [])]
    counts = []
    min_margin: int | None = None
    counterexamples = []
    total = 0
    for g in range(g_max + 1):
        work = [(s, order, g < g_max) for s in frontier]
        if jobs > 1 and len(work) > 1:
            with get_context().Pool(jobs) as pool:
                results = pool.map(_sweep_node, work, chunksize=max(1, len(work) // (4 * jobs)))
        else:
            results = [_sweep_node(w) for w in work]
        counts.append(len(frontier))
        total += len(frontier)
        if total > cap:
            raise CapacityExceeded(f"more than {cap} semigroups in the sweep")
        grown: list[CSemigroup] = []
        for s, (report, kids) in zip(frontier, results):
            if min_margin is None or report.margin < min_margin:
                min_margin = report.margin
            if not report.holds:
                counterexamples.append((s, report))
            grown.extend(kids)
        grown.sort(key=CSemigroup.sort_key)
        frontier = grown
    return WilfSummary(
        cone=cone,
        max_genus=g_max,
        order=order,
        counts=tuple(counts),
        min_margin=min_margin if min_margin is not None else 0,
        counterexamples=tuple(counterexamples),
    )
