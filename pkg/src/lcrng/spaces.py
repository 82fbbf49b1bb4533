"""Finite topological spaces given by their closed-set families."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional


@dataclass(frozen=True)
class FiniteTopology:
    """Point labels plus the family of closed sets (as index sets)."""

    points: tuple
    closed_sets: frozenset

    @property
    def open_sets(self) -> frozenset:
        full = frozenset(range(len(self.points)))
        return frozenset(full - c for c in self.closed_sets)

    def is_closed(self, s: Iterable[int]) -> bool:
        return frozenset(s) in self.closed_sets

    def label_set(self, s: Iterable[int]) -> list:
        return sorted(self.points[i] for i in s)


def make_topology(points, closed_sets) -> FiniteTopology:
    return FiniteTopology(points=tuple(points),
                          closed_sets=frozenset(frozenset(c) for c in closed_sets))


def check_closed_axioms(t: FiniteTopology) -> Optional[dict]:
    """Closed-set axioms; returns a counterexample dict or None.

    The family is finite, so closure under arbitrary intersections reduces
    to pairwise intersections together with the full set.
    """
    full = frozenset(range(len(t.points)))
    if frozenset() not in t.closed_sets:
        return {"axiom": "empty-set-closed"}
    if full not in t.closed_sets:
        return {"axiom": "full-set-closed"}
    fam = list(t.closed_sets)
    for a in fam:
        for b in fam:
            if a | b not in t.closed_sets:
                return {"axiom": "union", "sets": (sorted(a), sorted(b))}
            if a & b not in t.closed_sets:
                return {"axiom": "intersection", "sets": (sorted(a), sorted(b))}
    return None


def subspace(t: FiniteTopology, point_indices) -> FiniteTopology:
    """Induced topology; point labels are preserved."""
    sel = sorted(set(point_indices))
    reindex = {p: i for i, p in enumerate(sel)}
    closed = {frozenset(reindex[p] for p in c if p in reindex)
              for c in t.closed_sets}
    return FiniteTopology(points=tuple(t.points[p] for p in sel),
                          closed_sets=frozenset(closed))


def quotient_topology(t: FiniteTopology, classes, labels) -> FiniteTopology:
    """Final topology for the partition `classes` (index sets over t.points)."""
    classes = [frozenset(c) for c in classes]
    closed = set()
    import itertools
    for k in range(len(classes) + 1):
        for sel in itertools.combinations(range(len(classes)), k):
            preimage = frozenset().union(*(classes[i] for i in sel)) if sel else frozenset()
            if t.is_closed(preimage):
                closed.add(frozenset(sel))
    return FiniteTopology(points=tuple(labels), closed_sets=frozenset(closed))


@dataclass(frozen=True)
class PointMap:
    """Total map between finite spaces, stored point-index by point-index."""

    domain: FiniteTopology
    codomain: FiniteTopology
    mapping: tuple

    def image_of(self, i: int) -> int:
        return self.mapping[i]


def is_continuous(pm: PointMap) -> bool:
    """Preimage of every closed set of the codomain is closed."""
    for c in pm.codomain.closed_sets:
        pre = frozenset(i for i, img in enumerate(pm.mapping) if img in c)
        if not pm.domain.is_closed(pre):
            return False
    return True


def homeomorphism_failure(pm: PointMap) -> Optional[dict]:
    """None if pm is a bicontinuous bijection, else a counterexample dict."""
    n, m = len(pm.domain.points), len(pm.codomain.points)
    if n != m or len(set(pm.mapping)) != n:
        return {"reason": "not-bijective", "mapping": list(pm.mapping)}
    for c in pm.codomain.closed_sets:
        pre = frozenset(i for i, img in enumerate(pm.mapping) if img in c)
        if not pm.domain.is_closed(pre):
            return {"reason": "not-continuous",
                    "closed_set": pm.codomain.label_set(c)}
    for c in pm.domain.closed_sets:
        img = frozenset(pm.mapping[i] for i in c)
        if not pm.codomain.is_closed(img):
            return {"reason": "inverse-not-continuous",
                    "closed_set": pm.domain.label_set(c)}
    return None
