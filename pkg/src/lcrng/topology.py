"""The expanded Zariski topology on the Hu-Liu spectrum, its even/odd
subspaces, the odd quotient, and the two comparison homeomorphisms."""

from __future__ import annotations

from functools import lru_cache

from dataclasses import dataclass

from .commutative import classical_zariski, halo_ring, quotient_ring_by_halo
from .core import LcrTable
from .errors import InvariantViolation
from .ideals import IdealSet, Spectrum, enumerate_ideals, spectrum
from .spaces import (FiniteTopology, PointMap, homeomorphism_failure,
                     make_topology, quotient_topology, subspace)


@dataclass(frozen=True)
class OddQuotient:
    """Odd primes grouped by their halo intersection, with the final topology."""

    classes: tuple          # tuple of tuples of prime labels (member tuples)
    topology: FiniteTopology


def vanishing(rng: LcrTable, I: IdealSet, spec: Spectrum = None) -> list:
    """Primes containing I, canonically ordered."""
    spec = spectrum(rng) if spec is None else spec
    iset = set(I.members)
    return [p for p in spec.all_primes if iset <= set(p.members)]


@lru_cache(maxsize=None)
def zariski(rng: LcrTable, spec: Spectrum = None) -> FiniteTopology:
    """Points are the Hu-Liu primes (labelled by member tuples); closed sets
    are the vanishing sets of all ideals, deduplicated."""
    spec = spectrum(rng) if spec is None else spec
    primes = spec.all_primes
    labels = [p.members for p in primes]
    closed = set()
    for I in enumerate_ideals(rng):
        iset = set(I.members)
        closed.add(frozenset(i for i, p in enumerate(primes)
                             if iset <= set(p.members)))
    return make_topology(labels, closed)


def even_odd_subspaces(rng: LcrTable, spec: Spectrum = None) -> tuple:
    """(even subspace, odd subspace); asserts closedness/openness."""
    spec = spectrum(rng) if spec is None else spec
    top = zariski(rng, spec)
    hset = set(rng.halo)
    even_idx = [i for i, p in enumerate(spec.all_primes)
                if hset <= set(p.members)]
    odd_idx = [i for i in range(len(spec.all_primes)) if i not in even_idx]
    if not top.is_closed(even_idx):
        raise InvariantViolation("even spectrum is not closed",
                                 {"points": top.label_set(even_idx)})
    if frozenset(odd_idx) not in top.open_sets:
        raise InvariantViolation("odd spectrum is not open",
                                 {"points": top.label_set(odd_idx)})
    return subspace(top, even_idx), subspace(top, odd_idx)


def odd_quotient(rng: LcrTable, spec: Spectrum = None) -> OddQuotient:
    """Quotient of the odd subspace by equal halo intersection."""
    spec = spectrum(rng) if spec is None else spec
    _even, odd_top = even_odd_subspaces(rng, spec)
    hset = set(rng.halo)
    keys = {}
    for i, label in enumerate(odd_top.points):
        key = tuple(sorted(set(label) & hset))
        keys.setdefault(key, []).append(i)
    ordered = sorted(keys.items())
    classes = [frozenset(v) for _k, v in ordered]
    labels = [tuple(odd_top.points[i] for i in sorted(v)) for _k, v in ordered]
    top = quotient_topology(odd_top, classes, labels)
    return OddQuotient(classes=tuple(labels), topology=top)


@lru_cache(maxsize=None)
def phi0(rng: LcrTable, spec: Spectrum = None) -> PointMap:
    """spec(R/halo) -> even spectrum, prime P/halo |-> P; verified
    bicontinuous bijection, else InvariantViolation with a certificate."""
    spec = spectrum(rng) if spec is None else spec
    ring, coset_of = quotient_ring_by_halo(rng)
    domain = classical_zariski(ring)
    even_top, _odd = even_odd_subspaces(rng, spec)
    even_index = {label: i for i, label in enumerate(even_top.points)}
    mapping = []
    for prime_label in domain.points:
        pset = set(prime_label)
        preimage = tuple(sorted(x for x in range(rng.order) if coset_of[x] in pset))
        if preimage not in even_index:
            raise InvariantViolation(
                "pulled-back classical prime is not an even Hu-Liu prime",
                {"classical_prime": list(prime_label), "preimage": list(preimage)})
        mapping.append(even_index[preimage])
    pm = PointMap(domain=domain, codomain=even_top, mapping=tuple(mapping))
    bad = homeomorphism_failure(pm)
    if bad is not None:
        raise InvariantViolation("phi0 is not a homeomorphism", bad)
    return pm


@lru_cache(maxsize=None)
def phi1(rng: LcrTable, spec: Spectrum = None) -> PointMap:
    """Odd quotient -> image subspace of the classical halo spectrum,
    [P] |-> P n halo; verified homeomorphism onto its image."""
    spec = spectrum(rng) if spec is None else spec
    oq = odd_quotient(rng, spec)
    hring, elems = halo_ring(rng)
    pos = {e: i for i, e in enumerate(elems)}
    halo_top = classical_zariski(hring)
    halo_index = {label: i for i, label in enumerate(halo_top.points)}
    hset = set(rng.halo)
    image_points = []
    for cls in oq.classes:
        key = tuple(sorted(pos[x] for x in set(cls[0]) & hset))
        if key not in halo_index:
            raise InvariantViolation(
                "halo intersection is not a classical prime of the halo ring",
                {"class": [list(p) for p in cls], "intersection": list(key)})
        image_points.append(halo_index[key])
    codomain = subspace(halo_top, sorted(set(image_points)))
    cod_index = {label: i for i, label in enumerate(codomain.points)}
    mapping = tuple(cod_index[halo_top.points[i]] for i in image_points)
    pm = PointMap(domain=oq.topology, codomain=codomain, mapping=mapping)
    bad = homeomorphism_failure(pm)
    if bad is not None:
        raise InvariantViolation("phi1 is not a homeomorphism", bad)
    return pm
