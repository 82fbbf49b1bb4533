"""Classical finite commutative rings with identity, as tables.

This is the independent commutative-ring route used by the prime-criteria
comparisons, the homeomorphism checks and the classical-degeneration
oracle; it never calls into the Hu-Liu code paths.
"""

from __future__ import annotations

from functools import lru_cache

from dataclasses import dataclass
from typing import Iterable, Optional

from .carrier import FiniteCarrier, all_subgroups, build_carrier, check_carrier
from .errors import StructureError
from .spaces import FiniteTopology, make_topology


@dataclass(frozen=True)
class CommutativeRingTable:
    carrier: FiniteCarrier
    mul: tuple
    one: int

    @property
    def order(self) -> int:
        return self.carrier.order

    def m(self, x: int, y: int) -> int:
        return self.mul[x][y]

    def label(self, i: int) -> str:
        return self.carrier.label(i)


def check_ring(ring: CommutativeRingTable) -> None:
    """Unital commutative ring axioms by full table scan; raises on failure."""
    check_carrier(ring.carrier)
    c, n = ring.carrier, ring.order
    if len(ring.mul) != n or any(len(row) != n for row in ring.mul):
        raise StructureError("ring mul table has wrong shape")
    if not (0 <= ring.one < n):
        raise StructureError("ring identity index out of range")
    mul = ring.mul
    for x in range(n):
        if mul[ring.one][x] != x:
            raise StructureError(f"identity fails at element {x}")
        for y in range(n):
            if mul[x][y] != mul[y][x]:
                raise StructureError(f"multiplication not commutative at ({x},{y})")
            for z in range(n):
                if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                    raise StructureError(f"multiplication not associative at ({x},{y},{z})")
                if mul[x][c.add[y][z]] != c.add[mul[x][y]][mul[x][z]]:
                    raise StructureError(f"distributivity fails at ({x},{y},{z})")


def ring_zmod_product(moduli: Iterable[int]) -> CommutativeRingTable:
    """Z/n1 x ... x Z/nk with componentwise multiplication."""
    moduli = list(moduli)
    carrier = build_carrier(moduli)
    coords, index = carrier.coords, {c: i for i, c in enumerate(carrier.coords)}
    mul = tuple(tuple(index[tuple((a * b) % f for a, b, f
                                  in zip(coords[i], coords[j], moduli))]
                      for j in range(carrier.order))
                for i in range(carrier.order))
    one = index[tuple(1 % f for f in moduli)]
    return CommutativeRingTable(carrier=carrier, mul=mul, one=one)


def ring_zmod(n: int) -> CommutativeRingTable:
    return ring_zmod_product([n])


def zero_ring() -> CommutativeRingTable:
    return ring_zmod(1)


@dataclass(frozen=True)
class RingHom:
    """Unital commutative ring homomorphism, per-element image table."""

    domain: CommutativeRingTable
    codomain: CommutativeRingTable
    image: tuple


def verify_ring_hom(h: RingHom) -> Optional[dict]:
    """None when h is a unital ring homomorphism, else a witness dict."""
    dom, cod = h.domain, h.codomain
    if len(h.image) != dom.order:
        return {"reason": "image table has wrong length"}
    for v in h.image:
        if not (0 <= v < cod.order):
            return {"reason": "image index out of range", "value": v}
    for x in range(dom.order):
        for y in range(dom.order):
            if h.image[dom.carrier.add[x][y]] != cod.carrier.add[h.image[x]][h.image[y]]:
                return {"reason": "not additive", "witness": (x, y)}
            if h.image[dom.mul[x][y]] != cod.mul[h.image[x]][h.image[y]]:
                return {"reason": "not multiplicative", "witness": (x, y)}
    if h.image[dom.one] != cod.one:
        return {"reason": "not unital"}
    return None


def reduction_hom(dom: CommutativeRingTable, cod: CommutativeRingTable) -> RingHom:
    """Componentwise residue reduction between Z/n products; verified."""
    if dom.carrier.coords is None or cod.carrier.coords is None:
        raise StructureError("reduction requires coordinate charts")
    width = len(cod.carrier.coords[0])
    if len(dom.carrier.coords[0]) != width:
        raise StructureError("reduction requires matching factor counts")
    moduli = [max(c[i] for c in cod.carrier.coords) + 1 for i in range(width)]
    image = tuple(cod.carrier.index_of_coords(tuple(a % f for a, f
                                                    in zip(dom.carrier.coords[i], moduli)))
                  for i in range(dom.order))
    h = RingHom(domain=dom, codomain=cod, image=image)
    bad = verify_ring_hom(h)
    if bad is not None:
        raise StructureError(f"reduction is not a ring homomorphism: {bad}")
    return h


def classical_ideals(ring: CommutativeRingTable) -> list:
    """All ideals, as sorted frozensets of element indices."""
    out = []
    for sub in all_subgroups(ring.carrier):
        if all(ring.mul[r][s] in sub for r in range(ring.order) for s in sub):
            out.append(sub)
    return out


def classical_is_prime(ring: CommutativeRingTable, P: Iterable[int]) -> bool:
    P = frozenset(P)
    if len(P) == ring.order:
        return False
    for x in range(ring.order):
        for y in range(ring.order):
            if ring.mul[x][y] in P and x not in P and y not in P:
                return False
    return True


def classical_spectrum(ring: CommutativeRingTable) -> list:
    return [P for P in classical_ideals(ring) if classical_is_prime(ring, P)]


def classical_nilradical(ring: CommutativeRingTable) -> frozenset:
    z = ring.carrier.zero
    nil = set()
    for a in range(ring.order):
        acc = a
        for _ in range(ring.order):
            if acc == z:
                nil.add(a)
                break
            acc = ring.mul[acc][a]
    return frozenset(nil)


def classical_radical(ring: CommutativeRingTable, I: Iterable[int]) -> frozenset:
    I = frozenset(I)
    rad = set()
    for a in range(ring.order):
        acc = a
        for _ in range(ring.order):
            if acc in I:
                rad.add(a)
                break
            acc = ring.mul[acc][a]
    return frozenset(rad)


def classical_zariski(ring: CommutativeRingTable) -> FiniteTopology:
    """Zariski topology on the classical prime spectrum.

    Points are labelled by their sorted member tuples.
    """
    primes = sorted(classical_spectrum(ring), key=lambda p: tuple(sorted(p)))
    labels = [tuple(sorted(p)) for p in primes]
    closed = set()
    for I in classical_ideals(ring):
        closed.add(frozenset(i for i, p in enumerate(primes) if I <= p))
    return make_topology(labels, closed)


def subring(parent_carrier: FiniteCarrier, elements, mul_fn, one: int):
    """Reindexed ring on a subset of a carrier.

    mul_fn gives the product in parent indices; returns (ring, elems)
    where elems[i] is the parent index of ring element i.
    """
    elems = sorted(elements)
    pos = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    add = tuple(tuple(pos[parent_carrier.add[elems[i]][elems[j]]] for j in range(n))
                for i in range(n))
    neg = tuple(pos[parent_carrier.neg[e]] for e in elems)
    coords = None
    if parent_carrier.coords is not None:
        coords = tuple(parent_carrier.coords[e] for e in elems)
    carrier = FiniteCarrier(order=n, add=add, neg=neg, zero=pos[parent_carrier.zero],
                            coords=coords)
    mul = tuple(tuple(pos[mul_fn(elems[i], elems[j])] for j in range(n))
                for i in range(n))
    ring = CommutativeRingTable(carrier=carrier, mul=mul, one=pos[one])
    check_ring(ring)
    return ring, elems


def halo_ring(rng):
    """(halo, +, sharp) as a standalone commutative ring; (ring, elems)."""
    if rng.local_identity is None:
        raise StructureError("rng has no local identity")
    return subring(rng.carrier, rng.halo, rng.sharp, rng.local_identity)


def even_ring(rng, bar_unit: Optional[int] = None):
    """(R * b, +, dot) with identity b; (ring, elems)."""
    b = rng.left_identity if bar_unit is None else bar_unit
    elements = {rng.mul[x][b] for x in range(rng.order)}
    return subring(rng.carrier, elements, rng.m, b)


@lru_cache(maxsize=None)
def quotient_ring_by_halo(rng):
    """R / halo as a commutative ring; returns (ring, coset_of) with
    coset_of mapping each R element to its ring element index."""
    from .core import quotient
    from .ideals import IdealSet

    q, proj = quotient(rng, IdealSet.create(rng, rng.halo))
    ring = CommutativeRingTable(carrier=q.carrier, mul=q.mul, one=q.left_identity)
    check_ring(ring)
    return ring, proj.image
