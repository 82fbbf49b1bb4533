"""Ideals of left commutative rngs, Hu-Liu primality, radicals, spectrum."""

from __future__ import annotations

from functools import lru_cache

from dataclasses import dataclass
from typing import Iterable, Optional

from .carrier import all_subgroups
from .core import LcrTable, Verdict, is_nilpotent, local_power, power
from .errors import InvariantViolation


@dataclass(frozen=True)
class IdealSet:
    """An ideal with its parity split against the canonical left identity."""

    rng: LcrTable
    members: tuple
    even_part: tuple
    odd_part: tuple

    @classmethod
    def create(cls, rng: LcrTable, members: Iterable[int]) -> "IdealSet":
        members = tuple(sorted(set(members)))
        if not is_ideal(rng, members):
            raise ValueError(f"{members} is not an ideal")
        l = rng.left_identity
        even_all = {rng.mul[x][l] for x in range(rng.order)}
        even = tuple(sorted(x for x in members if x in even_all))
        odd = tuple(sorted(x for x in members if x in set(rng.halo)))
        if len(even) * len(odd) != len(members):
            raise InvariantViolation("ideal does not split as I0 (+) I1",
                                     {"members": members, "even": even, "odd": odd})
        return cls(rng=rng, members=members, even_part=even, odd_part=odd)

    @property
    def is_proper(self) -> bool:
        return len(self.members) != self.rng.order

    def contains(self, x: int) -> bool:
        return x in set(self.members)

    def labels(self) -> list:
        return [self.rng.label(x) for x in self.members]


def is_ideal(rng: LcrTable, S: Iterable[int]) -> bool:
    """Additive subgroup, two-sided dot absorption, and a sharp-ideal halo part."""
    S = set(S)
    c = rng.carrier
    if not S <= set(range(rng.order)) or c.zero not in S:
        return False
    for s in S:
        if c.neg[s] not in S:
            return False
        for t in S:
            if c.add[s][t] not in S:
                return False
    for r in range(rng.order):
        for s in S:
            if rng.mul[r][s] not in S or rng.mul[s][r] not in S:
                return False
    hpart = S & set(rng.halo)
    for a in rng.halo:
        for s in hpart:
            if rng.sharp(a, s) not in S:
                return False
    return True


def ideal_generated(rng: LcrTable, gens: Iterable[int]) -> IdealSet:
    """Least ideal containing gens: fixpoint of additive and absorption closure."""
    c = rng.carrier
    current = set(gens) | {c.zero}
    hset = set(rng.halo)
    while True:
        nxt = set(current)
        for s in current:
            nxt.add(c.neg[s])
            for t in current:
                nxt.add(c.add[s][t])
        for r in range(rng.order):
            for s in current:
                nxt.add(rng.mul[r][s])
                nxt.add(rng.mul[s][r])
        for a in rng.halo:
            for s in current & hset:
                nxt.add(rng.sharp(a, s))
        if nxt == current:
            return IdealSet.create(rng, current)
        current = nxt


@lru_cache(maxsize=None)
def enumerate_ideals(rng: LcrTable) -> list:
    """All ideals, canonically ordered by (size, members)."""
    out = []
    for sub in all_subgroups(rng.carrier):
        if is_ideal(rng, sub):
            out.append(IdealSet.create(rng, sub))
    return out


def nilradical(rng: LcrTable) -> IdealSet:
    """Set of nilpotent elements, cross-checked against the even/odd
    direct-sum formula; disagreement raises with a certificate."""
    c = rng.carrier
    elementwise = {x for x in range(rng.order) if is_nilpotent(rng, x)}
    l, z = rng.left_identity, rng.zero
    even = sorted({rng.mul[x][l] for x in range(rng.order)})
    nil0 = {a for a in even
            if any(power(rng, a, m) == z for m in range(1, rng.order + 1))}
    nil1 = {a for a in rng.halo
            if any(local_power(rng, a, n) == z for n in range(1, rng.order + 1))}
    assembled = {c.add[a][b] for a in nil0 for b in nil1}
    if assembled != elementwise:
        raise InvariantViolation(
            "nilpotent set disagrees with the direct-sum assembly",
            {"elementwise": sorted(elementwise), "assembled": sorted(assembled)})
    return IdealSet.create(rng, elementwise)


def radical(rng: LcrTable, I: IdealSet) -> IdealSet:
    """Elements whose even component has a dot-power in I0 and odd component
    a sharp-power in I1, exponents bounded by the carrier order."""
    l = rng.left_identity
    i0, i1 = set(I.even_part), set(I.odd_part)
    members = []
    for x in range(rng.order):
        x0 = rng.mul[x][l]
        x1 = rng.carrier.sub(x, x0)
        ok0 = any(power(rng, x0, m) in i0 for m in range(1, rng.order + 1))
        ok1 = any(local_power(rng, x1, n) in i1 for n in range(1, rng.order + 1))
        if ok0 and ok1:
            members.append(x)
    try:
        return IdealSet.create(rng, members)
    except ValueError as exc:
        raise InvariantViolation("radical is not an ideal",
                                 {"members": members}) from exc


@dataclass(frozen=True)
class PrimeCriteriaReport:
    """Every applicable Hu-Liu primality characterization, with witnesses.

    quotient_prime applies only when P contains the halo; halo_domain only
    when it does not.  The headline verdict is the three-part definition.
    """

    ideal: IdealSet
    even_product: Verdict
    mixed_product: Verdict
    halo_part_condition: Verdict
    definition: Verdict
    component_products: Verdict      # the even/odd product criteria pair
    quotient_prime: Optional[Verdict]
    p0_prime: Verdict
    faithful_module: Verdict
    halo_domain: Optional[Verdict]

    @property
    def is_prime(self) -> bool:
        return self.definition.ok

    @property
    def parity(self) -> str:
        return "even" if set(self.ideal.rng.halo) <= set(self.ideal.members) else "odd"

    def agreement_failures(self) -> list:
        """Pairs of characterizations the theory says must agree but do not."""
        out = []

        def cmp(name, a, b):
            if a.ok != b.ok:
                out.append({"criteria": name,
                            "verdicts": (a.ok, b.ok),
                            "witnesses": (a.witness, b.witness),
                            "ideal": list(self.ideal.members)})

        cmp("definition-vs-component-products", self.definition,
            self.component_products)
        cmp("even-product-vs-p0-prime", self.even_product, self.p0_prime)
        cmp("mixed-product-vs-faithful-module", self.mixed_product,
            self.faithful_module)
        if self.quotient_prime is not None:
            cmp("definition-vs-quotient-prime", self.definition,
                self.quotient_prime)
        if self.halo_domain is not None:
            cmp("halo-part-prime-vs-quotient-halo-domain",
                self.halo_part_condition, self.halo_domain)
        return out


def prime_criteria_report(rng: LcrTable, P: IdealSet) -> PrimeCriteriaReport:
    from .commutative import classical_is_prime, even_ring, quotient_ring_by_halo
    from .core import quotient

    if not P.is_proper:
        raise ValueError("primality is defined for proper ideals only")
    c, n = rng.carrier, rng.order
    pset = set(P.members)
    hset = set(rng.halo)
    p_plus_h = {c.add[p][h] for p in pset for h in hset}
    l = rng.left_identity
    r0 = sorted({rng.mul[x][l] for x in range(n)})
    p0, p1 = set(P.even_part), set(P.odd_part)

    def even_product() -> Verdict:
        for x in range(n):
            for y in range(n):
                if rng.mul[x][y] in p_plus_h and x not in p_plus_h and y not in p_plus_h:
                    return Verdict("even-product-criterion", False, (x, y))
        return Verdict("even-product-criterion", True)

    def mixed_product() -> Verdict:
        for x in range(n):
            for y in range(n):
                if rng.mul[x][y] in pset and x not in p_plus_h and y not in pset:
                    return Verdict("mixed-product-criterion", False, (x, y))
        return Verdict("mixed-product-criterion", True)

    def halo_part() -> Verdict:
        if hset <= pset:
            return Verdict("halo-part", True, detail="ideal contains the halo")
        if p1 == hset:
            return Verdict("halo-part", False, None,
                           "halo part is the whole halo but the halo is not contained")
        for a in rng.halo:
            for b in rng.halo:
                if rng.sharp(a, b) in p1 and a not in p1 and b not in p1:
                    return Verdict("halo-part", False, (a, b),
                                   "halo part is not a prime sharp-ideal")
        return Verdict("halo-part", True)

    def component_products() -> Verdict:
        parts = {0: (r0, p0), 1: (list(rng.halo), p1)}
        for eps in (0, 1):
            relems, ppart = parts[eps]
            for x0 in r0:
                for y in relems:
                    if rng.mul[x0][y] in pset and x0 not in p0 and y not in ppart:
                        return Verdict("component-products", False, (x0, y),
                                       f"even-by-{'even' if eps == 0 else 'odd'} product")
        for a in rng.halo:
            for b in rng.halo:
                if rng.sharp(a, b) in p1 and a not in p1 and b not in p1:
                    return Verdict("component-products", False, (a, b),
                                   "sharp product of odd components")
        return Verdict("component-products", True)

    def quotient_prime() -> Optional[Verdict]:
        if not hset <= pset:
            return None
        ring, coset_of = quotient_ring_by_halo(rng)
        image = frozenset(coset_of[p] for p in pset)
        ok = classical_is_prime(ring, image)
        return Verdict("quotient-prime", ok,
                       None if ok else tuple(sorted(image)),
                       "P/halo prime in R/halo")

    def p0_prime() -> Verdict:
        ring, elems = even_ring(rng)
        pos = {e: i for i, e in enumerate(elems)}
        ok = classical_is_prime(ring, frozenset(pos[p] for p in p0))
        return Verdict("p0-prime", ok, None if ok else tuple(sorted(p0)),
                       "even part prime in the even-part ring")

    def faithful_module() -> Verdict:
        # faithful in the strong sense: no zero divisors between scalars in
        # R0/P0 and elements of R/P, i.e. x0 y in P forces x0 in P0 or y in P
        for x0 in r0:
            if x0 in p0:
                continue
            for y in range(n):
                if y not in pset and rng.mul[x0][y] in pset:
                    return Verdict("faithful-module", False, (x0, y),
                                   "nonzero scalar kills a nonzero element")
        return Verdict("faithful-module", True)

    def halo_domain() -> Optional[Verdict]:
        if hset <= pset:
            return None
        q, _proj = quotient(rng, P)
        qz = q.zero
        if len(q.halo) == 1:
            return Verdict("quotient-halo-domain", False, None,
                           "quotient halo is the zero ring")
        for a in q.halo:
            for b in q.halo:
                if q.sharp(a, b) == qz and a != qz and b != qz:
                    return Verdict("quotient-halo-domain", False, (a, b),
                                   "zero divisors in the quotient halo")
        return Verdict("quotient-halo-domain", True)

    v14, v15, vhp = even_product(), mixed_product(), halo_part()
    definition = Verdict("hu-liu-prime", v14.ok and v15.ok and vhp.ok,
                         next((v.witness for v in (v14, v15, vhp) if not v.ok), None))
    return PrimeCriteriaReport(ideal=P, even_product=v14, mixed_product=v15,
                               halo_part_condition=vhp, definition=definition,
                               component_products=component_products(),
                               quotient_prime=quotient_prime(),
                               p0_prime=p0_prime(),
                               faithful_module=faithful_module(),
                               halo_domain=halo_domain())


@dataclass(frozen=True)
class Spectrum:
    """Hu-Liu primes partitioned by whether they contain the halo."""

    even_primes: tuple
    odd_primes: tuple

    @property
    def all_primes(self) -> tuple:
        return tuple(sorted(self.even_primes + self.odd_primes,
                            key=lambda p: p.members))

    def __len__(self) -> int:
        return len(self.even_primes) + len(self.odd_primes)


@lru_cache(maxsize=None)
def spectrum(rng: LcrTable) -> Spectrum:
    even, odd = [], []
    hset = set(rng.halo)
    for P in enumerate_ideals(rng):
        if not P.is_proper:
            continue
        if prime_criteria_report(rng, P).is_prime:
            (even if hset <= set(P.members) else odd).append(P)
    return Spectrum(even_primes=tuple(even), odd_primes=tuple(odd))


def intersection_of_primes(rng: LcrTable, primes: Iterable[IdealSet]) -> frozenset:
    """Set intersection; the whole rng when the family is empty."""
    primes = list(primes)
    if not primes:
        return frozenset(range(rng.order))
    acc = set(primes[0].members)
    for p in primes[1:]:
        acc &= set(p.members)
    return frozenset(acc)
