"""Left commutative rngs as exact tables: axiom verification, decomposition,
powers, nilpotency, and quotients.

The multiplication table covers the whole carrier; the local product is
stored as a full table whose entries are -1 outside halo x halo.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .carrier import FiniteCarrier, check_carrier
from .errors import InvariantViolation, StructureError

UNDEFINED = -1


@dataclass(frozen=True)
class Verdict:
    """One axiom verdict; witness is a tuple of element indices on failure."""

    law: str
    ok: bool
    witness: Optional[tuple] = None
    detail: str = ""


@dataclass(frozen=True)
class AxiomReport:
    product_rng: Verdict       # associativity, distributivity, left commutativity
    left_identity: Verdict     # left identity and bar-unit/halo bookkeeping
    halo_ring: Verdict         # (halo, +, sharp) commutative ring with identity
    triassociative: Verdict    # (x a) # b == x (a # b)

    @property
    def all_passed(self) -> bool:
        return all(v.ok for v in self.verdicts())

    def verdicts(self) -> tuple:
        return (self.product_rng, self.left_identity, self.halo_ring,
                self.triassociative)

    def first_failure(self) -> Optional[Verdict]:
        for v in self.verdicts():
            if not v.ok:
                return v
        return None


@dataclass(frozen=True)
class LcrTable:
    """A candidate left commutative rng: carrier plus product tables.

    local_identity is None when no element of the halo acts as a
    sharp-identity; verify_lcr then fails the halo-ring verdict.
    """

    carrier: FiniteCarrier
    mul: tuple
    left_identity: int
    halo: tuple
    local_mul: tuple
    local_identity: Optional[int]
    bar_units: tuple

    @property
    def order(self) -> int:
        return self.carrier.order

    @property
    def zero(self) -> int:
        return self.carrier.zero

    def m(self, x: int, y: int) -> int:
        return self.mul[x][y]

    def sharp(self, a: int, b: int) -> int:
        v = self.local_mul[a][b]
        if v == UNDEFINED:
            raise StructureError(f"local product undefined at ({a},{b})")
        return v

    def label(self, i: int) -> str:
        return self.carrier.label(i)


@dataclass(frozen=True)
class Decomposition:
    """R = R0 (+) R1 for one bar-unit, with per-element projections."""

    left_identity_used: int
    even_part: tuple
    odd_part: tuple
    projections: tuple  # projections[x] == (x0, x1)


def find_bar_units(carrier: FiniteCarrier, mul) -> tuple:
    n = carrier.order
    return tuple(b for b in range(n) if all(mul[b][x] == x for x in range(n)))


def local_table(order: int, halo, pairs) -> tuple:
    """Full-size table for the local product from a {(a,b): v} mapping."""
    hset = set(halo)
    table = [[UNDEFINED] * order for _ in range(order)]
    for (a, b), v in pairs.items():
        if a not in hset or b not in hset:
            raise StructureError(f"local product keyed outside halo at ({a},{b})")
        table[a][b] = v
    for a in halo:
        for b in halo:
            if table[a][b] == UNDEFINED:
                raise StructureError(f"local product missing at ({a},{b})")
    return tuple(tuple(row) for row in table)


def assemble_lcr(carrier: FiniteCarrier, mul, local_pairs,
                 left_identity: Optional[int] = None) -> LcrTable:
    """Build an LcrTable, deriving the halo, bar-units and local identity.

    The canonical left identity is the smallest-index bar-unit unless one
    is supplied explicitly.  Raises StructureError when the tables are
    dimensionally broken or no bar-unit exists.
    """
    check_carrier(carrier)
    n = carrier.order
    if len(mul) != n or any(len(row) != n for row in mul):
        raise StructureError("mul table has wrong shape")
    for row in mul:
        for v in row:
            if not (0 <= v < n):
                raise StructureError(f"mul entry {v} out of range")
    mul = tuple(tuple(row) for row in mul)
    bar_units = find_bar_units(carrier, mul)
    if left_identity is None:
        if not bar_units:
            raise StructureError("no bar-unit: the tables admit no left identity")
        left_identity = bar_units[0]
    elif not (0 <= left_identity < n):
        raise StructureError("left identity index out of range")
    halo = tuple(sorted(x for x in range(n) if mul[x][left_identity] == carrier.zero))
    lm = local_table(n, halo, local_pairs)
    local_identity = None
    for e in halo:
        if all(lm[e][a] == a for a in halo):
            local_identity = e
            break
    return LcrTable(carrier=carrier, mul=mul, left_identity=left_identity,
                    halo=halo, local_mul=lm, local_identity=local_identity,
                    bar_units=bar_units)


def _check_structure(rng: LcrTable) -> None:
    check_carrier(rng.carrier)
    n = rng.order
    if len(rng.mul) != n or any(len(row) != n for row in rng.mul):
        raise StructureError("mul table has wrong shape")
    for row in rng.mul:
        for v in row:
            if not (0 <= v < n):
                raise StructureError(f"mul entry {v} out of range")
    if not (0 <= rng.left_identity < n):
        raise StructureError("left identity index out of range")
    hset = set(rng.halo)
    if not hset <= set(range(n)):
        raise StructureError("halo contains out-of-range indices")
    if len(rng.local_mul) != n or any(len(row) != n for row in rng.local_mul):
        raise StructureError("local product table has wrong shape")
    for a in range(n):
        for b in range(n):
            v = rng.local_mul[a][b]
            inside = a in hset and b in hset
            if inside and not (0 <= v < n):
                raise StructureError(f"local product entry at ({a},{b}) out of range")
            if not inside and v != UNDEFINED:
                raise StructureError(f"local product defined outside halo at ({a},{b})")
    if rng.local_identity is not None and rng.local_identity not in hset:
        raise StructureError("local identity is not a halo element")


def verify_lcr(rng: LcrTable) -> AxiomReport:
    """Exhaustive check of the four defining axioms.

    Dimensional problems raise StructureError; axiom failures come back as
    verdicts with a minimal (lexicographically first) witness.
    """
    _check_structure(rng)
    c, mul, n = rng.carrier, rng.mul, rng.order

    def product_verdict() -> Verdict:
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                        return Verdict("associativity", False, (x, y, z))
                    if mul[mul[x][y]][z] != mul[mul[y][x]][z]:
                        return Verdict("left-commutativity", False, (x, y, z))
                    if mul[x][c.add[y][z]] != c.add[mul[x][y]][mul[x][z]]:
                        return Verdict("left-distributivity", False, (x, y, z))
                    if mul[c.add[y][z]][x] != c.add[mul[y][x]][mul[z][x]]:
                        return Verdict("right-distributivity", False, (x, y, z))
        return Verdict("product-rng", True)

    def identity_verdict() -> Verdict:
        l = rng.left_identity
        for x in range(n):
            if mul[l][x] != x:
                return Verdict("left-identity", False, (l, x),
                               "designated left identity does not act as one")
        scan = find_bar_units(c, mul)
        if tuple(rng.bar_units) != scan:
            return Verdict("left-identity", False, None,
                           f"stored bar-units {rng.bar_units} != scan {scan}")
        if l not in scan:
            return Verdict("left-identity", False, (l,),
                           "left identity is not a bar-unit")
        expected = tuple(sorted(x for x in range(n) if mul[x][l] == c.zero))
        if tuple(rng.halo) != expected:
            return Verdict("left-identity", False, None,
                           "stored halo does not match {x : x*1l = 0}")
        for b in scan:
            got = tuple(sorted(x for x in range(n) if mul[x][b] == c.zero))
            if got != expected:
                return Verdict("left-identity", False, (b,),
                               "halo depends on the bar-unit choice")
        return Verdict("left-identity", True)

    def halo_ring_verdict() -> Verdict:
        halo = rng.halo
        hset = set(halo)
        if c.zero not in hset:
            return Verdict("halo-ring", False, (c.zero,), "halo misses zero")
        for a in halo:
            if c.neg[a] not in hset:
                return Verdict("halo-ring", False, (a,), "halo not closed under negation")
            for b in halo:
                if c.add[a][b] not in hset:
                    return Verdict("halo-ring", False, (a, b),
                                   "halo not closed under addition")
                v = rng.local_mul[a][b]
                if v not in hset:
                    return Verdict("halo-ring", False, (a, b),
                                   "local product leaves the halo")
                if v != rng.local_mul[b][a]:
                    return Verdict("halo-ring", False, (a, b),
                                   "local product not commutative")
                for d in halo:
                    if rng.local_mul[v][d] != rng.local_mul[a][rng.local_mul[b][d]]:
                        return Verdict("halo-ring", False, (a, b, d),
                                       "local product not associative")
                    if rng.local_mul[a][c.add[b][d]] != \
                            c.add[rng.local_mul[a][b]][rng.local_mul[a][d]]:
                        return Verdict("halo-ring", False, (a, b, d),
                                       "local product not distributive")
        if rng.local_identity is None:
            return Verdict("halo-ring", False, None,
                           "no element acts as a local identity")
        e = rng.local_identity
        for a in halo:
            if rng.local_mul[e][a] != a:
                return Verdict("halo-ring", False, (e, a),
                               "designated local identity does not act as one")
        return Verdict("halo-ring", True)

    def triassociative_verdict() -> Verdict:
        hset = set(rng.halo)
        for x in range(n):
            for a in rng.halo:
                xa = mul[x][a]
                if xa not in hset:
                    return Verdict("triassociativity", False, (x, a),
                                   "x*a left the halo")
                for b in rng.halo:
                    if rng.local_mul[xa][b] != mul[x][rng.local_mul[a][b]]:
                        return Verdict("triassociativity", False, (x, a, b))
        return Verdict("triassociativity", True)

    return AxiomReport(product_rng=product_verdict(),
                       left_identity=identity_verdict(),
                       halo_ring=halo_ring_verdict(),
                       triassociative=triassociative_verdict())


def bar_units(rng: LcrTable) -> list:
    """{ b : b*x = x for all x }, by full scan."""
    return list(find_bar_units(rng.carrier, rng.mul))


def halo_of(rng: LcrTable, bar_unit: int) -> list:
    """{ x : x * bar_unit = 0 }; the same set for every bar-unit."""
    if bar_unit not in rng.bar_units:
        raise ValueError(f"element {bar_unit} is not a bar-unit")
    z = rng.zero
    return sorted(x for x in range(rng.order) if rng.mul[x][bar_unit] == z)


def decompose(rng: LcrTable, bar_unit: int) -> Decomposition:
    if bar_unit not in rng.bar_units:
        raise ValueError(f"element {bar_unit} is not a bar-unit")
    c = rng.carrier
    even = sorted({rng.mul[x][bar_unit] for x in range(rng.order)})
    odd = halo_of(rng, bar_unit)
    proj = []
    for x in range(rng.order):
        x0 = rng.mul[x][bar_unit]
        x1 = c.sub(x, x0)
        proj.append((x0, x1))
    dec = Decomposition(left_identity_used=bar_unit, even_part=tuple(even),
                        odd_part=tuple(odd), projections=tuple(proj))
    oddset = set(odd)
    for x, (x0, x1) in enumerate(dec.projections):
        if c.add[x0][x1] != x or x1 not in oddset:
            raise InvariantViolation("decomposition failed",
                                     {"element": x, "x0": x0, "x1": x1})
    if set(even) & oddset != {c.zero}:
        raise InvariantViolation("even and odd parts overlap beyond zero",
                                 {"overlap": sorted(set(even) & oddset)})
    return dec


def power(rng: LcrTable, a: int, n: int) -> int:
    """n-fold dot product; the canonical left identity when n = 0."""
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    if n == 0:
        return rng.left_identity
    acc = a
    for _ in range(n - 1):
        acc = rng.mul[acc][a]
    return acc


def local_power(rng: LcrTable, alpha: int, n: int) -> int:
    """n-fold sharp product; the local identity when n = 0."""
    if alpha not in rng.halo:
        raise ValueError(f"element {alpha} is outside the halo")
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    if n == 0:
        if rng.local_identity is None:
            raise StructureError("rng has no local identity")
        return rng.local_identity
    acc = alpha
    for _ in range(n - 1):
        acc = rng.sharp(acc, alpha)
    return acc


def odd_component(rng: LcrTable, x: int, bar_unit: Optional[int] = None) -> int:
    b = rng.left_identity if bar_unit is None else bar_unit
    return rng.carrier.sub(x, rng.mul[x][b])


def is_nilpotent(rng: LcrTable, x: int, bar_unit: Optional[int] = None) -> bool:
    """x^m = 0 and x1^#n = 0 for some m, n within the carrier order."""
    z = rng.zero
    acc, found = x, False
    for _ in range(rng.order):
        if acc == z:
            found = True
            break
        acc = rng.mul[acc][x]
    if not found:
        return False
    x1 = odd_component(rng, x, bar_unit)
    acc = x1
    for _ in range(rng.order):
        if acc == z:
            return True
        acc = rng.sharp(acc, x1)
    return False


def quotient(rng: LcrTable, ideal) -> tuple:
    """Quotient rng R/I and the canonical projection.

    ideal may be an IdealSet or any collection of element indices; the
    ideal predicate is re-verified either way.  Returns (LcrTable, RngHom).
    """
    from .homs import RngHom, verify_hom
    from .ideals import is_ideal

    members = sorted(set(getattr(ideal, "members", ideal)))
    if not is_ideal(rng, members):
        raise ValueError("quotient requires an ideal")
    c, n = rng.carrier, rng.order
    mset = set(members)

    coset_of = [None] * n
    reps = []
    for x in range(n):
        if coset_of[x] is not None:
            continue
        cls = sorted(c.add[x][m] for m in members)
        rep_index = len(reps)
        reps.append(cls[0])
        for y in cls:
            coset_of[y] = rep_index
    q = len(reps)

    # Well-definedness of the induced products over all representatives.
    for ci in range(q):
        cls_i = [x for x in range(n) if coset_of[x] == ci]
        for cj in range(q):
            cls_j = [y for y in range(n) if coset_of[y] == cj]
            seen = {coset_of[rng.mul[x][y]] for x in cls_i for y in cls_j}
            if len(seen) != 1:
                raise InvariantViolation(
                    "induced product depends on coset representatives",
                    {"cosets": (ci, cj), "images": sorted(seen)})

    qadd = tuple(tuple(coset_of[c.add[reps[i]][reps[j]]] for j in range(q))
                 for i in range(q))
    qneg = tuple(coset_of[c.neg[reps[i]]] for i in range(q))
    qcarrier = FiniteCarrier(order=q, add=qadd, neg=qneg,
                             zero=coset_of[c.zero], coords=None)
    qmul = tuple(tuple(coset_of[rng.mul[reps[i]][reps[j]]] for j in range(q))
                 for i in range(q))

    # Halo of the quotient as the image of the halo; the local product on it
    # must be representative-independent as well.
    qhalo = sorted({coset_of[a] for a in rng.halo})
    halo_classes = {h: [a for a in rng.halo if coset_of[a] == h] for h in qhalo}
    qpairs = {}
    for ha in qhalo:
        for hb in qhalo:
            seen = {coset_of[rng.sharp(a, b)]
                    for a in halo_classes[ha] for b in halo_classes[hb]}
            if len(seen) != 1:
                raise InvariantViolation(
                    "induced local product depends on coset representatives",
                    {"cosets": (ha, hb), "images": sorted(seen)})
            qpairs[(ha, hb)] = seen.pop()

    qbar = find_bar_units(qcarrier, qmul)
    if not qbar:
        raise InvariantViolation("quotient has no bar-unit",
                                 {"ideal": members})
    qrng = LcrTable(carrier=qcarrier, mul=qmul, left_identity=qbar[0],
                    halo=tuple(qhalo),
                    local_mul=local_table(q, qhalo, qpairs),
                    local_identity=coset_of[rng.local_identity]
                    if rng.local_identity is not None else None,
                    bar_units=qbar)
    derived = tuple(sorted(x for x in range(q)
                           if qmul[x][qrng.left_identity] == qcarrier.zero))
    if derived != tuple(qhalo):
        raise InvariantViolation("quotient halo disagrees with the coset image",
                                 {"derived": derived, "image": tuple(qhalo)})
    report = verify_lcr(qrng)
    if not report.all_passed:
        fail = report.first_failure()
        raise InvariantViolation("quotient fails the rng axioms",
                                 {"law": fail.law, "witness": fail.witness})
    proj = RngHom(domain=rng, codomain=qrng, image=tuple(coset_of))
    v = verify_hom(proj)
    if not v.ok:
        raise InvariantViolation("canonical projection is not a homomorphism",
                                 {"law": v.law, "witness": v.witness})
    return qrng, proj
