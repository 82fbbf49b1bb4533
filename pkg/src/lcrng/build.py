"""Builders: the halo extension A (+) H, the embedding of commutative rings,
and an exhaustive search oracle for small carriers."""

from __future__ import annotations

from itertools import product as iproduct
from typing import Optional

from .carrier import (FiniteCarrier, generator_expressions, minimal_generators)
from .commutative import CommutativeRingTable, RingHom, check_ring, verify_ring_hom
from .core import LcrTable, UNDEFINED, assemble_lcr, find_bar_units, verify_lcr
from .errors import InvariantViolation, StructureError

SEARCH_CANDIDATE_CAP = 2_000_000


def halo_extension(A: CommutativeRingTable, H: CommutativeRingTable,
                   psi: RingHom) -> LcrTable:
    """Carrier A x H with product (a,u)(b,v) = (ab, psi(a) v); the second
    factor becomes the halo with H's multiplication as the local product."""
    check_ring(A)
    check_ring(H)
    if psi.domain != A or psi.codomain != H:
        raise StructureError("psi must map A into H")
    bad = verify_ring_hom(psi)
    if bad is not None:
        raise StructureError(f"psi is not a unital ring homomorphism: {bad}")
    na, nh = A.order, H.order
    order = na * nh

    def idx(a, h):
        return a * nh + h

    def coords_of(a, h):
        if A.carrier.coords is not None and H.carrier.coords is not None:
            return A.carrier.coords[a] + H.carrier.coords[h]
        return (a, h)

    add = tuple(tuple(idx(A.carrier.add[i // nh][j // nh],
                          H.carrier.add[i % nh][j % nh])
                      for j in range(order)) for i in range(order))
    neg = tuple(idx(A.carrier.neg[i // nh], H.carrier.neg[i % nh])
                for i in range(order))
    coords = tuple(coords_of(i // nh, i % nh) for i in range(order))
    carrier = FiniteCarrier(order=order, add=add, neg=neg,
                            zero=idx(A.carrier.zero, H.carrier.zero),
                            coords=coords)
    mul = tuple(tuple(idx(A.mul[i // nh][j // nh],
                          H.mul[psi.image[i // nh]][j % nh])
                      for j in range(order)) for i in range(order))
    halo = [idx(A.carrier.zero, h) for h in range(nh)]
    pairs = {(idx(A.carrier.zero, u), idx(A.carrier.zero, v)):
             idx(A.carrier.zero, H.mul[u][v])
             for u in range(nh) for v in range(nh)}
    rng = assemble_lcr(carrier, mul, pairs)
    if sorted(halo) != list(rng.halo):
        raise InvariantViolation("halo of the extension is not 0 (+) H",
                                 {"expected": sorted(halo), "got": list(rng.halo)})
    report = verify_lcr(rng)
    if not report.all_passed:
        fail = report.first_failure()
        raise InvariantViolation("halo extension fails the rng axioms",
                                 {"law": fail.law, "witness": fail.witness})
    return rng


def ring_as_lcr(A: CommutativeRingTable) -> LcrTable:
    """A classical commutative ring viewed as a rng with zero halo."""
    check_ring(A)
    z = A.carrier.zero
    rng = assemble_lcr(A.carrier, A.mul, {(z, z): z})
    report = verify_lcr(rng)
    if not report.all_passed:
        fail = report.first_failure()
        raise InvariantViolation("ring embedding fails the rng axioms",
                                 {"law": fail.law, "witness": fail.witness})
    return rng


def _additive_automorphisms(carrier: FiniteCarrier) -> list:
    gens = minimal_generators(carrier)
    if not gens:
        return [(0,)]
    exprs = generator_expressions(carrier, gens)
    maxc = max(max(vec) for vec in exprs)
    multiples = []
    for s in range(carrier.order):
        row = [carrier.zero]
        for _ in range(maxc):
            row.append(carrier.add[row[-1]][s])
        multiples.append(row)
    autos = []
    for images in iproduct(range(carrier.order), repeat=len(gens)):
        table = []
        for vec in exprs:
            acc = carrier.zero
            for coeff, img in zip(vec, images):
                acc = carrier.add[acc][multiples[img][coeff]]
            table.append(acc)
        if len(set(table)) != carrier.order:
            continue
        ok = all(table[carrier.add[x][y]] == carrier.add[table[x]][table[y]]
                 for x in range(carrier.order) for y in range(carrier.order))
        if ok:
            autos.append(tuple(table))
    return autos


def _canonical_key(rng: LcrTable, autos) -> tuple:
    """Lexicographically least relabeling of (mul, halo, local product)."""
    n = rng.order
    best = None
    for sigma in autos:
        inv = [0] * n
        for x, y in enumerate(sigma):
            inv[y] = x
        mul = tuple(tuple(sigma[rng.mul[inv[i]][inv[j]]] for j in range(n))
                    for i in range(n))
        halo = tuple(sorted(sigma[a] for a in rng.halo))
        local = tuple(tuple(sigma[rng.local_mul[inv[i]][inv[j]]]
                            if rng.local_mul[inv[i]][inv[j]] != UNDEFINED
                            else UNDEFINED
                            for j in range(n)) for i in range(n))
        key = (mul, halo, local)
        if best is None or key < best:
            best = key
    return best


def _bilinear_tables(carrier: FiniteCarrier, elements, gens, exprs):
    """All tables on `elements` extending assignments on generator pairs by
    bilinearity; yields dict-free full tables indexed by carrier indices."""
    k = len(gens)
    n = carrier.order
    elems = sorted(elements)
    if not gens:
        z = carrier.zero
        yield {(z, z): z} if len(elems) == 1 else None
        return
    slots = [(i, j) for i in range(k) for j in range(k)]
    total = len(elems) ** len(slots)
    if total > SEARCH_CANDIDATE_CAP:
        raise StructureError(
            f"search space of {total} product tables is too large for this carrier")
    for assignment in iproduct(elems, repeat=len(slots)):
        gp = dict(zip(slots, assignment))
        prod = {}
        for x in elems:
            vx = exprs[x]
            for y in elems:
                vy = exprs[y]
                acc = carrier.zero
                for i in range(k):
                    if vx[i] == 0:
                        continue
                    for j in range(k):
                        if vy[j] == 0:
                            continue
                        # vx[i]*vy[j] scalar multiple of the generator product
                        term = gp[(i, j)]
                        m = carrier.zero
                        for _ in range(vx[i] * vy[j]):
                            m = carrier.add[m][term]
                        acc = carrier.add[acc][m]
                prod[(x, y)] = acc
        yield prod


def small_rng_search(carrier: FiniteCarrier, max_results: Optional[int] = None) -> list:
    """Exhaustive enumeration of left commutative rng structures on a carrier,
    deduplicated up to isomorphism; carriers of order <= 8 only.

    The product tables are generated bilinearly from generator-pair images,
    then screened: a bilinear extension that disagrees with the carrier's
    relations fails the distributivity scan and is dropped.
    """
    if carrier.order > 8:
        raise StructureError("search supports carriers of order <= 8 only")
    n = carrier.order
    gens = minimal_generators(carrier)
    exprs_list = generator_expressions(carrier, gens) if gens else [(0,) * 0]
    exprs = {i: tuple(exprs_list[i]) for i in range(n)}
    autos = _additive_automorphisms(carrier)
    results = {}
    for prod in _bilinear_tables(carrier, range(n), gens, exprs):
        if prod is None:
            prod = {(carrier.zero, carrier.zero): carrier.zero}
        mul = tuple(tuple(prod[(i, j)] for j in range(n)) for i in range(n))
        bars = find_bar_units(carrier, mul)
        if not bars:
            continue
        if not _is_lcr_product(carrier, mul):
            continue
        left = bars[0]
        halo = sorted(x for x in range(n) if mul[x][left] == carrier.zero)
        for rng in _local_products(carrier, mul, halo):
            if not verify_lcr(rng).all_passed:
                continue
            key = _canonical_key(rng, autos)
            if key not in results:
                results[key] = _from_canonical_key(carrier, key)
        if max_results is not None and len(results) >= max_results:
            break
    out = [results[k] for k in sorted(results)]
    if max_results is not None:
        out = out[:max_results]
    return out


def _is_lcr_product(carrier: FiniteCarrier, mul) -> bool:
    n = carrier.order
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                    return False
                if mul[mul[x][y]][z] != mul[mul[y][x]][z]:
                    return False
                if mul[x][carrier.add[y][z]] != carrier.add[mul[x][y]][mul[x][z]]:
                    return False
                if mul[carrier.add[y][z]][x] != carrier.add[mul[y][x]][mul[z][x]]:
                    return False
    return True


def _local_products(carrier: FiniteCarrier, mul, halo):
    """Yield LcrTables for every commutative unital ring structure on the
    halo satisfying the triassociative law with the given product."""
    hgens = minimal_generators(carrier, halo)
    hexprs_list = generator_expressions_subset(carrier, halo, hgens)
    for prod in _bilinear_tables(carrier, halo, hgens,
                                 {e: hexprs_list[e] for e in halo}):
        if prod is None:
            prod = {(carrier.zero, carrier.zero): carrier.zero}
        if any(v not in set(halo) for v in prod.values()):
            continue
        pairs = dict(prod)
        try:
            rng = assemble_lcr(carrier, mul, pairs)
        except StructureError:
            continue
        yield rng


def generator_expressions_subset(carrier: FiniteCarrier, subset, gens) -> dict:
    """Coefficient vectors for the elements of a subgroup."""
    exprs = {carrier.zero: (0,) * len(gens)}
    frontier = [carrier.zero]
    while frontier:
        nxt = []
        for x in frontier:
            vec = exprs[x]
            for i, g in enumerate(gens):
                y = carrier.add[x][g]
                if y not in exprs:
                    exprs[y] = vec[:i] + (vec[i] + 1,) + vec[i + 1:]
                    nxt.append(y)
        frontier = nxt
    if set(exprs) != set(subset):
        raise StructureError("generators do not generate the subgroup")
    return exprs


def _from_canonical_key(carrier: FiniteCarrier, key) -> LcrTable:
    mul, halo, local = key
    pairs = {(a, b): local[a][b] for a in halo for b in halo}
    return assemble_lcr(carrier, mul, pairs)
