"""Left commutative rng homomorphisms: verification, brute-force search,
induced quotient maps, the spectrum pullback, and functoriality checks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Iterable, Optional

from .carrier import generator_expressions, minimal_generators
from .core import LcrTable, Verdict
from .errors import InvariantViolation
from .ideals import IdealSet, Spectrum, ideal_generated, prime_criteria_report, spectrum
from .spaces import PointMap, is_continuous
from .topology import vanishing, zariski


@dataclass(frozen=True)
class RngHom:
    domain: LcrTable
    codomain: LcrTable
    image: tuple

    def __call__(self, x: int) -> int:
        return self.image[x]


def verify_hom(h: RngHom) -> Verdict:
    """Exhaustive check of the five homomorphism conditions plus the halo
    inclusion they entail; identifies the first violated law."""
    R, S, f = h.domain, h.codomain, h.image
    if len(f) != R.order:
        return Verdict("image-table", False, None, "wrong length")
    for v in f:
        if not (0 <= v < S.order):
            return Verdict("image-table", False, (v,), "index out of range")
    for x in range(R.order):
        for y in range(R.order):
            if f[R.carrier.add[x][y]] != S.carrier.add[f[x]][f[y]]:
                return Verdict("additive", False, (x, y))
            if f[R.mul[x][y]] != S.mul[f[x]][f[y]]:
                return Verdict("multiplicative", False, (x, y))
    if not any(f[b] in S.bar_units for b in R.bar_units):
        return Verdict("bar-unit-image", False, tuple(R.bar_units),
                       "no bar-unit maps to a bar-unit")
    shalo = set(S.halo)
    for a in R.halo:
        if f[a] not in shalo:
            return Verdict("halo-image", False, (a,),
                           "halo element maps outside the halo")
    for a in R.halo:
        for b in R.halo:
            if f[R.sharp(a, b)] != S.sharp(f[a], f[b]):
                return Verdict("local-multiplicative", False, (a, b))
    if R.local_identity is None or S.local_identity is None:
        return Verdict("local-identity", False, None, "missing local identity")
    if f[R.local_identity] != S.local_identity:
        return Verdict("local-identity", False, (R.local_identity,))
    return Verdict("hom", True)


def identity_hom(R: LcrTable) -> RngHom:
    return RngHom(domain=R, codomain=R, image=tuple(range(R.order)))


def compose(first: RngHom, then: RngHom) -> RngHom:
    """then o first."""
    if first.codomain is not then.domain and first.codomain != then.domain:
        raise ValueError("homomorphisms are not composable")
    return RngHom(domain=first.domain, codomain=then.codomain,
                  image=tuple(then.image[first.image[x]] for x in range(first.domain.order)))


def enumerate_homs(R: LcrTable, S: LcrTable) -> list:
    """All maps satisfying the homomorphism conditions, by backtracking over
    images of an additive generating set; canonically ordered."""
    gens = minimal_generators(R.carrier)
    if not gens:
        candidate = RngHom(domain=R, codomain=S, image=(S.zero,) * 1)
        return [candidate] if verify_hom(candidate).ok else []
    exprs = generator_expressions(R.carrier, gens)
    # multiples[s][k] = k*s in S, k up to the largest coefficient used
    maxc = max(max(vec) for vec in exprs)
    multiples = []
    for s in range(S.order):
        row = [S.zero]
        for _ in range(maxc):
            row.append(S.carrier.add[row[-1]][s])
        multiples.append(row)
    out = []
    for images in iproduct(range(S.order), repeat=len(gens)):
        table = []
        for vec in exprs:
            acc = S.zero
            for coeff, img in zip(vec, images):
                acc = S.carrier.add[acc][multiples[img][coeff]]
            table.append(acc)
        h = RngHom(domain=R, codomain=S, image=tuple(table))
        if verify_hom(h).ok:
            out.append(h)
    out.sort(key=lambda h: h.image)
    return out


def find_isomorphism(R: LcrTable, S: LcrTable) -> Optional[RngHom]:
    """A bijective verified homomorphism, or None."""
    if R.order != S.order:
        return None
    for h in enumerate_homs(R, S):
        if len(set(h.image)) == R.order:
            return h
    return None


def induced_quotient_hom(f: RngHom):
    """The commutative ring homomorphism R/halo -> S/halo induced by f.

    Returns a commutative.RingHom; well-definedness is checked over all
    coset representatives.
    """
    from .commutative import RingHom as CRingHom
    from .commutative import quotient_ring_by_halo, verify_ring_hom

    ring_r, proj_r = quotient_ring_by_halo(f.domain)
    ring_s, proj_s = quotient_ring_by_halo(f.codomain)
    image = [None] * ring_r.order
    for x in range(f.domain.order):
        target = proj_s[f.image[x]]
        c = proj_r[x]
        if image[c] is None:
            image[c] = target
        elif image[c] != target:
            raise InvariantViolation("induced quotient map is not well defined",
                                     {"coset": c, "images": (image[c], target)})
    h = CRingHom(domain=ring_r, codomain=ring_s, image=tuple(image))
    bad = verify_ring_hom(h)
    if bad is not None:
        raise InvariantViolation("induced quotient map is not a ring hom", bad)
    return h


def pullback(f: RngHom, spec_r: Spectrum = None, spec_s: Spectrum = None) -> PointMap:
    """f-sharp: spec of the codomain -> spec of the domain, by preimage.

    Every preimage is re-verified to be a Hu-Liu prime of matching parity,
    and the point map is checked continuous.
    """
    R, S = f.domain, f.codomain
    spec_r = spectrum(R) if spec_r is None else spec_r
    spec_s = spectrum(S) if spec_s is None else spec_s
    top_s, top_r = zariski(S, spec_s), zariski(R, spec_r)
    r_index = {label: i for i, label in enumerate(top_r.points)}
    even_r = {p.members for p in spec_r.even_primes}
    even_s = {p.members for p in spec_s.even_primes}
    mapping = []
    for label in top_s.points:
        qset = set(label)
        pre = tuple(sorted(x for x in range(R.order) if f.image[x] in qset))
        try:
            ideal = IdealSet.create(R, pre)
            ok = ideal.is_proper and prime_criteria_report(R, ideal).is_prime
        except ValueError:
            ok = False
        if not ok or pre not in r_index:
            raise InvariantViolation("preimage of a prime is not a Hu-Liu prime",
                                     {"prime": list(label), "preimage": list(pre)})
        if (label in even_s) != (pre in even_r):
            raise InvariantViolation("pullback does not preserve parity",
                                     {"prime": list(label), "preimage": list(pre)})
        mapping.append(r_index[pre])
    pm = PointMap(domain=top_s, codomain=top_r, mapping=tuple(mapping))
    if not is_continuous(pm):
        raise InvariantViolation("pullback is not continuous",
                                 {"hom": list(f.image)})
    return pm


def verify_pullback_equations(f: RngHom, I: IdealSet) -> tuple:
    """Checks the preimage-of-vanishing-set identity and the halo-sum
    generation identity for one domain ideal; (ok, details)."""
    R, S = f.domain, f.codomain
    spec_s = spectrum(S)
    iset = set(I.members)
    lhs = {q.members for q in spec_s.all_primes
           if iset <= {x for x in range(R.order) if f.image[x] in set(q.members)}}
    fI = ideal_generated(S, {f.image[x] for x in I.members})
    rhs = {q.members for q in vanishing(S, fI, spec_s)}
    details = {}
    ok = True
    if lhs != rhs:
        ok = False
        details["vanishing-preimage"] = {
            "lhs": sorted(sorted(p) for p in lhs),
            "rhs": sorted(sorted(p) for p in rhs)}
    c = R.carrier
    i_plus_h = {c.add[i][h] for i in I.members for h in R.halo}
    left = set(ideal_generated(S, {f.image[x] for x in i_plus_h}).members)
    cs = S.carrier
    right = {cs.add[a][h] for a in fI.members for h in S.halo}
    if left != right:
        ok = False
        details["halo-sum-generation"] = {"lhs": sorted(left), "rhs": sorted(right)}
    return ok, details


def verify_functoriality(f: RngHom, g: RngHom) -> tuple:
    """Composition, contravariance and the even-spectrum square; (ok, failures)."""
    failures = []
    if f.codomain != g.domain:
        raise ValueError("homomorphisms are not composable")
    gf = compose(f, g)
    v = verify_hom(gf)
    if not v.ok:
        failures.append({"check": "composite-is-hom", "law": v.law,
                         "witness": v.witness})
    spec_r = spectrum(f.domain)
    spec_s = spectrum(f.codomain)
    spec_t = spectrum(g.codomain)
    f_sharp = pullback(f, spec_r, spec_s)
    g_sharp = pullback(g, spec_s, spec_t)
    gf_sharp = pullback(gf, spec_r, spec_t)
    composed = tuple(f_sharp.mapping[g_sharp.mapping[i]]
                     for i in range(len(g_sharp.mapping)))
    if composed != gf_sharp.mapping:
        failures.append({"check": "contravariance",
                         "composed": list(composed),
                         "direct": list(gf_sharp.mapping)})
    for rng, spec in ((f.domain, spec_r), (f.codomain, spec_s)):
        idp = pullback(identity_hom(rng), spec, spec)
        if idp.mapping != tuple(range(len(spec.all_primes))):
            failures.append({"check": "identity-pullback",
                             "mapping": list(idp.mapping)})
    for hom, dom_spec, cod_spec in ((f, spec_r, spec_s), (g, spec_s, spec_t)):
        bad = _even_square_failure(hom, dom_spec, cod_spec)
        if bad is not None:
            failures.append(bad)
    return not failures, failures


def _even_square_failure(f: RngHom, spec_r: Spectrum, spec_s: Spectrum):
    """Commutativity of the classical-spectrum vs even-spectrum square."""
    from .topology import phi0

    fbar = induced_quotient_hom(f)
    phi_r = phi0(f.domain, spec_r)
    phi_s = phi0(f.codomain, spec_s)
    f_sharp = pullback(f, spec_r, spec_s)
    r_even = {label: i for i, label in enumerate(phi_r.domain.points)}
    for qi, qlabel in enumerate(phi_s.domain.points):
        # classical pullback of fbar on spec(S/halo)
        qset = set(qlabel)
        pre = tuple(sorted(x for x in range(fbar.domain.order)
                           if fbar.image[x] in qset))
        if pre not in r_even:
            return {"check": "even-square", "reason": "fbar preimage not prime",
                    "prime": list(qlabel)}
        via_classical = phi_r.codomain.points[phi_r.mapping[r_even[pre]]]
        even_point = phi_s.codomain.points[phi_s.mapping[qi]]
        sharp_index = f_sharp.mapping[f_sharp.domain.points.index(even_point)]
        via_sharp = f_sharp.codomain.points[sharp_index]
        if via_classical != via_sharp:
            return {"check": "even-square", "prime": list(qlabel),
                    "classical-route": list(via_classical),
                    "pullback-route": list(via_sharp)}
    return None
