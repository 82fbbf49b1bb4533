"""Executable replay of every proposition over one rng (and its homs).

Each check returns a CheckResult; a failed result carries a counterexample
certificate that re-verifies against the cited predicate.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .core import (LcrTable, decompose, is_nilpotent, local_power, odd_component,
                   power, quotient, verify_lcr)
from .errors import InvariantViolation
from .ideals import (IdealSet, enumerate_ideals, intersection_of_primes,
                     nilradical, prime_criteria_report, radical, spectrum)
from .spaces import check_closed_axioms
from .topology import even_odd_subspaces, phi0, phi1, zariski


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    certificate: Optional[dict] = None


def _ok(name):
    return CheckResult(name, True)


def _fail(name, cert):
    return CheckResult(name, False, cert)


def replay_axioms(rng: LcrTable) -> CheckResult:
    report = verify_lcr(rng)
    if report.all_passed:
        return _ok("axioms")
    v = report.first_failure()
    return _fail("axioms", {"law": v.law, "witness": v.witness, "detail": v.detail})


def replay_halo_independence(rng: LcrTable) -> CheckResult:
    z = rng.zero
    sets = {b: tuple(sorted(x for x in range(rng.order) if rng.mul[x][b] == z))
            for b in rng.bar_units}
    vals = set(sets.values())
    if len(vals) == 1:
        return _ok("halo-independence")
    return _fail("halo-independence", {"halos": {b: list(s) for b, s in sets.items()}})


def replay_decomposition(rng: LcrTable) -> CheckResult:
    c, l = rng.carrier, rng.left_identity
    for b in rng.bar_units:
        try:
            dec = decompose(rng, b)
        except InvariantViolation as exc:
            return _fail("decomposition", exc.certificate)
        for x, (x0, x1) in enumerate(dec.projections):
            if c.add[x0][x1] != x or rng.mul[x0][b] != x0 or rng.mul[x1][b] != c.zero:
                return _fail("decomposition", {"bar_unit": b, "element": x})
    return _ok("decomposition")


def replay_power_laws(rng: LcrTable) -> CheckResult:
    n = rng.order
    for a in range(n):
        for m in range(1, n + 1):
            for k in range(1, n + 1):
                if power(rng, a, m + k) != rng.mul[power(rng, a, m)][power(rng, a, k)]:
                    return _fail("power-laws", {"element": a, "exponents": (m, k)})
    if rng.local_identity is not None:
        for a in rng.halo:
            for m in range(0, n + 1):
                for k in range(0, n + 1):
                    lhs = local_power(rng, a, m + k)
                    rhs = rng.sharp(local_power(rng, a, m), local_power(rng, a, k))
                    if lhs != rhs:
                        return _fail("power-laws",
                                     {"halo_element": a, "exponents": (m, k)})
    return _ok("power-laws")


def replay_nilpotency_bar_units(rng: LcrTable) -> CheckResult:
    """Nilpotency verdicts agree across every bar-unit choice."""
    for x in range(rng.order):
        verdicts = {b: is_nilpotent(rng, x, b) for b in rng.bar_units}
        if len(set(verdicts.values())) > 1:
            return _fail("nilpotency-bar-unit-independence",
                         {"element": x, "verdicts": verdicts})
    return _ok("nilpotency-bar-unit-independence")


def replay_nilradical(rng: LcrTable) -> CheckResult:
    """Direct-sum assembly, ideal-hood, and reduced quotient."""
    try:
        nil = nilradical(rng)
    except InvariantViolation as exc:
        return _fail("nilradical", exc.certificate)
    except ValueError:
        return _fail("nilradical", {"reason": "nilpotent set is not an ideal"})
    q, _proj = quotient(rng, nil)
    qnil = nilradical(q)
    if set(qnil.members) != {q.zero}:
        return _fail("nilradical", {"reason": "quotient by nilradical not reduced",
                                    "quotient_nilradical": list(qnil.members)})
    return _ok("nilradical")


def replay_prime_criteria(rng: LcrTable) -> CheckResult:
    """All applicable primality characterizations agree on every proper ideal."""
    for P in enumerate_ideals(rng):
        if not P.is_proper:
            continue
        report = prime_criteria_report(rng, P)
        disagreements = report.agreement_failures()
        if disagreements:
            return _fail("prime-criteria-equivalence",
                         {"ideal": list(P.members), "disagreements": disagreements})
    return _ok("prime-criteria-equivalence")


def replay_nilradical_intersection(rng: LcrTable) -> CheckResult:
    nil = set(nilradical(rng).members)
    inter = intersection_of_primes(rng, spectrum(rng).all_primes)
    if nil != set(inter):
        return _fail("nilradical-is-prime-intersection",
                     {"nilradical": sorted(nil), "intersection": sorted(inter)})
    return _ok("nilradical-is-prime-intersection")


def replay_radical_intersection(rng: LcrTable) -> CheckResult:
    spec = spectrum(rng)
    for I in enumerate_ideals(rng):
        if not I.is_proper:
            continue
        rad = set(radical(rng, I).members)
        containing = [p for p in spec.all_primes if set(I.members) <= set(p.members)]
        inter = intersection_of_primes(rng, containing)
        if rad != set(inter):
            return _fail("radical-is-prime-intersection",
                         {"ideal": list(I.members), "radical": sorted(rad),
                          "intersection": sorted(inter)})
        rad2 = set(radical(rng, radical(rng, I)).members)
        if rad2 != rad:
            return _fail("radical-is-prime-intersection",
                         {"ideal": list(I.members),
                          "reason": "radical not idempotent"})
    return _ok("radical-is-prime-intersection")


def replay_quotient_soundness(rng: LcrTable) -> CheckResult:
    for I in enumerate_ideals(rng):
        try:
            quotient(rng, I)
        except InvariantViolation as exc:
            return _fail("quotient-soundness",
                         {"ideal": list(I.members), **exc.certificate})
    return _ok("quotient-soundness")


def replay_closed_set_axioms(rng: LcrTable) -> CheckResult:
    """Vanishing-set identities and the closed-set axioms of the family."""
    spec = spectrum(rng)
    ideals = enumerate_ideals(rng)
    primes = spec.all_primes

    def vset(members):
        mset = set(members)
        return frozenset(i for i, p in enumerate(primes)
                         if mset <= set(p.members))

    zero_ideal = [rng.zero]
    if vset(zero_ideal) != frozenset(range(len(primes))):
        return _fail("closed-set-axioms", {"identity": "V(0) = spec"})
    if vset(range(rng.order)) != frozenset():
        return _fail("closed-set-axioms", {"identity": "V(R) = empty"})
    c = rng.carrier
    for I, J in combinations(ideals, 2):
        meet = sorted(set(I.members) & set(J.members))
        if vset(I.members) | vset(J.members) != vset(meet):
            return _fail("closed-set-axioms",
                         {"identity": "union", "ideals": (list(I.members),
                                                          list(J.members))})
    for k in range(len(ideals) + 1):
        for sel in combinations(range(len(ideals)), k):
            inter = frozenset(range(len(primes)))
            total = {rng.zero}
            for i in sel:
                inter &= vset(ideals[i].members)
                total = {c.add[a][b] for a in total for b in ideals[i].members}
            if inter != vset(sorted(total)):
                return _fail("closed-set-axioms",
                             {"identity": "intersection-vs-sum",
                              "ideals": [list(ideals[i].members) for i in sel]})
    bad = check_closed_axioms(zariski(rng, spec))
    if bad is not None:
        return _fail("closed-set-axioms", bad)
    return _ok("closed-set-axioms")


def replay_subspaces_and_homeomorphisms(rng: LcrTable) -> CheckResult:
    spec = spectrum(rng)
    try:
        even_odd_subspaces(rng, spec)
        phi0(rng, spec)
        phi1(rng, spec)
    except InvariantViolation as exc:
        return _fail("subspace-homeomorphisms",
                     {"message": str(exc), **exc.certificate})
    return _ok("subspace-homeomorphisms")


def replay_homs(rng: LcrTable, homs=None) -> CheckResult:
    """Pullback soundness, the vanishing/generation identities on every
    domain ideal, and functoriality over composable pairs."""
    from .homs import enumerate_homs, pullback, verify_functoriality, \
        verify_pullback_equations

    homs = enumerate_homs(rng, rng) if homs is None else list(homs)
    for f in homs:
        try:
            pullback(f)
        except InvariantViolation as exc:
            return _fail("hom-pullbacks", {"hom": list(f.image), **exc.certificate})
        for I in enumerate_ideals(f.domain):
            ok, details = verify_pullback_equations(f, I)
            if not ok:
                return _fail("hom-pullbacks",
                             {"hom": list(f.image), "ideal": list(I.members),
                              **details})
    for f in homs:
        for g in homs:
            if f.codomain != g.domain:
                continue
            ok, failures = verify_functoriality(f, g)
            if not ok:
                return _fail("hom-pullbacks",
                             {"homs": (list(f.image), list(g.image)),
                              "failures": failures})
    return _ok("hom-pullbacks")


def replay_all(rng: LcrTable, homs: Optional[Iterable] = None) -> list:
    """Every proposition replay for one rng; homs defaults to its endos."""
    results = [replay_axioms(rng)]
    if not results[0].passed:
        return results
    results.extend([
        replay_halo_independence(rng),
        replay_decomposition(rng),
        replay_power_laws(rng),
        replay_nilpotency_bar_units(rng),
        replay_nilradical(rng),
        replay_prime_criteria(rng),
        replay_nilradical_intersection(rng),
        replay_radical_intersection(rng),
        replay_quotient_soundness(rng),
        replay_closed_set_axioms(rng),
        replay_subspaces_and_homeomorphisms(rng),
        replay_homs(rng, homs),
    ])
    return results
