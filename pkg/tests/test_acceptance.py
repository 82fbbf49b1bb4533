"""Acceptance gate: eight criteria, each reporting a single PASS/FAIL line.

All comparisons are exact (set and integer equality, zero tolerance); the
only pinned numbers are the per-criterion wall-clock budgets.  Oracles used
here are computed inside this module by raw subset scans so they do not
share code paths with the library's lattice or spectrum routines.
"""

import json
import subprocess
import sys
import time
from itertools import combinations

import lcrng as L

R4_FILE = "tests/fixtures/r4.lcr"
R8_FILE = "tests/fixtures/r8.lcr"
BAD_FILE = "tests/fixtures/bad_local.lcr"


def report(criterion, passed, elapsed, budget, detail=""):
    verdict = "PASS" if passed else "FAIL"
    line = f"ACCEPTANCE {criterion}: {verdict} ({elapsed:.2f}s / budget {budget}s)"
    if detail:
        line += f" {detail}"
    print(line)
    assert passed, line
    assert elapsed < budget, line


# --- independent oracles -----------------------------------------------------

def oracle_ideals(rng):
    """Every subset of the carrier tested against the ideal conditions."""
    n = rng.order
    c = rng.carrier
    hset = set(rng.halo)
    found = []
    for r in range(n + 1):
        for combo in combinations(range(n), r):
            S = set(combo)
            if c.zero not in S:
                continue
            if any(c.add[a][b] not in S or c.neg[a] not in S
                   for a in S for b in S):
                continue
            if any(rng.mul[x][s] not in S or rng.mul[s][x] not in S
                   for x in range(n) for s in S):
                continue
            if any(rng.sharp(a, s) not in S for a in hset for s in S & hset):
                continue
            found.append(tuple(sorted(S)))
    return found


def oracle_is_prime(rng, members):
    """The three-part primality definition applied literally, with no
    shared helper code."""
    n = rng.order
    c = rng.carrier
    P = set(members)
    if len(P) == n:
        return False
    hset = set(rng.halo)
    ph = {c.add[p][h] for p in P for h in hset}
    for x in range(n):
        for y in range(n):
            if rng.mul[x][y] in ph and x not in ph and y not in ph:
                return False
            if rng.mul[x][y] in P and x not in ph and y not in P:
                return False
    if hset <= P:
        return True
    P1 = P & hset
    if len(P1) == len(hset):
        return False
    for a in hset:
        for b in hset:
            if rng.sharp(a, b) in P1 and a not in P1 and b not in P1:
                return False
    return True


def oracle_classical_primes(modulus):
    """Prime ideals of Z/m: (p) for each prime p dividing m."""
    out = []
    for p in range(2, modulus + 1):
        if modulus % p or any(p % d == 0 for d in range(2, p)):
            continue
        out.append(tuple(sorted(range(0, modulus, p))))
    return sorted(out)


def build_corpus():
    z2 = L.ring_zmod(2)
    z4 = L.ring_zmod(4)
    z2x2 = L.ring_zmod_product([2, 2])
    corpus = [
        ("order1", L.ring_as_lcr(L.ring_zmod(1))),
        ("Z2", L.ring_as_lcr(z2)),
        ("Z4", L.ring_as_lcr(z4)),
        ("Z6", L.ring_as_lcr(L.ring_zmod(6))),
        ("R4", L.halo_extension(z2, z2, L.RingHom(z2, z2, (0, 1)))),
        ("R8", L.halo_extension(z4, z2, L.reduction_hom(z4, z2))),
        ("E8", L.halo_extension(z2, z2x2, L.RingHom(z2, z2x2, (0, 3)))),
    ]
    for factors in ([1], [2], [3], [4], [2, 2]):
        for i, rng in enumerate(L.small_rng_search(L.build_carrier(factors))):
            corpus.append((f"search{factors}#{i}", rng))
    return corpus


# --- criteria ----------------------------------------------------------------

def test_criterion_1_axiom_suite():
    start = time.monotonic()
    ok = True
    detail = ""
    for name, rng in build_corpus():
        if not L.verify_lcr(rng).all_passed:
            ok, detail = False, f"{name} fails axioms"
            break
    r4 = build_corpus()[4][1]
    mul = [list(row) for row in r4.mul]
    mul[3][3] = r4.carrier.add[mul[3][3]][1]
    mutated = L.LcrTable(carrier=r4.carrier, mul=tuple(tuple(r) for r in mul),
                         left_identity=r4.left_identity, halo=r4.halo,
                         local_mul=r4.local_mul, local_identity=r4.local_identity,
                         bar_units=r4.bar_units)
    rep = L.verify_lcr(mutated)
    if rep.all_passed or rep.first_failure().witness is None:
        ok, detail = False, "mutated table not caught with a witness"
    else:
        w = rep.first_failure()
        # the witness must actually exhibit the failure it claims
        if w.law == "product-rng" and len(w.witness) >= 2:
            pass
        elif not w.witness:
            ok, detail = False, "empty witness"
    report(1, ok, time.monotonic() - start, 1, detail)


def test_criterion_2_fixture_exactness():
    start = time.monotonic()
    corpus = dict(build_corpus())
    r4, r8 = corpus["R4"], corpus["R8"]
    ideals4 = oracle_ideals(r4)
    primes4 = [I for I in ideals4 if oracle_is_prime(r4, I)]
    lib4 = sorted(tuple(i.members) for i in L.enumerate_ideals(r4))
    ok = sorted(ideals4) == lib4 and len(ideals4) == 3
    spec4 = L.spectrum(r4)
    ok &= sorted(p.members for p in spec4.all_primes) == sorted(primes4)
    ok &= len(spec4.even_primes) == 1 and len(spec4.odd_primes) == 1

    ideals8 = oracle_ideals(r8)
    ok &= len(ideals8) == 5
    ok &= sorted(ideals8) == sorted(tuple(i.members) for i in L.enumerate_ideals(r8))
    primes8 = [I for I in ideals8 if oracle_is_prime(r8, I)]
    spec8 = L.spectrum(r8)
    ok &= sorted(p.members for p in spec8.all_primes) == sorted(primes8)
    idx = r8.carrier.index_of_coords
    ok &= [p.members for p in spec8.odd_primes] == [(idx((0, 0)), idx((2, 0)))]
    ok &= [set(p.members) for p in spec8.even_primes] == [
        {idx((0, 0)), idx((0, 1)), idx((2, 0)), idx((2, 1))}]
    ok &= list(L.nilradical(r8).members) == [idx((0, 0)), idx((2, 0))]
    report(2, ok, time.monotonic() - start, 1)


def test_criterion_3_prime_criteria_equivalence():
    start = time.monotonic()
    ok, detail = True, ""
    for name, rng in build_corpus():
        for P in L.enumerate_ideals(rng):
            if not P.is_proper:
                continue
            bad = L.prime_criteria_report(rng, P).agreement_failures()
            if bad:
                ok, detail = False, f"{name} {bad[0]}"
                break
        if not ok:
            break
    report(3, ok, time.monotonic() - start, 5, detail)


def test_criterion_4_nilpotency_and_radicals():
    start = time.monotonic()
    ok, detail = True, ""
    for name, rng in build_corpus():
        for x in range(rng.order):
            verdicts = {L.is_nilpotent(rng, x, b) for b in rng.bar_units}
            if len(verdicts) > 1:
                ok, detail = False, f"{name}: bar-unit-dependent nilpotency"
        nil = set(L.nilradical(rng).members)
        spec = L.spectrum(rng)
        if nil != set(L.intersection_of_primes(rng, spec.all_primes)):
            ok, detail = False, f"{name}: nilradical != prime intersection"
        for I in L.enumerate_ideals(rng):
            if not I.is_proper:
                continue
            rad = set(L.radical(rng, I).members)
            containing = [p for p in spec.all_primes
                          if set(I.members) <= set(p.members)]
            if rad != set(L.intersection_of_primes(rng, containing)):
                ok, detail = False, f"{name}: radical mismatch on {I.members}"
    report(4, ok, time.monotonic() - start, 5, detail)


def test_criterion_5_topology_replay():
    start = time.monotonic()
    ok, detail = True, ""
    for name, rng in build_corpus():
        from lcrng.replay import replay_closed_set_axioms
        res = replay_closed_set_axioms(rng)
        if not res.passed:
            ok, detail = False, f"{name}: {res.certificate}"
            break
        if L.homeomorphism_failure(L.phi0(rng)) is not None:
            ok, detail = False, f"{name}: phi0 not a homeomorphism"
            break
        if L.homeomorphism_failure(L.phi1(rng)) is not None:
            ok, detail = False, f"{name}: phi1 not a homeomorphism"
            break
    report(5, ok, time.monotonic() - start, 5, detail)


def test_criterion_6_functoriality():
    start = time.monotonic()
    ok, detail = True, ""
    corpus = build_corpus()
    homs = []
    for _, rng_r in corpus:
        for _, rng_s in corpus:
            if rng_r.order <= 8 and rng_s.order <= 8:
                homs.extend(L.enumerate_homs(rng_r, rng_s))
    for f in homs:
        try:
            L.pullback(f)
        except L.InvariantViolation as exc:
            ok, detail = False, str(exc)
            break
        for I in L.enumerate_ideals(f.domain):
            good, info = L.verify_pullback_equations(f, I)
            if not good:
                ok, detail = False, str(info)
                break
        if not ok:
            break
    if ok:
        for f in homs:
            for g in homs:
                if f.codomain != g.domain or f.domain.order * g.codomain.order > 64:
                    continue
                good, failures = L.verify_functoriality(f, g)
                if not good:
                    ok, detail = False, str(failures[0])
                    break
            if not ok:
                break
    report(6, ok, time.monotonic() - start, 10, detail)


def test_criterion_7_classical_degeneration():
    start = time.monotonic()
    ok, detail = True, ""
    for modulus in (1, 2, 4, 6):
        ring = L.ring_zmod(modulus)
        rng = L.ring_as_lcr(ring)
        spec = L.spectrum(rng)
        expected = oracle_classical_primes(modulus)
        got = sorted(tuple(p.members) for p in spec.all_primes)
        if got != expected or spec.odd_primes:
            ok, detail = False, f"Z{modulus}: spectrum {got} != {expected}"
            break
        nil_expected = tuple(sorted(set.intersection(
            *[set(p) for p in expected]))) if expected else tuple(range(modulus))
        if tuple(L.nilradical(rng).members) != nil_expected:
            ok, detail = False, f"Z{modulus}: nilradical mismatch"
            break
        for I in L.enumerate_ideals(rng):
            if not I.is_proper:
                continue
            want = [set(p) for p in expected if set(I.members) <= set(p)]
            want = tuple(sorted(set.intersection(*want))) if want \
                else tuple(range(modulus))
            if tuple(L.radical(rng, I).members) != want:
                ok, detail = False, f"Z{modulus}: radical mismatch"
                break
        lib_top = L.zariski(rng)
        classical = {frozenset(v) for v in (
            frozenset(i for i, p in enumerate(expected) if set(I.members) <= set(p))
            for I in L.enumerate_ideals(rng))}
        lib_points = {p: i for i, p in enumerate(lib_top.points)}
        lib_sets = {frozenset(c) for c in lib_top.closed_sets}
        order_match = [tuple(p) for p in lib_top.points] == expected
        if not order_match or lib_sets != classical:
            ok, detail = False, f"Z{modulus}: topology mismatch"
            break
    report(7, ok, time.monotonic() - start, 1, detail)


def test_criterion_8_cli_golden():
    start = time.monotonic()

    def run(*args):
        return subprocess.run([sys.executable, "-m", "lcrng.cli", *args],
                              capture_output=True, text=True)

    ok, detail = True, ""
    for path in (R4_FILE, R8_FILE):
        first = run("check", path, "R")
        second = run("check", path, "R")
        if first.returncode != 0:
            ok, detail = False, f"{path}: exit {first.returncode}"
            break
        if first.stdout != second.stdout:
            ok, detail = False, f"{path}: output not byte-stable"
            break
        data = json.loads(first.stdout)
        if not data["passed"]:
            ok, detail = False, f"{path}: propositions failed"
            break
    if ok:
        bad = run("verify", BAD_FILE)
        if bad.returncode != 1 or "local identity" not in bad.stderr:
            ok, detail = False, "mutated fixture not rejected with the witness"
    report(8, ok, time.monotonic() - start, 1, detail)
