import pytest

import lcrng as L


def test_r4_has_exactly_three_ideals(r4):
    ideals = L.enumerate_ideals(r4)
    assert sorted(len(i.members) for i in ideals) == [1, 2, 4]


def test_r8_has_exactly_five_ideals(r8):
    ideals = L.enumerate_ideals(r8)
    members = sorted(tuple(i.labels()) for i in ideals)
    assert len(ideals) == 5
    assert ("(0,0)",) in members
    assert ("(0,0)", "(0,1)") in members
    assert ("(0,0)", "(2,0)") in members
    assert ("(0,0)", "(0,1)", "(2,0)", "(2,1)") in members


def test_ideal_generated_matches_enumeration(r8):
    for ideal in L.enumerate_ideals(r8):
        for g in ideal.members:
            assert set(L.ideal_generated(r8, [g]).members) <= set(ideal.members)
    two = L.ideal_generated(r8, [r8.carrier.index_of_coords((2, 0))])
    assert two.labels() == ["(0,0)", "(2,0)"]


def test_r4_spectrum(r4):
    spec = L.spectrum(r4)
    assert len(spec.even_primes) == 1 and len(spec.odd_primes) == 1
    assert list(spec.even_primes[0].members) == sorted(r4.halo)
    assert list(spec.odd_primes[0].members) == [r4.zero]


def test_r8_spectrum_and_nilradical(r8):
    spec = L.spectrum(r8)
    assert [p.labels() for p in spec.even_primes] == [
        ["(0,0)", "(0,1)", "(2,0)", "(2,1)"]]
    assert [p.labels() for p in spec.odd_primes] == [["(0,0)", "(2,0)"]]
    assert L.nilradical(r8).labels() == ["(0,0)", "(2,0)"]


def test_z6_spectrum_is_classical(z6):
    spec = L.spectrum(z6)
    assert len(spec.odd_primes) == 0
    assert sorted(tuple(p.members) for p in spec.even_primes) == [
        (0, 2, 4), (0, 3)]


def test_prime_criteria_agree_on_corpus(corpus):
    for name, rng in corpus:
        for P in L.enumerate_ideals(rng):
            if not P.is_proper:
                continue
            report = L.prime_criteria_report(rng, P)
            assert report.agreement_failures() == [], (name, P.members)


def test_whole_rng_is_not_a_valid_prime_candidate(r4):
    whole = L.enumerate_ideals(r4)[-1]
    assert not whole.is_proper
    with pytest.raises(ValueError):
        L.prime_criteria_report(r4, whole)


def test_nilradical_is_intersection_of_primes(corpus):
    for name, rng in corpus:
        nil = set(L.nilradical(rng).members)
        inter = set(L.intersection_of_primes(rng, L.spectrum(rng).all_primes))
        assert nil == inter, name


def test_radical_of_zero_is_nilradical(r8):
    zero = L.IdealSet.create(r8, (r8.zero,))
    assert L.radical(r8, zero).members == L.nilradical(r8).members


def test_radical_is_intersection_of_containing_primes(r8):
    spec = L.spectrum(r8)
    for I in L.enumerate_ideals(r8):
        if not I.is_proper:
            continue
        rad = set(L.radical(r8, I).members)
        containing = [p for p in spec.all_primes
                      if set(I.members) <= set(p.members)]
        assert rad == set(L.intersection_of_primes(r8, containing))


def test_empty_intersection_is_whole_rng(r4):
    assert set(L.intersection_of_primes(r4, [])) == set(range(r4.order))


def test_parity_labels(r8):
    spec = L.spectrum(r8)
    even = L.prime_criteria_report(r8, spec.even_primes[0])
    odd = L.prime_criteria_report(r8, spec.odd_primes[0])
    assert even.parity == "even" and odd.parity == "odd"
    assert even.quotient_prime is not None and even.halo_domain is None
    assert odd.quotient_prime is None and odd.halo_domain is not None
