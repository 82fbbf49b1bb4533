import pytest

import lcrng as L


def test_halo_extension_shape(r4):
    assert r4.order == 4
    assert sorted(r4.halo) == [0, 1]
    assert r4.label(r4.left_identity) == "(1,0)"


def test_halo_extension_quotient_recovers_base(r8, z4_ring):
    ring, _coset = L.quotient_ring_by_halo(r8)
    # the even quotient of Z4 (+) Z2 is Z4 again
    iso = L.find_isomorphism(L.ring_as_lcr(ring), L.ring_as_lcr(z4_ring))
    assert iso is not None


def test_halo_extension_rejects_non_hom(z2_ring, z4_ring):
    not_hom = L.RingHom(domain=z4_ring, codomain=z2_ring, image=(0, 0, 0, 0))
    with pytest.raises(L.StructureError):
        L.halo_extension(z4_ring, z2_ring, not_hom)


def test_ring_as_lcr_has_zero_halo(z6):
    assert list(z6.halo) == [z6.zero]
    assert z6.local_identity == z6.zero


def test_search_order_one_through_four():
    counts = {}
    for factors in ([1], [2], [3], [4], [2, 2]):
        counts[tuple(factors)] = len(L.small_rng_search(L.build_carrier(factors)))
    assert counts[(1,)] == 1
    assert counts[(2,)] == 1
    assert counts[(3,)] == 1
    assert counts[(4,)] == 1
    # Klein carrier: Z2 x Z2, F4, Z2[x]/(x^2), and the extension with 2-element halo
    assert counts[(2, 2)] == 4


def test_search_results_pass_verification_and_are_non_isomorphic():
    results = L.small_rng_search(L.build_carrier([2, 2]))
    for rng in results:
        assert L.verify_lcr(rng).all_passed
    for i, a in enumerate(results):
        for b in results[i + 1:]:
            assert L.find_isomorphism(a, b) is None


def test_search_finds_the_halo_extension(r4):
    results = L.small_rng_search(L.build_carrier([2, 2]))
    assert any(L.find_isomorphism(rng, r4) for rng in results)


def test_search_respects_max_results():
    results = L.small_rng_search(L.build_carrier([2, 2]), max_results=2)
    assert len(results) == 2


def test_search_rejects_oversized_carriers():
    with pytest.raises(L.StructureError):
        L.small_rng_search(L.build_carrier([16]))
