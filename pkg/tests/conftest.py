"""Shared fixtures: the reference corpus of small rngs."""

import pytest

import lcrng as L

FIXTURES = "tests/fixtures"


@pytest.fixture(scope="session")
def z2_ring():
    return L.ring_zmod(2)


@pytest.fixture(scope="session")
def z4_ring():
    return L.ring_zmod(4)


@pytest.fixture(scope="session")
def order1(z2_ring):
    return L.ring_as_lcr(L.ring_zmod(1))


@pytest.fixture(scope="session")
def z2(z2_ring):
    return L.ring_as_lcr(z2_ring)


@pytest.fixture(scope="session")
def z4(z4_ring):
    return L.ring_as_lcr(z4_ring)


@pytest.fixture(scope="session")
def z6():
    return L.ring_as_lcr(L.ring_zmod(6))


@pytest.fixture(scope="session")
def r4(z2_ring):
    ident = L.RingHom(domain=z2_ring, codomain=z2_ring, image=(0, 1))
    return L.halo_extension(z2_ring, z2_ring, ident)


@pytest.fixture(scope="session")
def r8(z4_ring, z2_ring):
    return L.halo_extension(z4_ring, z2_ring, L.reduction_hom(z4_ring, z2_ring))


@pytest.fixture(scope="session")
def e8(z2_ring):
    z2x2 = L.ring_zmod_product([2, 2])
    diagonal = L.RingHom(domain=z2_ring, codomain=z2x2, image=(0, 3))
    return L.halo_extension(z2_ring, z2x2, diagonal)


@pytest.fixture(scope="session")
def search_classes():
    out = []
    for factors in ([1], [2], [3], [4], [2, 2]):
        out.extend(L.small_rng_search(L.build_carrier(factors)))
    return out


@pytest.fixture(scope="session")
def corpus(order1, z2, z4, z6, r4, r8, e8, search_classes):
    named = [("order1", order1), ("Z2", z2), ("Z4", z4), ("Z6", z6),
             ("R4", r4), ("R8", r8), ("E8", e8)]
    named += [(f"search{i}", rng) for i, rng in enumerate(search_classes)]
    return named
