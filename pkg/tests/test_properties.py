"""Property-based spot checks on randomly chosen elements and ideals."""

from hypothesis import given, settings, strategies as st

import lcrng as L

Z4 = L.ring_as_lcr(L.ring_zmod(4))
_z2 = L.ring_zmod(2)
_z4 = L.ring_zmod(4)
R8 = L.halo_extension(_z4, _z2, L.reduction_hom(_z4, _z2))

elements = st.integers(min_value=0, max_value=R8.order - 1)


@given(x=elements, y=elements, z=elements)
def test_left_commutativity(x, y, z):
    assert R8.mul[R8.mul[x][y]][z] == R8.mul[R8.mul[y][x]][z]


@given(x=elements, y=elements, z=elements)
def test_distributivity(x, y, z):
    c = R8.carrier
    assert R8.mul[x][c.add[y][z]] == c.add[R8.mul[x][y]][R8.mul[x][z]]
    assert R8.mul[c.add[y][z]][x] == c.add[R8.mul[y][x]][R8.mul[z][x]]


@given(x=elements)
def test_decomposition_is_idempotent(x):
    x0 = R8.mul[x][R8.left_identity]
    assert R8.mul[x0][R8.left_identity] == x0
    x1 = R8.carrier.sub(x, x0)
    assert x1 in R8.halo


@given(x=elements, m=st.integers(min_value=1, max_value=6),
       k=st.integers(min_value=1, max_value=6))
def test_power_additivity(x, m, k):
    assert L.power(R8, x, m + k) == R8.mul[L.power(R8, x, m)][L.power(R8, x, k)]


@given(gens=st.lists(elements, min_size=0, max_size=3))
@settings(max_examples=40, deadline=None)
def test_generated_ideal_is_smallest(gens):
    I = L.ideal_generated(R8, gens)
    assert L.is_ideal(R8, I.members)
    for J in L.enumerate_ideals(R8):
        if set(gens) <= set(J.members):
            assert set(I.members) <= set(J.members)


@given(gens=st.lists(elements, min_size=0, max_size=3))
@settings(max_examples=25, deadline=None)
def test_radical_contains_ideal_and_is_idempotent(gens):
    I = L.ideal_generated(R8, gens)
    rad = L.radical(R8, I)
    assert set(I.members) <= set(rad.members)
    assert set(L.radical(R8, rad).members) == set(rad.members)


@given(x=st.integers(min_value=0, max_value=3),
       y=st.integers(min_value=0, max_value=3))
def test_zero_halo_rng_is_plain_ring(x, y):
    assert Z4.mul[x][y] == Z4.mul[y][x]
    assert Z4.halo == (0,)
