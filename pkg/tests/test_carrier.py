import pytest

from lcrng import StructureError, build_carrier, check_carrier
from lcrng.carrier import (all_subgroups, FiniteCarrier, generator_expressions,
                           minimal_generators)


def test_cyclic_carrier_tables():
    c = build_carrier([4])
    assert c.order == 4
    assert c.a(3, 2) == 1
    assert c.n(1) == 3
    assert c.zero == 0
    check_carrier(c)


def test_mixed_radix_coords():
    c = build_carrier([4, 2])
    assert c.order == 8
    assert c.coords[5] == (2, 1)
    assert c.index_of_coords((2, 1)) == 5
    assert c.a(c.index_of_coords((3, 1)), c.index_of_coords((1, 1))) == 0


def test_check_carrier_rejects_non_group():
    c = build_carrier([3])
    broken = FiniteCarrier(order=3, add=((0, 1, 2), (1, 1, 1), (2, 1, 0)),
                           neg=c.neg, zero=0, coords=None)
    with pytest.raises(StructureError):
        check_carrier(broken)


def test_subgroups_of_klein_group():
    c = build_carrier([2, 2])
    subs = all_subgroups(c)
    # trivial, three order-2, whole group
    assert sorted(len(s) for s in subs) == [1, 2, 2, 2, 4]


def test_subgroups_of_z4():
    c = build_carrier([4])
    assert sorted(tuple(sorted(s)) for s in all_subgroups(c)) == [
        (0,), (0, 1, 2, 3), (0, 2)]


def test_minimal_generators_and_expressions():
    c = build_carrier([4, 2])
    gens = minimal_generators(c)
    exprs = generator_expressions(c, gens)
    for x in range(c.order):
        acc = c.zero
        for coeff, g in zip(exprs[x], gens):
            for _ in range(coeff):
                acc = c.a(acc, g)
        assert acc == x


def test_minimal_generators_on_subgroup():
    c = build_carrier([4])
    gens = minimal_generators(c, [0, 2])
    assert gens == [2]
