"""Cayley-table representation of finite abelian groups.

Elements are indices 0..order-1; the additive structure is an explicit
order x order table, so every group operation is an O(1) lookup.
"""

from __future__ import annotations

from functools import lru_cache

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import StructureError


@dataclass(frozen=True)
class FiniteCarrier:
    """A finite abelian group given by tables.

    coords, when present, maps each element index to a tuple of residues
    (one per cyclic factor) and is used only for display.
    """

    order: int
    add: tuple
    neg: tuple
    zero: int = 0
    coords: Optional[tuple] = None

    def a(self, i: int, j: int) -> int:
        return self.add[i][j]

    def n(self, i: int) -> int:
        return self.neg[i]

    def sub(self, i: int, j: int) -> int:
        return self.add[i][self.neg[j]]

    def label(self, i: int) -> str:
        if self.coords is None:
            return str(i)
        return "(" + ",".join(str(c) for c in self.coords[i]) + ")"

    def index_of_coords(self, tup) -> int:
        if self.coords is None:
            raise StructureError("carrier has no coordinate chart")
        tup = tuple(tup)
        for i, c in enumerate(self.coords):
            if c == tup:
                return i
        raise StructureError(f"no element with coordinates {tup}")


def build_carrier(cyclic_factors: Iterable[int]) -> FiniteCarrier:
    """Direct product of cyclic groups Z/n1 x ... x Z/nk, mixed-radix indexed."""
    factors = list(cyclic_factors)
    if not factors:
        raise StructureError("at least one cyclic factor is required")
    for f in factors:
        if f < 1:
            raise StructureError(f"cyclic factor must be >= 1, got {f}")
    order = math.prod(factors)
    coords = []
    for i in range(order):
        rem, tup = i, []
        for f in reversed(factors):
            tup.append(rem % f)
            rem //= f
        coords.append(tuple(reversed(tup)))
    index = {c: i for i, c in enumerate(coords)}

    def _add(x, y):
        return index[tuple((a + b) % f for a, b, f in zip(coords[x], coords[y], factors))]

    add = tuple(tuple(_add(i, j) for j in range(order)) for i in range(order))
    neg = tuple(index[tuple((-a) % f for a, f in zip(coords[i], factors))]
                for i in range(order))
    return FiniteCarrier(order=order, add=add, neg=neg, zero=0, coords=tuple(coords))


def check_carrier(c: FiniteCarrier) -> None:
    """Full-table scan of the abelian-group axioms; raises StructureError."""
    n = c.order
    if n < 1:
        raise StructureError("order must be positive")
    if len(c.add) != n or any(len(row) != n for row in c.add):
        raise StructureError("add table has wrong shape")
    if len(c.neg) != n:
        raise StructureError("neg table has wrong length")
    if not (0 <= c.zero < n):
        raise StructureError("zero index out of range")
    for row in c.add:
        for v in row:
            if not (0 <= v < n):
                raise StructureError(f"add entry {v} out of range")
    for v in c.neg:
        if not (0 <= v < n):
            raise StructureError(f"neg entry {v} out of range")
    if c.coords is not None:
        if len(c.coords) != n or len(set(c.coords)) != n:
            raise StructureError("coords is not a bijection")
    for i in range(n):
        if c.add[c.zero][i] != i or c.add[i][c.zero] != i:
            raise StructureError(f"zero is not an identity at element {i}")
        if c.add[i][c.neg[i]] != c.zero:
            raise StructureError(f"neg fails at element {i}")
        for j in range(n):
            if c.add[i][j] != c.add[j][i]:
                raise StructureError(f"addition not commutative at ({i},{j})")
            for k in range(n):
                if c.add[c.add[i][j]][k] != c.add[i][c.add[j][k]]:
                    raise StructureError(f"addition not associative at ({i},{j},{k})")


def additive_closure(c: FiniteCarrier, seed: Iterable[int]) -> frozenset:
    """Smallest subgroup of (R,+) containing seed."""
    closed = {c.zero}
    frontier = list(set(seed))
    for s in frontier:
        closed.add(s)
        closed.add(c.neg[s])
    changed = True
    while changed:
        changed = False
        current = list(closed)
        for x in current:
            for y in current:
                s = c.add[x][y]
                if s not in closed:
                    closed.add(s)
                    closed.add(c.neg[s])
                    changed = True
    return frozenset(closed)


@lru_cache(maxsize=None)
def all_subgroups(c: FiniteCarrier) -> list:
    """Every subgroup of (R,+), as sorted frozensets.

    Closures of all generator sets of size <= log2(order): each fresh
    generator at least doubles the subgroup, so this is exhaustive.
    """
    max_gens = max(1, c.order.bit_length() - 1) if c.order > 1 else 0
    found = {frozenset({c.zero})}
    elems = list(range(c.order))
    for k in range(1, max_gens + 1):
        for gens in combinations(elems, k):
            found.add(additive_closure(c, gens))
    return sorted(found, key=lambda s: (len(s), tuple(sorted(s))))


def generator_expressions(c: FiniteCarrier, gens: list) -> list:
    """Coefficient vectors expressing every element as an integer combination
    of gens; BFS order, so each element gets its first-found expression."""
    exprs = {c.zero: (0,) * len(gens)}
    frontier = [c.zero]
    while frontier:
        nxt = []
        for x in frontier:
            vec = exprs[x]
            for i, g in enumerate(gens):
                y = c.add[x][g]
                if y not in exprs:
                    exprs[y] = vec[:i] + (vec[i] + 1,) + vec[i + 1:]
                    nxt.append(y)
        frontier = nxt
    if len(exprs) != c.order:
        raise StructureError("generators do not generate the carrier")
    return [exprs[i] for i in range(c.order)]


def minimal_generators(c: FiniteCarrier, subset: Optional[Iterable[int]] = None) -> list:
    """Greedy generating set for a subgroup (the whole group by default)."""
    target = frozenset(subset) if subset is not None else frozenset(range(c.order))
    gens: list = []
    closed = additive_closure(c, gens)
    for x in sorted(target):
        if x not in closed:
            gens.append(x)
            closed = additive_closure(c, gens)
            if closed == target:
                break
    if closed != target:
        raise StructureError("subset is not a subgroup")
    return gens
