"""Finite abelian groups Z_n1 + ... + Z_nm and their subgroups.

A subgroup H is handled through its preimage lattice in Z^m, which contains
diag(n1, ..., nm) Z^m. The Hermite normal form of that lattice is a
canonical name for H, and enumerating such lattices enumerates subgroups.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .normalforms import hermite_normal_form, smith_invariants

Element = tuple[int, ...]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    orders: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(n) for n in self.orders))
        if any(n < 1 for n in self.orders):
            raise ValueError(f"cyclic orders must be positive: {self.orders}")

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        if not self.orders:
            return ()
        diag = [[n if i == j else 0 for j in range(self.rank)] for i, n in enumerate(self.orders)]
        return tuple(d for d in smith_invariants(diag) if d > 1)

    def reduce(self, x: Iterable[int]) -> Element:
        return tuple(int(v) % n for v, n in zip(x, self.orders, strict=True))

    def add(self, x, y) -> Element:
        return self.reduce(a + b for a, b in zip(x, y))

    def scale(self, c: int, x) -> Element:
        return self.reduce(c * a for a in x)

    def element_order(self, x) -> int:
        return math.lcm(*(n // math.gcd(int(v), n) for v, n in zip(x, self.orders))) if self.orders else 1

    def elements(self) -> Iterator[Element]:
        return itertools.product(*(range(n) for n in self.orders))

    def _preimage_hnf(self, gens: Sequence[Sequence[int]]) -> list[list[int]]:
        m = self.rank
        rows = [list(self.reduce(g)) for g in gens]
        rows += [[n if i == j else 0 for j in range(m)] for i, n in enumerate(self.orders)]
        h, _, rank = hermite_normal_form(rows)
        assert rank == m
        return h[:m]

    def canonical_subgroup(self, gens: Sequence[Sequence[int]]) -> tuple[Element, ...]:
        """Canonical generators of <gens>: rows of the preimage HNF mod orders.

        Two generating sets give the same tuple iff they generate the same
        subgroup.
        """
        return tuple(tuple(row) for row in self._preimage_hnf(gens))

    def subgroup_order(self, gens: Sequence[Sequence[int]]) -> int:
        h = self._preimage_hnf(gens)
        return self.order // math.prod(h[i][i] for i in range(self.rank))

    def intersection_order(self, gens_a, gens_b) -> int:
        """|<gens_a> ∩ <gens_b>| = |A| |B| / |A + B|."""
        a = self.subgroup_order(gens_a)
        b = self.subgroup_order(gens_b)
        return a * b // self.subgroup_order(list(gens_a) + list(gens_b))

    def contains(self, gens, x) -> bool:
        return self.canonical_subgroup(list(gens) + [x]) == self.canonical_subgroup(gens)

    def subgroups(self, order: int | None = None) -> Iterator[tuple[Element, ...]]:
        """Enumerate every subgroup (optionally only those of a given order).

        Each subgroup is yielded once, as its canonical generator tuple. The
        preimage lattice is built from the last HNF row upwards; a row is kept
        only if it leaves ``n_i e_i`` inside the partial lattice, which prunes
        almost all candidates.
        """
        m = self.rank
        ns = self.orders
        if order is not None and self.order % order:
            return
        index = None if order is None else self.order // order

        def member(rows: list[list[int]], start: int, x: list[int]) -> bool:
            # rows[i] has pivot at column start + i (upper triangular)
            x = list(x)
            for i, row in enumerate(rows):
                col = start + i
                q, r = divmod(x[col], row[col])
                if r:
                    return False
                if q:
                    x = [a - q * b for a, b in zip(x, row)]
            return not any(x)

        def build(i: int, rows: list[list[int]], remaining: int | None):
            if i < 0:
                if remaining in (None, 1):
                    yield tuple(tuple(r) for r in rows)
                return
            for diag in _divisors(ns[i]):
                if remaining is not None and remaining % diag:
                    continue
                if remaining is not None and i == 0 and diag != remaining:
                    continue
                for tail in _offdiag_choices(rows, i, m):
                    row = [0] * i + [diag] + list(tail)
                    new_rows = [row] + rows
                    target = [0] * m
                    target[i] = ns[i]
                    if member(new_rows, i, target):
                        yield from build(
                            i - 1, new_rows, None if remaining is None else remaining // diag
                        )

        yield from build(m - 1, [], index)


def _offdiag_choices(rows: list[list[int]], i: int, m: int):
    ranges = [range(rows[j - i - 1][j]) for j in range(i + 1, m)]
    return itertools.product(*ranges)


def _divisors(n: int) -> list[int]:
    small = [k for k in range(1, math.isqrt(n) + 1) if n % k == 0]
    return sorted(set(small + [n // k for k in small]))
