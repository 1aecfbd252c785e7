"""Integral lattices given by Gram matrices.

Covers discriminant groups with their finite quadratic forms, assembly of
overlattices from glue vectors, and primitivity (saturation) checks. Every
computation is exact: Python ints and ``fractions.Fraction``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .abelian import FiniteAbelianGroup
from .normalforms import (
    common_denominator,
    determinant,
    hermite_normal_form,
    smith_invariants,
    smith_normal_form,
    solve_row_combination,
)

RationalVector = tuple[Fraction, ...]


class DegenerateLatticeError(ValueError):
    pass


class GlueError(ValueError):
    """Glue vectors that do not generate an integral overlattice."""


def reduce_mod(x: Fraction, modulus: int) -> Fraction:
    """Representative of ``x`` in the window ``[0, modulus)``."""
    x = Fraction(x)
    return x - modulus * math.floor(x / modulus)


class GramMatrix:
    """Symmetric nondegenerate integer matrix presenting a lattice."""

    __slots__ = ("entries", "_det")

    def __init__(self, entries):
        rows = tuple(tuple(int(v) for v in row) for row in entries)
        r = len(rows)
        if r == 0 or any(len(row) != r for row in rows):
            raise ValueError("Gram matrix must be square with rank >= 1")
        if any(rows[i][j] != rows[j][i] for i in range(r) for j in range(i)):
            raise ValueError("Gram matrix must be symmetric")
        det = determinant(rows)
        if det == 0:
            raise DegenerateLatticeError("Gram matrix is degenerate (det = 0)")
        self.entries = rows
        self._det = det

    @classmethod
    def block_diagonal(cls, *blocks: "GramMatrix | Sequence[Sequence[int]]") -> "GramMatrix":
        mats = [b.entries if isinstance(b, GramMatrix) else tuple(map(tuple, b)) for b in blocks]
        n = sum(len(m) for m in mats)
        out = [[0] * n for _ in range(n)]
        off = 0
        for m in mats:
            for i, row in enumerate(m):
                out[off + i][off : off + len(row)] = row
            off += len(m)
        return cls(out)

    def __add__(self, other: "GramMatrix") -> "GramMatrix":
        """Orthogonal direct sum."""
        return GramMatrix.block_diagonal(self, other)

    def __eq__(self, other):
        return isinstance(other, GramMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"GramMatrix({[list(r) for r in self.entries]})"

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def det(self) -> int:
        return self._det

    def twist(self, n: int) -> "GramMatrix":
        """The lattice L(n): all pairings multiplied by ``n``."""
        return GramMatrix([[n * v for v in row] for row in self.entries])

    def pair(self, x: Sequence, y: Sequence):
        """Bilinear form on coordinate vectors (ints or Fractions)."""
        g = self.entries
        return sum(x[i] * sum(g[i][j] * y[j] for j in range(len(y)) if g[i][j]) for i in range(len(x)) if x[i])

    def norm(self, x: Sequence):
        return self.pair(x, x)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def is_even(gram: GramMatrix | Sequence[Sequence[int]]) -> bool:
    entries = gram.entries if isinstance(gram, GramMatrix) else gram
    return all(int(entries[i][i]) % 2 == 0 for i in range(len(entries)))


@dataclass(frozen=True)
class DiscriminantGroup:
    """Finite group L*/L with its discriminant quadratic form.

    ``orders[i]`` is the order of the cyclic summand generated by
    ``lifts[i]``, a rational coordinate vector (in the basis of the lattice)
    of a dual vector representing that generator. The presentation is a
    direct sum: every element is ``sum(c_i * lifts[i])`` for a unique
    ``c`` modulo ``orders``. Form values live in Q/2Z for even lattices and
    in Q/Z otherwise; ``modulus`` records which.
    """

    gram: GramMatrix
    orders: tuple[int, ...]
    lifts: tuple[RationalVector, ...]
    modulus: int = field(default=2)

    def __post_init__(self):
        if len(self.orders) != len(self.lifts):
            raise ValueError("one lift per cyclic summand")
        for n, g in zip(self.orders, self.lifts):
            if any((n * x).denominator != 1 for x in g):
                raise ValueError(f"lift {g} is not annihilated by {n}")

    @property
    def group(self) -> FiniteAbelianGroup:
        return FiniteAbelianGroup(self.orders)

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return self.group.invariant_factors

    def lift(self, coeffs: Sequence[int]) -> RationalVector:
        r = self.gram.rank
        return tuple(sum((c * g[i] for c, g in zip(coeffs, self.lifts)), Fraction(0)) for i in range(r))

    def value_matrix(self) -> list[list[Fraction]]:
        """Rational matrix ``M[i][j] = <lift_i, lift_j>``."""
        return [[Fraction(self.gram.pair(a, b)) for b in self.lifts] for a in self.lifts]

    def scaled_value_matrix(self) -> tuple[int, list[list[int]]]:
        """``(N, Q)`` with integer ``Q = N * value_matrix()``.

        Then q(c) is ``c Q c^T / N`` and vanishes in Q/2Z iff
        ``c Q c^T == 0 (mod 2N)``; handy for vectorised scans.
        """
        m = self.value_matrix()
        n = common_denominator(v for row in m for v in row)
        return n, [[int(v * n) for v in row] for row in m]

    def q(self, coeffs: Sequence[int]) -> Fraction:
        m = self.value_matrix()
        k = len(coeffs)
        val = sum(coeffs[i] * coeffs[j] * m[i][j] for i in range(k) for j in range(k))
        return reduce_mod(val, self.modulus)

    def b(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        m = self.value_matrix()
        val = sum(x[i] * y[j] * m[i][j] for i in range(len(x)) for j in range(len(y)))
        return reduce_mod(val, 1)

    def q_values(self) -> tuple[Fraction, ...]:
        m = self.value_matrix()
        return tuple(reduce_mod(m[i][i], self.modulus) for i in range(len(m)))

    def q_of_vector(self, x: Sequence) -> Fraction:
        return reduce_mod(Fraction(self.gram.norm(x)), self.modulus)

    def coordinates(self, x: Sequence) -> tuple[int, ...]:
        """Coefficients ``c`` (mod orders) with ``x == sum(c_i lift_i)`` mod L."""
        x = [Fraction(v) for v in x]
        r = self.gram.rank
        if any(Fraction(self.gram.pair(x, e)).denominator != 1 for e in _unit_vectors(r)):
            raise ValueError("vector is not in the dual lattice")
        den = common_denominator([*x, *(v for g in self.lifts for v in g)])
        rows = [[int(v * den) for v in g] for g in self.lifts]
        rows += [[den if i == j else 0 for j in range(r)] for i in range(r)]
        sol = solve_row_combination(rows, [int(v * den) for v in x])
        if sol is None:
            raise ValueError("lifts do not generate the discriminant group")
        return self.group.reduce(sol[: len(self.lifts)])

    def is_isotropic(self, gens: Iterable[Sequence[int]]) -> bool:
        """Whether q vanishes on the subgroup generated by ``gens``."""
        gens = list(gens)
        for i, x in enumerate(gens):
            if self.q(x) != 0:
                return False
            if any(self.b(x, y) != 0 for y in gens[i + 1 :]):
                return False
        return True

    def __add__(self, other: "DiscriminantGroup") -> "DiscriminantGroup":
        """Orthogonal sum, presented factor-wise."""
        r1, r2 = self.gram.rank, other.gram.rank
        zero1, zero2 = (Fraction(0),) * r1, (Fraction(0),) * r2
        lifts = tuple(g + zero2 for g in self.lifts) + tuple(zero1 + g for g in other.lifts)
        return DiscriminantGroup(
            self.gram + other.gram,
            self.orders + other.orders,
            lifts,
            min(self.modulus, other.modulus),
        )


def _unit_vectors(r: int):
    for i in range(r):
        yield [int(i == j) for j in range(r)]


def discriminant_group(gram: GramMatrix) -> DiscriminantGroup:
    """L*/L from the Smith form U G V = D.

    The summand generators are ``V e_i / d_i`` (lattice coordinates) for the
    invariant factors ``d_i >= 2``; they have order exactly ``d_i``.
    """
    if not isinstance(gram, GramMatrix):
        gram = GramMatrix(gram)
    _, d, v = smith_normal_form(gram.entries)
    r = gram.rank
    orders, lifts = [], []
    for i in range(r):
        di = d[i][i]
        if di > 1:
            orders.append(di)
            lifts.append(tuple(Fraction(v[j][i], di) for j in range(r)))
    return DiscriminantGroup(gram, tuple(orders), tuple(lifts), 2 if is_even(gram) else 1)


@dataclass(frozen=True)
class GlueDatum:
    """Rational coordinate vectors (in the basis of a lattice M) of glue elements."""

    generators: tuple[RationalVector, ...] = ()

    @classmethod
    def of(cls, *vectors: Sequence) -> "GlueDatum":
        return cls(tuple(tuple(Fraction(x) for x in v) for v in vectors))


@dataclass(frozen=True)
class Overlattice:
    """Lattice L generated by M and glue vectors.

    ``basis`` holds the rows of a Hermite basis of L in the coordinates of M;
    ``gram`` is the Gram matrix of L in that basis.
    """

    gram: GramMatrix
    basis: tuple[RationalVector, ...]
    index: int
    det: int

    def coordinates(self, x: Sequence) -> tuple[int, ...]:
        """Integer coordinates in ``basis`` of a vector given in M-coordinates."""
        # basis is upper triangular
        x = [Fraction(v) for v in x]
        r = len(x)
        c = [Fraction(0)] * r
        for j in range(r):
            acc = x[j] - sum(c[i] * self.basis[i][j] for i in range(j))
            c[j] = acc / self.basis[j][j]
        if any(v.denominator != 1 for v in c):
            raise ValueError(f"{tuple(x)} is not in the lattice")
        return tuple(int(v) for v in c)


def overlattice(m: GramMatrix, glue: GlueDatum) -> Overlattice:
    """Assemble the lattice generated by M and the glue vectors.

    Raises ``GlueError`` if any glue vector pairs non-integrally with M, with
    another glue vector or with itself.
    """
    r = m.rank
    gens = [tuple(Fraction(x) for x in g) for g in glue.generators]
    for g in gens:
        if len(g) != r:
            raise GlueError(f"glue vector has length {len(g)}, lattice rank is {r}")
        for e in _unit_vectors(r):
            if Fraction(m.pair(g, e)).denominator != 1:
                raise GlueError(f"glue vector {g} is not in the dual lattice")
    for i, g in enumerate(gens):
        for h in gens[i:]:
            if Fraction(m.pair(g, h)).denominator != 1:
                raise GlueError(f"non-integral pairing {m.pair(g, h)} among glue vectors")

    den = common_denominator(v for g in gens for v in g)
    rows = [[den if i == j else 0 for j in range(r)] for i in range(r)]
    rows += [[int(v * den) for v in g] for g in gens]
    h, _, rank = hermite_normal_form(rows)
    if rank != r:
        raise AssertionError("finite-index glue changed the rank")
    h = h[:r]
    hdet = math.prod(h[i][i] for i in range(r))
    index, rem = divmod(den**r, hdet)
    assert rem == 0

    g = m.entries
    hg = [[sum(row[k] * g[k][j] for k in range(r) if row[k]) for j in range(r)] for row in h]
    den2 = den * den
    gram = []
    for a in hg:
        out = []
        for row in h:
            val, rem = divmod(sum(x * y for x, y in zip(a, row)), den2)
            if rem:
                raise GlueError("assembled lattice is not integral")
            out.append(val)
        gram.append(out)
    det, rem = divmod(m.det, index * index)
    assert rem == 0
    basis = tuple(tuple(Fraction(v, den) for v in row) for row in h)
    result = Overlattice(GramMatrix(gram), basis, index, det)
    assert result.gram.det == det
    return result


def overlattice_from_glue(s: GramMatrix, t: GramMatrix, glue: GlueDatum) -> Overlattice:
    """Overlattice of S + T; glue coordinates list S's basis first, then T's."""
    return overlattice(s + t, glue)


def is_saturated(sub_basis: Sequence[Sequence[int]], lattice: GramMatrix | None = None) -> bool:
    """Whether integer coordinate vectors span a primitive sublattice.

    Primitive means the quotient is torsion-free, i.e. every Smith invariant
    of the coordinate matrix equals 1.
    """
    rows = [[int(v) for v in row] for row in sub_basis]
    if not rows:
        return True
    if lattice is not None and any(len(row) != lattice.rank for row in rows):
        raise ValueError("coordinate vectors do not match the lattice rank")
    inv = smith_invariants(rows)
    if len(inv) < len(rows) or 0 in inv:
        raise ValueError("sub-basis vectors are linearly dependent")
    return all(d == 1 for d in inv)
