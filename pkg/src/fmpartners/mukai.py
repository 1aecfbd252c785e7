"""Lattices attached to a very general special cubic fourfold with 18 | d.

Conventions: ``S = <l>`` with ``l^2 = -6d'``, and T is modelled as

    E8(-1) + E8(-1) + U + A2(-1) + <6d'>

(rank 21). In the orthogonal sum S + T the coordinates are ordered
``[l, T...]``, so ``l`` is index 0, the A2(-1) block sits at 19-20 and the
``<6d'>`` generator ``t2`` at index 21. ``t1 = a - b`` for the A2(-1) basis
``a, b`` satisfies ``t1^2 = -6`` and ``t1 / 3`` generates A2(-1)*/A2(-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import DiscriminantGroup, GramMatrix

# Bourbaki labelling: 1-3-4-5-6-7-8 with 2 attached to 4.
_E8_EDGES = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
E8 = GramMatrix(
    [
        [2 if i == j else (-1 if (i + 1, j + 1) in _E8_EDGES or (j + 1, i + 1) in _E8_EDGES else 0) for j in range(8)]
        for i in range(8)
    ]
)
U = GramMatrix([[0, 1], [1, 0]])
A2 = GramMatrix([[2, -1], [-1, 2]])

T_RANK = 21
ST_RANK = 22
ELL = 0
A2_BLOCK = (19, 20)
T2 = 21


class AdmissibilityError(ValueError):
    pass


def is_admissible(d: int) -> bool:
    """C_d is nonempty iff d >= 8 and d == 0, 2 (mod 6)."""
    return d >= 8 and d % 6 in (0, 2)


@dataclass(frozen=True)
class SpecialDiscriminant:
    d: int

    def __post_init__(self):
        if not is_admissible(self.d):
            raise AdmissibilityError(f"d={self.d} is not admissible: need d >= 8 and d == 0 or 2 (mod 6)")

    @property
    def d_prime(self) -> int | None:
        return self.d // 18 if self.d % 9 == 0 else None


def _check(d_prime: int) -> None:
    if d_prime < 1:
        raise ValueError(f"d' must be positive, got {d_prime}")


def build_H22(d_prime: int) -> GramMatrix:
    """Algebraic middle cohomology lattice: diag(3, 6d'), det = d."""
    _check(d_prime)
    return GramMatrix([[3, 0], [0, 6 * d_prime]])


def build_S(d_prime: int) -> GramMatrix:
    _check(d_prime)
    return GramMatrix([[-6 * d_prime]])


def build_N(d_prime: int) -> GramMatrix:
    _check(d_prime)
    return GramMatrix.block_diagonal(A2, [[-6 * d_prime]])


def build_T(d_prime: int) -> GramMatrix:
    _check(d_prime)
    e8m = E8.twist(-1)
    return GramMatrix.block_diagonal(e8m, e8m, U, A2.twist(-1), [[6 * d_prime]])


def build_ST(d_prime: int) -> GramMatrix:
    return build_S(d_prime) + build_T(d_prime)


def ell_vector() -> tuple[int, ...]:
    return tuple(int(i == ELL) for i in range(ST_RANK))


def t1_vector() -> tuple[int, ...]:
    """``t1 = a - b`` in the A2(-1) block, in S + T coordinates."""
    v = [0] * ST_RANK
    v[A2_BLOCK[0]], v[A2_BLOCK[1]] = 1, -1
    return tuple(v)


def t2_vector() -> tuple[int, ...]:
    return tuple(int(i == T2) for i in range(ST_RANK))


def glue_vector(d_prime: int, c_ell, c_t1, c_t2) -> tuple[Fraction, ...]:
    """``c_ell * l + c_t1 * t1 + c_t2 * t2`` as a rational S + T vector."""
    parts = zip(ell_vector(), t1_vector(), t2_vector())
    return tuple(Fraction(c_ell) * a + Fraction(c_t1) * b + Fraction(c_t2) * c for a, b, c in parts)


def disc_form_ST(d_prime: int) -> DiscriminantGroup:
    """A_S + A_T = Z_6d' + Z_3 + Z_6d' generated by l/6d', t1/3, t2/6d'.

    Written down directly rather than via Smith form; the q-values on the
    three generators are -1/6d', -2/3 and 1/6d'.
    """
    _check(d_prime)
    n = 6 * d_prime
    lifts = (
        glue_vector(d_prime, Fraction(1, n), 0, 0),
        glue_vector(d_prime, 0, Fraction(1, 3), 0),
        glue_vector(d_prime, 0, 0, Fraction(1, n)),
    )
    return DiscriminantGroup(build_ST(d_prime), (n, 3, n), lifts, 2)
