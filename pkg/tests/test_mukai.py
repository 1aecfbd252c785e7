from fractions import Fraction

import pytest

from fmpartners.lattice import GramMatrix, discriminant_group, is_even, reduce_mod
from fmpartners.mukai import (
    A2,
    E8,
    U,
    AdmissibilityError,
    SpecialDiscriminant,
    build_H22,
    build_N,
    build_S,
    build_ST,
    build_T,
    disc_form_ST,
    glue_vector,
    t1_vector,
    t2_vector,
)
from fmpartners.normalforms import smith_invariants


def test_constants():
    assert E8.det == 1 and is_even(E8) and E8.rank == 8
    assert U.det == -1 and A2.det == 3
    assert E8.twist(-1).det == 1


@pytest.mark.parametrize("dp,expected", [(1, [[-6]]), (3, [[-18]])])
def test_build_S(dp, expected):
    assert build_S(dp).tolist() == expected


def test_build_S_discriminant():
    assert discriminant_group(build_S(5)).orders == (30,)


def test_build_N():
    n1 = build_N(1)
    assert n1.det == -18
    assert discriminant_group(n1).orders == (3, 6)
    for dp in (1, 2, 7):
        n = build_N(dp)
        assert [row[:2] for row in n.tolist()[:2]] == A2.tolist()
        assert n.tolist()[0][2] == n.tolist()[1][2] == 0
        assert n.det == -18 * dp
    assert [build_N(2).entries[i][i] for i in range(3)] == [2, 2, -12] and is_even(build_N(2))


@pytest.mark.parametrize("dp", [1, 2, 3, 6, 11])
def test_build_H22(dp):
    assert build_H22(dp).det == 18 * dp


@pytest.mark.parametrize("dp", [1, 2, 5, 9])
def test_build_T_shape(dp):
    t = build_T(dp)
    assert t.rank == 21 and is_even(t) and abs(t.det) == 18 * dp


def test_build_T_invariants():
    assert discriminant_group(build_T(4)).orders == (3, 24)
    dg = discriminant_group(build_T(1))
    assert dg.orders == (3, 6)


def test_t_vectors():
    st = build_ST(4)
    assert st.norm(t1_vector()) == -6
    assert st.norm(t2_vector()) == 24
    assert st.pair(t1_vector(), t2_vector()) == 0


def test_paper_embedding_in_three_hyperbolic_planes():
    """The explicit U^3 model: N and its complement are the stated lattices."""
    u3 = U + U + U
    e = lambda i: tuple(int(j == 2 * (i - 1)) for j in range(6))
    f = lambda i: tuple(int(j == 2 * (i - 1) + 1) for j in range(6))
    comb = lambda *terms: tuple(sum(c * v[j] for c, v in terms) for j in range(6))
    for dp in (1, 2, 3, 10):
        lam1 = comb((1, e(1)), (1, f(1)))
        lam2 = comb((1, e(2)), (1, f(2)), (-1, e(1)))
        ell = comb((1, e(3)), (-3 * dp, f(3)))
        gram_n = [[u3.pair(x, y) for y in (lam1, lam2, ell)] for x in (lam1, lam2, ell)]
        assert gram_n == build_N(dp).tolist()
        a = comb((1, e(1)), (-1, f(1)), (-1, e(2)))
        b = comb((1, e(2)), (-1, f(2)))
        t2 = comb((1, e(3)), (3 * dp, f(3)))
        for x in (a, b, t2):
            assert all(u3.pair(x, y) == 0 for y in (lam1, lam2, ell))
        gram_c = [[u3.pair(x, y) for y in (a, b, t2)] for x in (a, b, t2)]
        assert gram_c == GramMatrix.block_diagonal(A2.twist(-1), [[6 * dp]]).tolist()
        t1 = comb((1, e(1)), (-1, f(1)), (-2, e(2)), (1, f(2)))
        assert t1 == comb((1, a), (-1, b))
        assert u3.norm(t1) == -6 and u3.norm(t2) == 6 * dp and u3.pair(t1, t2) == 0


def test_T_discriminant_matches_lemma():
    for dp in (1, 2, 3, 7, 12):
        dg = discriminant_group(build_T(dp))
        assert dg.orders == (3, 6 * dp)
        # t1/3 and t2/6d' as vectors in T's own coordinates
        g1 = tuple(Fraction(x, 3) for x in t1_vector()[1:])
        g2 = tuple(Fraction(x, 6 * dp) for x in t2_vector()[1:])
        c1, c2 = dg.coordinates(g1), dg.coordinates(g2)
        assert dg.group.subgroup_order([c1, c2]) == 18 * dp
        assert dg.q(c1) == Fraction(4, 3)
        assert dg.q(c2) == reduce_mod(Fraction(1, 6 * dp), 2)
        assert dg.b(c1, c2) == 0


def test_disc_form_ST_closed_form():
    f = disc_form_ST(1)
    assert f.orders == (6, 3, 6)
    assert f.q_values() == tuple(reduce_mod(Fraction(x), 2) for x in (Fraction(-1, 6), Fraction(-2, 3), Fraction(1, 6)))
    assert disc_form_ST(3).orders == (18, 3, 18)


def test_disc_form_ST_agrees_with_snf():
    for dp in range(1, 21):
        closed = disc_form_ST(dp)
        snf = discriminant_group(build_ST(dp))
        assert snf.invariant_factors == closed.invariant_factors
        coords = [snf.coordinates(lift) for lift in closed.lifts]
        assert snf.group.subgroup_order(coords) == closed.order
        for i, ci in enumerate(coords):
            for j, cj in enumerate(coords):
                if i == j:
                    assert snf.q(ci) == closed.q_values()[i]
                else:
                    assert snf.b(ci, cj) == 0


def test_glue_vector_layout():
    v = glue_vector(2, Fraction(1, 12), Fraction(1, 3), Fraction(1, 12))
    assert v[0] == Fraction(1, 12) and v[19] == Fraction(1, 3) and v[20] == Fraction(-1, 3) and v[21] == Fraction(1, 12)
    assert sum(1 for x in v if x) == 4


def test_special_discriminant():
    assert SpecialDiscriminant(54).d_prime == 3
    assert SpecialDiscriminant(20).d_prime is None
    for bad in (6, 10, 13, 2):
        with pytest.raises(AdmissibilityError):
            SpecialDiscriminant(bad)


@pytest.mark.parametrize("builder", [build_S, build_N, build_T, build_H22, disc_form_ST])
def test_builders_reject_nonpositive(builder):
    with pytest.raises(ValueError):
        builder(0)
