"""Exit criteria. Each test logs one PASS/FAIL line (shown in the terminal summary)."""

import time
from fractions import Fraction

import pytest

from fmpartners.fmcount import (
    assemble,
    check_assembled,
    count_M_ST,
    enumerate_all,
    enumerate_type_I,
    enumerate_type_II,
    fm_count,
    glue_oracle_count,
    glue_oracle_exhaustive,
)
from fmpartners.lattice import discriminant_group, reduce_mod
from fmpartners.modarith import (
    closed_form_count_2d,
    count_sqrt1_halfrange,
    unit_square_root_count,
    unit_square_roots_bruteforce,
)
from fmpartners.mukai import build_T, is_admissible, t1_vector, t2_vector


@pytest.fixture
def check(acceptance_log):
    def _check(name, failures, elapsed, limit=None):
        ok = not failures and (limit is None or elapsed < limit)
        timing = f"{elapsed:.1f}s" + (f" (limit {limit}s)" if limit else "")
        detail = "" if ok else f" -- {failures[:5]}" if failures else " -- too slow"
        line = f"{'PASS' if ok else 'FAIL'}  {name}  [{timing}]{detail}"
        acceptance_log.append(line)
        print(line)
        assert not failures, failures[:5]
        if limit is not None:
            assert elapsed < limit

    return _check


def test_three_path_agreement(check):
    t0 = time.perf_counter()
    failures = []
    for d in range(18, 3601, 18):
        dp = d // 18
        paths = (fm_count(d), Fraction(count_M_ST(dp), 2), Fraction(glue_oracle_count(dp), 2))
        if len(set(paths)) != 1:
            failures.append((d, paths))
    check("three-path agreement, 18 | d <= 3600", failures, time.perf_counter() - t0, 60)


def test_theorem_table(check):
    t0 = time.perf_counter()
    ratio = {0: Fraction(3, 2), 1: Fraction(1), 2: Fraction(2)}
    failures = [
        dp
        for dp in range(1, 501)
        if Fraction(count_M_ST(dp), unit_square_root_count(4 * dp)) != ratio[dp % 3]
    ]
    check("table: |M_ST| / |(Z_4d'^x)_2| = 3/2, 1, 2 for d' <= 500", failures, time.perf_counter() - t0)


def test_lemma_counts(check):
    t0 = time.perf_counter()
    failures = []
    for dp in range(1, 501):
        u4, u12 = unit_square_root_count(4 * dp), unit_square_root_count(12 * dp)
        got = (len(enumerate_type_I(dp)), *(2 * len(enumerate_type_II(dp, k)) for k in range(3)))
        want = (
            u4 if dp % 3 == 2 else 0,
            u12,
            u4 if dp % 3 == 0 else 0,
            u4 if dp % 3 == 0 else 0,
        )
        if got != want:
            failures.append((dp, got, want))
    check("lemma counts for Type I and Type II k = 0, 1, 2, d' <= 500", failures, time.perf_counter() - t0)


def test_halfrange_lemma(check):
    t0 = time.perf_counter()
    failures = [n for n in range(1, 10**4 + 1) if 2 * count_sqrt1_halfrange(n) != unit_square_root_count(4 * n)]
    check("#{0 <= b < 2n : b^2 = 1 mod 4n} = |(Z_4n^x)_2| / 2, n <= 10^4", failures, time.perf_counter() - t0)


def test_closed_form_for_2d(check):
    t0 = time.perf_counter()
    failures = []
    # the three shapes cover every even d >= 4
    for d in range(4, 10**4 + 1, 2):
        brute = len(unit_square_roots_bruteforce(2 * d))
        if not closed_form_count_2d(d) == unit_square_root_count(2 * d) == brute:
            failures.append(d)
    check("|(Z_2d^x)_2| = 4 / 2^(k+1) / 2^(k+2) vs brute force, even d <= 10^4", failures, time.perf_counter() - t0)


def test_spot_values(check):
    t0 = time.perf_counter()
    expected = {18: 1, 36: 4, 54: 3, 90: 4, 8: 1, 12: 1}
    failures = []
    for d, value in expected.items():
        if fm_count(d) != value:
            failures.append((d, "formula", fm_count(d)))
        if d % 18 == 0 and glue_oracle_count(d // 18) != 2 * value:
            failures.append((d, "oracle", glue_oracle_count(d // 18) / 2))
    check("spot values fm_count(18, 36, 54, 90, 8, 12) = 1, 4, 3, 4, 1, 1", failures, time.perf_counter() - t0)


def test_lattice_engine_soundness(check):
    t0 = time.perf_counter()
    failures = []
    assembled = 0
    for dp in range(1, 51):
        dg = discriminant_group(build_T(dp))
        c1 = dg.coordinates([Fraction(x, 3) for x in t1_vector()[1:]])
        c2 = dg.coordinates([Fraction(x, 6 * dp) for x in t2_vector()[1:]])
        if (
            dg.orders != (3, 6 * dp)
            or dg.group.subgroup_order([c1, c2]) != 18 * dp
            or dg.q(c1) != reduce_mod(Fraction(-2, 3), 2)
            or dg.q(c2) != reduce_mod(Fraction(1, 6 * dp), 2)
            or dg.b(c1, c2) != 0
        ):
            failures.append((dp, "T*/T"))
        for desc in enumerate_all(dp):
            problems = check_assembled(desc)
            assembled += 1
            if problems:
                failures.append((desc.label(), dp, problems))
    assert assembled > 0 and assemble(enumerate_all(1)[0]).gram.rank == 22
    check(
        f"lattice engine: T*/T = Z_3 + Z_6d' with q = (-2/3, 1/6d'); {assembled} overlattices even, rank 22, "
        "|det| = 3, S and T saturated (d' <= 50)",
        failures,
        time.perf_counter() - t0,
        300,
    )


def test_oracle_reduction(check):
    t0 = time.perf_counter()
    failures = [dp for dp in range(1, 11) if glue_oracle_exhaustive(dp) != glue_oracle_count(dp)]
    check("exhaustive subgroup oracle = graph-subgroup oracle, d' <= 10", failures, time.perf_counter() - t0)


def is_power_of_two(n):
    return n > 0 and n & (n - 1) == 0


def test_structural_claim(check):
    t0 = time.perf_counter()
    failures = []
    for d in range(18, 10**5 + 1, 9):
        if not is_admissible(d):
            continue
        fm = fm_count(d)
        if d % 27:
            if not is_power_of_two(fm):
                failures.append(d)
        elif fm % 3 or not is_power_of_two(fm // 3):
            failures.append(d)
    check("9 | d: |FM| = 2^n (27 does not divide d) or 3 * 2^n (27 | d), d <= 10^5", failures, time.perf_counter() - t0, 10)
