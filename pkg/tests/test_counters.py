from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bruteforce import brute_count
from verlinde import LieType, build_root_system, completion_profile, count, decompose_level
from verlinde.counters import (
    count_a,
    count_b,
    count_c,
    count_d,
    count_e6,
    count_e7,
    count_e8,
    count_f4,
    count_g2,
)


def test_decompose_level():
    d = decompose_level(6, 2)
    assert (d.prime, d.exponent, d.cofactor) == (2, 1, 3)
    d = decompose_level(6, 3, n_plus_1=3)
    assert (d.exponent, d.cofactor, d.dim_exponent, d.dim_cofactor) == (1, 2, 1, 1)
    d = decompose_level(9, 2)
    assert (d.exponent, d.cofactor) == (0, 9)
    with pytest.raises(ValueError):
        decompose_level(0, 2)


def test_count_a_fixtures():
    assert count_a(1, 6, 3) == 1
    assert count_a(1, 6, 2) == 1
    assert count_a(2, 3, 2) == 0
    assert count_a(2, 3, 3) == 1
    assert count_a(2, 4, 2) == 1


def test_count_b_fixtures():
    assert count_b(2, 4, 2) == 3
    assert count_b(2, 3, 3) == 0
    assert count_b(2, 1, 2) == 0
    assert count_b(3, 8, 2) == 13  # frozen from the brute-force scan
    assert count_b(2, 5, 5) == 1


def test_count_c_closed_forms():
    assert count_c(2, 4, 2) == comb(3, 2) == 3
    assert count_c(2, 9, 3) == comb(4, 2) == 6
    assert count_c(3, 2, 2) == comb(1, 3) == 0
    for n in range(2, 6):
        for p in (2, 3, 5):
            for i in range(5):
                expected = comb(2**i - 1, n) if p == 2 else comb((p**i - 1) // 2, n)
                assert count_c(n, p**i, p) == expected


def test_count_d_fixtures():
    assert count_d(3, 4, 2) == 1  # frozen from the brute-force scan
    assert count_d(3, 1, 2) == 0
    assert count_d(3, 4, 3) == 0
    assert count_d(4, 9, 3) == 6  # frozen from the brute-force scan
    assert count_d(4, 8, 2) == 11  # frozen from the brute-force scan


def test_count_g2_fixtures():
    assert count_g2(3, 3) == 0
    assert count_g2(6, 3) == 0
    assert count_g2(1, 2) == 0
    assert count_g2(9, 3) == 12  # frozen from the brute-force scan
    assert count_g2(12, 2) == 0


def test_count_f4_fixtures():
    for m in range(1, 6):
        assert count_f4(m, 2) == 0
    assert count_f4(1, 3) == 0
    assert count_f4(8, 2) == 0  # smallest feasible tuple already violates the p-power bound
    assert count_f4(16, 2) == 56  # frozen from the brute-force scan


def test_count_e_series_below_threshold():
    for m in range(1, 30):
        for p in (2, 3, 5):
            assert count_e8(m, p) == 0
    for m in range(1, 18):
        for p in (2, 3):
            assert count_e7(m, p) == 0
    for m in range(1, 12):
        for p in (2, 3):
            assert count_e6(m, p) == 0


def test_count_e_series_first_nonzero():
    # values pinned by the alcove oracle at the first levels past the threshold
    assert count_e8(31, 31) == 1
    assert count_e8(32, 2) == 3
    assert count_e7(19, 19) == 1
    assert count_e6(13, 13) == 1
    assert count_e6(13, 13, reading="alternate") == 3  # the rejected reading overcounts


def test_dispatcher():
    assert count(LieType("C", 2), 4, 2) == 3
    assert count(LieType("A", 1), 4, 2) == 3
    assert count(LieType("B", 2), 1, 2) == 0
    with pytest.raises(ValueError):
        count(LieType("A", 1), 4, 2, reading="bogus")


CLASSICAL_GRID = [
    (s, r, m, p)
    for s, rmin, rmax in (("A", 1, 4), ("B", 2, 4), ("C", 2, 4), ("D", 3, 4))
    for r in range(rmin, rmax + 1)
    for m in (2, 3, 4, 6, 8, 9)
    for p in (2, 3)
]


@pytest.mark.parametrize("series,rank,m,p", CLASSICAL_GRID,
                         ids=lambda v: str(v) if not isinstance(v, tuple) else None)
def test_counters_match_brute_force_classical(series, rank, m, p):
    assert count(LieType(series, rank), m, p) == brute_count(series, rank, m, p)


@pytest.mark.parametrize("series,rank,m,p", [
    ("G", 2, 4, 2), ("G", 2, 8, 2), ("G", 2, 9, 3), ("G", 2, 12, 3),
    ("F", 4, 8, 2), ("F", 4, 9, 3), ("F", 4, 16, 2),
    ("E", 6, 4, 2), ("E", 6, 9, 3), ("E", 7, 4, 2), ("E", 7, 9, 3), ("E", 8, 4, 2),
])
def test_counters_match_brute_force_exceptional(series, rank, m, p):
    assert count(LieType(series, rank), m, p) == brute_count(series, rank, m, p)


def test_e6_alternate_matches_its_own_brute_force():
    assert count_e6(9, 3, reading="alternate") == brute_count("E", 6, 9, 3, reading="alternate")
    assert count_e6(4, 2, reading="alternate") == brute_count("E", 6, 4, 2, reading="alternate")


@given(
    case=st.sampled_from([("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3),
                          ("C", 2), ("C", 3), ("D", 3), ("D", 4), ("G", 2), ("F", 4),
                          ("E", 6), ("E", 7), ("E", 8)]),
    m=st.integers(min_value=1, max_value=40),
    p=st.sampled_from([2, 3, 5, 7, 11, 13]),
)
@settings(max_examples=150, deadline=None)
def test_zero_whenever_p_does_not_divide_m(case, m, p):
    if m % p != 0:
        assert count(LieType(*case), m, p) == 0


@given(
    case=st.sampled_from([("A", 2), ("B", 2), ("C", 3), ("D", 3), ("G", 2)]),
    m=st.integers(min_value=1, max_value=9),
    p=st.sampled_from([2, 3]),
)
@settings(max_examples=60, deadline=None)
def test_counters_match_brute_force_random(case, m, p):
    series, rank = case
    assert count(LieType(series, rank), m, p) == brute_count(series, rank, m, p)


@pytest.mark.parametrize("lie_type,m", [
    (LieType("A", 3), 8), (LieType("B", 3), 8), (LieType("C", 3), 9),
    (LieType("D", 4), 8), (LieType("G", 2), 9), (LieType("F", 4), 12),
])
def test_counters_match_oracle(lie_type, m):
    rs = build_root_system(lie_type)
    profile = completion_profile(rs, m)
    for p in (2, 3, 5):
        assert count(lie_type, m, p) == profile.counts.get(p, 0)
