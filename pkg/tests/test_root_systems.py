import dataclasses
from fractions import Fraction
from math import lcm

import pytest

from verlinde import LieType, all_types, build_root_system, inner_product, theta_level, validate

ALL_TYPES = all_types(max_classical_rank=6)


@pytest.mark.parametrize("lie_type", ALL_TYPES, ids=str)
def test_every_type_validates(lie_type):
    report = validate(build_root_system(lie_type))
    assert report.ok, report.failures


@pytest.mark.parametrize("lie_type", ALL_TYPES, ids=str)
def test_weights_dual_to_coroots(lie_type):
    # <omega_i, alpha_j> = delta_ij * d_j with alpha_j read off the Cartan column
    rs = build_root_system(lie_type)
    n = rs.rank
    for i in range(n):
        omega = tuple(int(k == i) for k in range(n))
        for j in range(n):
            alpha = tuple(rs.cartan[k][j] for k in range(n))
            expected = rs.symmetrizers[j] if i == j else 0
            assert inner_product(rs, omega, alpha) == expected


@pytest.mark.parametrize("lie_type", ALL_TYPES, ids=str)
def test_highest_root_is_long_and_integral(lie_type):
    rs = build_root_system(lie_type)
    assert inner_product(rs, rs.highest_root, rs.highest_root) == 2
    for i in range(rs.rank):
        omega = tuple(int(k == i) for k in range(rs.rank))
        t = inner_product(rs, rs.highest_root, omega)
        assert t.denominator == 1 and t > 0
    assert theta_level(rs, rs.rho) == rs.coxeter_number - 1


@pytest.mark.parametrize("lie_type", ALL_TYPES, ids=str)
def test_gram_denominators_bounded(lie_type):
    rs = build_root_system(lie_type)
    bound = rs.connection_index * lcm(*(d.denominator for d in rs.symmetrizers))
    assert bound % rs.gram_denominator == 0


def test_known_grams():
    a1 = build_root_system(LieType("A", 1))
    assert a1.gram == ((Fraction(1, 2),),)
    a2 = build_root_system(LieType("A", 2))
    assert a2.gram == (
        (Fraction(2, 3), Fraction(1, 3)),
        (Fraction(1, 3), Fraction(2, 3)),
    )
    e8 = build_root_system(LieType("E", 8))
    assert all(x.denominator == 1 for row in e8.gram for x in row)
    assert e8.connection_index == 1


def test_c2_highest_root():
    rs = build_root_system(LieType("C", 2))
    assert inner_product(rs, rs.highest_root, rs.highest_root) == 2
    assert inner_product(rs, rs.highest_root, (1, 0)).denominator == 1


def test_connection_indexes():
    assert build_root_system(LieType("A", 3)).connection_index == 4
    assert build_root_system(LieType("D", 4)).connection_index == 4
    assert build_root_system(LieType("B", 3)).connection_index == 2
    assert build_root_system(LieType("E", 7)).connection_index == 2
    assert build_root_system(LieType("G", 2)).connection_index == 1


def test_inner_product_fixtures():
    a1 = build_root_system(LieType("A", 1))
    assert inner_product(a1, (1,), (1,)) == Fraction(1, 2)
    a2 = build_root_system(LieType("A", 2))
    assert inner_product(a2, (1, 1), (1, 1)) == 2


def test_theta_level_fixtures():
    a1 = build_root_system(LieType("A", 1))
    assert theta_level(a1, (3,)) == 3
    assert theta_level(a1, (0,)) == 0
    a2 = build_root_system(LieType("A", 2))
    assert theta_level(a2, (1, 1)) == 2


@pytest.mark.parametrize("series,rank", [("B", 1), ("C", 1), ("D", 2), ("E", 5), ("E", 9), ("F", 3), ("G", 1), ("H", 4)])
def test_inadmissible_types_rejected(series, rank):
    with pytest.raises(ValueError):
        LieType(series, rank)


def test_parse_round_trip():
    assert LieType.parse("E_8") == LieType("E", 8)
    assert LieType.parse("a3") == LieType("A", 3)
    with pytest.raises(ValueError):
        LieType.parse("X")


def test_rank_mismatch_rejected():
    rs = build_root_system(LieType("A", 2))
    with pytest.raises(ValueError):
        inner_product(rs, (1,), (1, 1))
    with pytest.raises(ValueError):
        theta_level(rs, (1, 2, 3))


def test_corrupted_gram_is_caught():
    rs = build_root_system(LieType("A", 2))
    bad_gram = ((Fraction(-2, 3), Fraction(1, 3)), (Fraction(1, 3), Fraction(2, 3)))
    corrupted = dataclasses.replace(rs, gram=bad_gram)
    report = validate(corrupted)
    assert not report.ok
    names = " ".join(report.failures)
    assert "positive-definite" in names or "long-root-norm" in names or "dual" in names


def test_corrupted_highest_root_is_caught():
    rs = build_root_system(LieType("B", 2))
    corrupted = dataclasses.replace(rs, highest_root=(1, 1))
    report = validate(corrupted)
    assert not report.ok
