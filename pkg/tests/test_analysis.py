from fractions import Fraction

import pytest

from ringhull.analysis import (
    HullTypeR,
    achievable_check,
    average_dim2_bruteforce,
    average_dim2_formula,
    average_dim2_z4_formula,
    enumerate_hull_types,
    format_fraction,
    strict_upper_bound_holds,
    table1,
)
from ringhull import codes_z4
from ringhull.codes_ring import all_codes_r, hull_r
from ringhull.cyclotomic import factor_xn_minus_1
from ringhull.errors import EvenLength, TooManyCodes


def test_types_n7():
    e = enumerate_hull_types(7)
    assert e.types == {0: tuple(range(15)), 3: tuple(range(9)), 6: (0, 1, 2)}
    assert e.branches == {0: 1, 3: 2, 6: 1}
    assert (3, 8) in e and HullTypeR(6, 3) not in e


def test_types_n15():
    e = enumerate_hull_types(15)
    assert e.types == {0: tuple(range(31)), 4: tuple(range(23)), 8: tuple(range(15))}


def test_types_n1():
    assert enumerate_hull_types(1).types == {0: (0, 1, 2)}


@pytest.mark.parametrize("n", [9, 17, 33])
def test_lengths_with_all_divisors_in_N2_have_k1_zero(n):
    assert set(enumerate_hull_types(n).types) == {0}


@pytest.mark.parametrize("n", [1, 3, 5, 7])
def test_enumeration_matches_sweep(n):
    sweep = {(t.k1, t.k2) for c in all_codes_r(factor_xn_minus_1(n)) for t in [hull_r(c)[1]]}
    assert sweep == enumerate_hull_types(n).as_set()


def test_achievable_check():
    ok, w = achievable_check(7, HullTypeR(3, 8))
    assert ok and hull_r(w)[1] == HullTypeR(3, 8)
    assert achievable_check(7, (1, 0)) == (False, None)
    ok, w = achievable_check(1, (0, 2))
    two = codes_z4.make_code(factor_xn_minus_1(1), "G")
    assert ok and w.c1 == two and w.c2 == two


@pytest.mark.parametrize("n", [15, 21])
def test_witnesses_realise_every_type(n):
    for t in sorted(enumerate_hull_types(n).as_set()):
        ok, w = achievable_check(n, t)
        assert ok
        assert (hull_r(w)[1].k1, hull_r(w)[1].k2) == t


def test_even_lengths_rejected():
    for f in (enumerate_hull_types, average_dim2_formula, lambda n: achievable_check(n, (0, 0))):
        with pytest.raises(EvenLength):
            f(8)


def test_formula_examples():
    assert average_dim2_formula(55) == Fraction(490, 9)
    assert average_dim2_formula(93) == 102
    assert average_dim2_formula(7) == Fraction(22, 3)
    assert average_dim2_formula(151) == Fraction(1506, 9)
    assert average_dim2_z4_formula(7) == Fraction(11, 3)


@pytest.mark.parametrize("n, expected", [(1, Fraction(2, 3)), (7, Fraction(22, 3)), (9, Fraction(6))])
def test_bruteforce(n, expected):
    assert average_dim2_bruteforce(n) == expected
    assert average_dim2_bruteforce(n, method="enumerate", workers=2) == expected


def test_z4_average_by_sweep():
    for n in (3, 5, 7):
        comps = list(codes_z4.all_codes(factor_xn_minus_1(n)))
        mean = Fraction(sum(codes_z4.hull(c).dim2 for c in comps), len(comps))
        assert mean == average_dim2_z4_formula(n)


def test_bruteforce_cap():
    with pytest.raises(TooManyCodes):
        average_dim2_bruteforce(15, cap=1000)
    with pytest.raises(ValueError):
        average_dim2_bruteforce(1, method="guess")


def test_table_rows():
    rows = table1([55, 93, 151])
    assert [str(r) for r in rows] == ["55 15 490/9", "93 3 102", "151 1 502/3"]
    assert rows[0].to_dict() == {"n": 55, "B": 15, "E_num": 490, "E_den": 9, "in_N2": False}
    assert str(table1([59])[0]) == "59 59 118/3 †"


def test_upper_bound():
    assert all(strict_upper_bound_holds(n) for n in range(1, 160, 2))


def test_format_fraction():
    assert format_fraction(Fraction(4, 2)) == "2"
    assert format_fraction(Fraction(490, 9)) == "490/9"
