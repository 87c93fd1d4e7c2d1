from fractions import Fraction

import pytest

from ringhull import tables
from ringhull.codes_ring import hull_r


def test_golden_files_load():
    t1 = tables.load_table1()
    assert len(t1) == 50
    assert [e.n for e in t1] == list(range(55, 154, 2))
    assert t1[0] == tables.Table1Entry(55, False, 15, Fraction(490, 9))
    assert len(tables.load_hull_table(2)) == 15
    assert len(tables.load_hull_table(3)) == 15


def test_parse_parameters():
    p = tables.parse_parameters("(30, 4^0 2^10, 16)*")
    assert (p.length, p.k1, p.k2, p.distance, p.starred) == (30, 0, 10, 16, True)
    assert not tables.parse_parameters("(30, 4^4 2^1, 20)").starred
    with pytest.raises(ValueError):
        tables.parse_parameters("30, 4^4")


def test_product_cells():
    # p1=r2=(10231)(13201) and r1=q2=(111)(11111)
    row = tables.load_hull_table(2)[14]
    assert str(row.roles["p1"]) == "130131031"
    assert str(row.roles["q2"]) == "1233321"
    c = tables.code_from_roles(row)
    assert (c.c1.roles(), c.c2.roles()) == ("GHHFF", "FGGHH")


def test_row_one_code():
    row = tables.load_hull_table(2)[0]
    c = tables.code_from_roles(row)
    h, t = hull_r(c)
    assert (t.k1, t.k2) == (4, 7)


def test_duplicate_generators():
    d3 = tables.duplicate_generators(tables.load_hull_table(3))
    assert d3 == {3: [4], 4: [3], 12: [13], 13: [12]}
    assert tables.duplicate_generators(tables.load_hull_table(2)) == {}


def test_verify_single_rows():
    (rep,) = tables.verify_table(2, {1})
    assert rep.status == tables.PASS
    assert rep.computed == "(30, 4^0 2^10, 16)"
    (rep,) = tables.verify_table(2, {3})
    assert rep.status == tables.EXPECTED
    (rep,) = tables.verify_table(3, {13})
    assert rep.status == tables.EXPECTED
    assert any("row 12" in n for n in rep.notes)
    assert any("(42, 4^0 2^2, 56) (matches the printed triple)" in n for n in rep.notes)


def test_invalid_role_rows_are_reported():
    (rep,) = tables.verify_table(2, {10})
    assert rep.status == tables.PASS
    assert any("not a divisor" in n for n in rep.notes)
    (rep,) = tables.verify_table(2, {5})
    assert any("disjoint" in n for n in rep.notes)


def test_over_cap_row_is_unverified():
    (rep,) = tables.verify_table(3, {11})
    assert rep.status == tables.UNVERIFIED


def test_average_table_report_notes():
    reps = tables.verify_table(1, {2})
    assert reps[0].status == tables.FAIL
    assert "printed B" in reps[0].notes[0]


def test_unknown_table():
    with pytest.raises(ValueError):
        tables.verify_table(4)


def test_summary_counts():
    reps = tables.verify_table(2, {1, 2, 3})
    assert tables.summary(reps) == {tables.PASS: 1, tables.FAIL: 1, tables.EXPECTED: 1, tables.UNVERIFIED: 0}
