# tests/test_models.py

import pytest

from models.count_table import CountTable
from models.errors import CounterexampleFound
from models.verification import VerificationReport


def test_count_table_merge_is_commutative():
    a = CountTable(1, ("V", "F"), {(1, 1): 1})
    b = CountTable(1, ("V", "F"), {(1, 1): 2, (2, 2): 5})
    assert a.merge(b) == b.merge(a)
    assert a.merge(b).get(1, 1) == 3
    assert a.counts == {(1, 1): 1}


def test_count_table_ignores_zero_cells():
    a = CountTable(0, ("E",), {(0,): 1, (1,): 0})
    assert a == CountTable(0, ("E",), {(0,): 1})
    assert a.rows() == [[0, 1]]
    assert a != CountTable(1, ("E",), {(0,): 1})


def test_count_table_frame():
    frame = CountTable(0, ("V", "F"), {(2, 1): 1, (1, 2): 1}).to_dataframe()
    assert list(frame.columns) == ["V", "F", "count"]
    assert frame["count"].sum() == 2


def test_report_keeps_the_first_witness():
    report = VerificationReport("radial")
    assert report.passed
    assert report.raise_for_failure() is report
    report.fail("first", witness="a")
    report.fail("second", witness="b")
    assert not report.passed
    with pytest.raises(CounterexampleFound) as info:
        report.raise_for_failure()
    assert info.value.witness == "a"
    assert "radial: first" in str(info.value)
