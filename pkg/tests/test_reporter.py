# tests/test_reporter.py

import json

import pytest

from models.count_table import CountTable
from models.rational_function import D_BLACK, D_WHITE, RationalFunction
from models.series import TruncatedSeries
from models.verification import VerificationReport
from reports.reporter import Reporter


@pytest.fixture
def table():
    return CountTable(0, ("V", "F"), {(2, 1): 1, (1, 2): 1})


@pytest.fixture
def failed_report():
    report = VerificationReport("closure bijection", checked=3)
    report.fail("first", witness=(1, 2))
    report.fail("second")
    report.details["vertices=2"] = 1
    return report


def test_unknown_format():
    with pytest.raises(ValueError):
        Reporter("xml")


def test_json_is_sorted_and_compact(table):
    out = Reporter("json").table(table)
    assert out == '{"axis":["V","F"],"counts":[[1,2,1],[2,1,1]],"genus":0}'
    assert Reporter("json").table(table) == out


def test_csv_table(table):
    assert Reporter("csv").table(table).splitlines() == ["V,F,count", "1,2,1", "2,1,1"]


def test_ndjson_table(table):
    lines = [json.loads(line) for line in Reporter("ndjson").table(table).splitlines()]
    assert lines == [{"genus": 0, "V": 1, "F": 2, "count": 1}, {"genus": 0, "V": 2, "F": 1, "count": 1}]


def test_text_table(table):
    out = Reporter("text").table(table)
    assert "ROOTED CENSUS, GENUS 0" in out
    assert "TOTAL:" in out and out.rstrip().endswith("2")


def test_report_formats(failed_report):
    payload = json.loads(Reporter("json").report(failed_report))
    assert payload["passed"] is False
    assert payload["failures"] == ["first", "second"]
    assert payload["witness"] == "(1, 2)"

    lines = Reporter("ndjson").report(failed_report).splitlines()
    assert len(lines) == 3
    assert json.loads(lines[-1]) == {"name": "closure bijection", "passed": False, "checked": 3}

    assert Reporter("csv").report(failed_report).splitlines() == [
        "name,passed,checked,failures", "closure bijection,False,3,2",
    ]

    text = Reporter("text").report(failed_report)
    assert "❌ FAIL" in text and "FAILURES" in text and "vertices=2" in text


def test_passing_report_in_text():
    text = Reporter("text").report(VerificationReport("radial", checked=65))
    assert "✅ PASS" in text and "65 objects checked" in text
    assert "FAILURES" not in text


def test_many_reports(failed_report):
    ok = VerificationReport("radial", checked=1)
    assert [r["passed"] for r in json.loads(Reporter("json").reports([ok, failed_report]))] == [True, False]
    assert len(Reporter("csv").reports([ok, failed_report]).splitlines()) == 3


def test_series_dump():
    s = TruncatedSeries.from_terms(("z",), 3, {(1,): 1, (2,): 3})
    payload = json.loads(Reporter("json").series("T", s, extra={"coefficients": [1, 3]}))
    assert payload["terms"] == [[1, 1, 1], [2, 3, 1]]
    assert payload["coefficients"] == [1, 3]
    assert Reporter("csv").series("T", s).splitlines()[0] == "z,numerator,denominator"
    assert "z^2" in Reporter("text").series("T", s)


def test_rational_dump():
    f = RationalFunction.bivariate(D_BLACK / (1 - D_WHITE))
    payload = json.loads(Reporter("json").rational("f", f))
    assert payload["name"] == "f"
    assert set(payload) == {"name", "numerator", "denominator"}
    assert Reporter("csv").rational("f", f).splitlines()[0] == "part,e1,e2,coefficient"
