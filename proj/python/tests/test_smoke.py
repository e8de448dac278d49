import json

import pytest

import cboomerang as cb


def test_x3_over_f191_row_entry():
    assert cb.bct_entry("191", "x^3", "11", "1", "125") == 9


def test_uniformity_report_within_bound():
    rep = cb.uniformity("11", "x^3", "2")
    assert rep["bound"] == 9
    assert rep["beta"] <= 9
    assert rep["pass"]
    assert rep["witnesses"]


def test_bound_absent_when_characteristic_divides_degree():
    assert cb.applicable_bound(3, "3", "2") is None
    assert cb.applicable_bound(5, "257", "-1") == (20, "c = -1: d(d-1)")


def test_factor_degrees_sorted():
    assert cb.factor_degrees("7", "x^3 - x") == [1, 1, 1]


def test_dickson_matches_recurrence():
    assert cb.dickson("11", 3, "0") == "x^3"
    assert cb.dickson("11", 7, "1") == "x^7 + 4*x^5 + 3*x^3 + 4*x"


def test_fixture_q191_verifies():
    assert "q191" in cb.fixture_names()
    rep = cb.verify_fixture("q191")
    assert rep["ok"]


def test_cli_json_round_trip():
    code, out, err = cb.run_cli(["uniformity", "--field", "11", "--f", "x^3", "--c", "2", "--json"])
    assert code == 0, err
    assert json.loads(out)["bound_source"] == "c^2 != 1: d^2"


def test_bad_field_is_a_value_error():
    with pytest.raises(ValueError):
        cb.uniformity("12", "x^3", "2")
