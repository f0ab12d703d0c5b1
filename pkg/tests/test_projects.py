import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridecon.datasets import bundled_path, load_bundled_projects
from gridecon.projects import (
    CostBand,
    ProjectRecord,
    implied_cable_cost_per_km,
    load_project_records,
    parse_project_records,
    serialize_project_records,
)

HEADER = (
    "name,voltage_kv,capacity_mw,length_km,max_depth_m,total_cost_meur,"
    "cost_range_frac,known_cable_cost_meur,converter_count\n"
)


def test_bundled_dataset_loads_five_projects():
    records = load_bundled_projects()
    assert [r.name for r in records] == ["NorNed", "SAPEI", "BritNed", "NorGer", "NordBalt"]
    sapei = records[1]
    assert sapei.max_depth_m == 1600.0
    britned = records[2]
    assert britned.max_depth_m is None


def test_implied_cost_norned():
    record = ProjectRecord("NorNed", "±450", 700, 580, 410, 600)
    band = implied_cable_cost_per_km(record, 150.0)
    assert band.is_point
    assert band.low == pytest.approx(300 / 580)
    assert band.rounded(2) == (0.52, 0.52)


def test_implied_cost_norger_range():
    record = ProjectRecord("NorGer", "450-500", 1400, 570, 410, 1400, cost_range_frac=0.3)
    band = implied_cable_cost_per_km(record, 150.0)
    assert not band.is_point
    assert band.low == pytest.approx(680 / 570)
    assert band.high == pytest.approx(1520 / 570)
    assert band.rounded(2) == (1.19, 2.67)


def test_implied_cost_known_cable_cost_overrides():
    record = ProjectRecord(
        "NordBalt", "±300", 700, 450, None, 550, known_cable_cost_meur=270.0
    )
    band = implied_cable_cost_per_km(record, 150.0)
    assert band.low == pytest.approx(0.6)
    assert band.rounded(2) == (0.60, 0.60)


def test_implied_cost_rejects_inconsistent_assumption():
    record = ProjectRecord("NorNed", "±450", 700, 580, 410, 600)
    with pytest.raises(ValueError, match="NorNed"):
        implied_cable_cost_per_km(record, 300.0)


def test_bundled_dataset_reproduces_derived_row():
    expected = {
        "NorNed": (0.52, 0.52),
        "SAPEI": (1.03, 1.03),
        "BritNed": (1.15, 1.15),
        "NorGer": (1.19, 2.67),
        "NordBalt": (0.60, 0.60),
    }
    for record in load_bundled_projects():
        assert implied_cable_cost_per_km(record, 150.0).rounded(2) == expected[record.name]


def test_round_trip_bundled_file():
    path = bundled_path("hvdc_projects.csv")
    text = path.read_text(encoding="utf-8")
    records = load_project_records(path)
    assert serialize_project_records(records).rstrip() == text.rstrip()


def test_round_trip_is_stable():
    records = load_bundled_projects()
    once = serialize_project_records(records)
    again = serialize_project_records(parse_project_records(once))
    assert once == again


def test_empty_file_with_header():
    assert parse_project_records(HEADER) == []


def test_malformed_capacity_names_the_row():
    text = HEADER + "Foo,±300,n/a,100,,500,,,2\n"
    with pytest.raises(ValueError, match="row 2"):
        parse_project_records(text)


def test_missing_column_rejected():
    text = "name,voltage_kv\nFoo,300\n"
    with pytest.raises(ValueError, match="missing required columns"):
        parse_project_records(text)


def test_unknown_column_rejected():
    text = HEADER.rstrip() + ",bonus\n"
    with pytest.raises(ValueError, match="unknown columns"):
        parse_project_records(text)


def test_duplicate_names_rejected():
    rows = "Foo,±300,700,100,,500,,,2\n"
    with pytest.raises(ValueError, match="duplicate"):
        parse_project_records(HEADER + rows + rows)


def test_record_validation():
    with pytest.raises(ValueError):
        ProjectRecord("X", "300", 0, 100, None, 500)
    with pytest.raises(ValueError):
        ProjectRecord("X", "300", 700, 100, None, 500, cost_range_frac=1.0)


@settings(max_examples=200, deadline=None)
@given(
    total=st.floats(min_value=100.0, max_value=5000.0),
    length=st.floats(min_value=10.0, max_value=2000.0),
    assumption=st.floats(min_value=1.0, max_value=100.0),
    bump=st.floats(min_value=0.1, max_value=50.0),
)
def test_implied_cost_decreasing_in_converter_assumption(total, length, assumption, bump):
    record = ProjectRecord("X", "±300", 700, length, None, total, converter_count=2)
    if total - 2 * (assumption + bump) <= 0:
        return
    low = implied_cable_cost_per_km(record, assumption + bump)
    high = implied_cable_cost_per_km(record, assumption)
    assert low.low < high.low


def test_cost_band_rounding_is_half_away_from_zero():
    assert CostBand(0.515, 0.515).rounded(2) == (0.52, 0.52)
    assert CostBand(1.125, 1.125).rounded(2) == (1.13, 1.13)
