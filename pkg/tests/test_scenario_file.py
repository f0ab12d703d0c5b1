import json

import pytest

from gridecon.datasets import load_bundled_scenario
from gridecon.scenario import SchedulePolicy
from gridecon.scenario_file import (
    ScenarioFileError,
    load_scenario_file,
    parse_scenario_data,
)
from gridecon.transmission import LossComposition


def minimal_scenario_data() -> dict:
    link = {
        "segments": [
            {"kind": "submarine_cable", "length_km": 500, "unit_cost_meur_per_km": 1.0}
        ],
        "terminals": {"count": 2, "unit_cost_meur": 100},
        "capacity_mw": 1000,
        "availability": 0.99,
        "loss_model": {"composition": "linear"},
        "utilization": {"reduced_hours": 4, "reduced_fraction": 0.5},
    }
    return {
        "finance": {"discount_rate": 0.03, "lifetime_years": 40, "om_rate": 0.0},
        "links": {"main": link},
        "generation": {"capacity_mw": 500, "capacity_factor": 0.4, "lcoe_eur_per_kwh": 0.05},
        "prices": {"peak_eur_per_kwh": 0.1, "offpeak_ratio": 0.5, "peak_window_hours": 12},
        "scenario": {
            "paths": [{"link": "main", "market": "home", "tz_offset_hours": 0}],
            "schedule": "all_to_single",
            "trade_enabled": False,
        },
    }


def test_bundled_greenland_parses():
    contents = load_bundled_scenario("greenland")
    assert set(contents.links) == {"to-north-uk", "to-quebec"}
    scenario = contents.scenario
    assert scenario.schedule is SchedulePolicy.PEAK_CHASING
    assert scenario.trade_enabled
    assert [p.market for p in scenario.paths] == ["north-uk", "quebec"]
    assert contents.finance.om_rate == 0.005
    assert contents.links["to-north-uk"].total_length_km == pytest.approx(2066.0)
    assert contents.links["to-quebec"].total_length_km == pytest.approx(3269.0)
    assert contents.links["to-north-uk"].loss_model.composition is LossComposition.LINEAR


def test_minimal_scenario_round_trip(tmp_path):
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(minimal_scenario_data()))
    contents = load_scenario_file(path)
    assert contents.scenario.source.capacity_mw == 500
    assert contents.prices.peak_eur_per_kwh == 0.1


def test_unknown_top_level_key_rejected():
    data = minimal_scenario_data()
    data["colour"] = "blue"
    with pytest.raises(ScenarioFileError, match="'colour'"):
        parse_scenario_data(data)


def test_unknown_link_key_rejected():
    data = minimal_scenario_data()
    data["links"]["main"]["voltage"] = 500
    with pytest.raises(ScenarioFileError, match="links.main.*'voltage'"):
        parse_scenario_data(data)


def test_unknown_segment_kind_rejected():
    data = minimal_scenario_data()
    data["links"]["main"]["segments"][0]["kind"] = "tunnel"
    with pytest.raises(ScenarioFileError, match="tunnel"):
        parse_scenario_data(data)


def test_empty_paths_rejected():
    data = minimal_scenario_data()
    data["scenario"]["paths"] = []
    with pytest.raises(ScenarioFileError, match="paths: empty"):
        parse_scenario_data(data)


def test_unresolved_link_name_rejected():
    data = minimal_scenario_data()
    data["scenario"]["paths"][0]["link"] = "missing"
    with pytest.raises(ScenarioFileError, match="'missing'"):
        parse_scenario_data(data)


def test_missing_required_key_rejected():
    data = minimal_scenario_data()
    del data["links"]["main"]["capacity_mw"]
    with pytest.raises(ScenarioFileError, match="capacity_mw"):
        parse_scenario_data(data)


def test_non_numeric_value_rejected():
    data = minimal_scenario_data()
    data["finance"]["discount_rate"] = "three percent"
    with pytest.raises(ScenarioFileError, match="discount_rate"):
        parse_scenario_data(data)


def test_scenario_requires_generation_section():
    data = minimal_scenario_data()
    del data["generation"]
    with pytest.raises(ScenarioFileError, match="generation"):
        parse_scenario_data(data)


def test_require_names_missing_section():
    contents = parse_scenario_data(minimal_scenario_data())
    with pytest.raises(ScenarioFileError, match="network: missing"):
        contents.require("network")


def test_network_section_parses():
    contents = load_bundled_scenario("smoothing")
    network = contents.require("network")
    assert [r.name for r in network.regions] == ["windland", "peakland"]
    assert network.interconnectors[0].efficiency == 0.94
    assert len(network.regions[0].demand_profile_mw) == 24


def test_network_profile_needs_24_values():
    data = {
        "network": {
            "regions": [
                {
                    "name": "a",
                    "tz_offset_hours": 0,
                    "demand_profile_mw": [1.0, 2.0],
                    "generators": [{"capacity_mw": 1, "marginal_cost_eur_per_mwh": 1}],
                }
            ],
            "interconnectors": [],
        }
    }
    with pytest.raises(ScenarioFileError, match="24"):
        parse_scenario_data(data)


def test_network_unknown_region_reference():
    data = {
        "network": {
            "regions": [
                {
                    "name": "a",
                    "tz_offset_hours": 0,
                    "demand_peak_mw": 10,
                    "generators": [{"capacity_mw": 1, "marginal_cost_eur_per_mwh": 1}],
                }
            ],
            "interconnectors": [
                {"from": "a", "to": "nowhere", "capacity_mw": 5, "efficiency": 1.0}
            ],
        }
    }
    with pytest.raises(ScenarioFileError, match="'nowhere'"):
        parse_scenario_data(data)


def test_invalid_json_reported(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(ScenarioFileError, match="invalid JSON"):
        load_scenario_file(path)
