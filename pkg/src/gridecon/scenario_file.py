"""Declarative scenario files (JSON) and their strict schema.

A file may carry any subset of the sections ``finance``, ``links``,
``generation``, ``prices``, ``scenario``, and ``network``; each subcommand
checks that the sections it needs are present. Unknown keys are rejected
everywhere so a typo cannot silently fall back to a default.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .dispatch import DispatchNetwork, Interconnector, Region, sinusoid_profile
from .finance import FinancialAssumptions
from .scenario import (
    ConnectionPath,
    ConnectionScenario,
    GenerationSource,
    PriceModel,
    SchedulePolicy,
)
from .transmission import (
    LossComposition,
    LossModel,
    Segment,
    SegmentKind,
    TransmissionLink,
    UtilizationModel,
)


class ScenarioFileError(ValueError):
    """Raised for any schema violation, naming the offending key or value."""


@dataclass(frozen=True)
class ScenarioFileContents:
    finance: FinancialAssumptions | None
    links: dict[str, TransmissionLink]
    generation: GenerationSource | None
    prices: PriceModel | None
    scenario: ConnectionScenario | None
    network: DispatchNetwork | None

    def require(self, section: str):
        value = getattr(self, section)
        if value is None or (section == "links" and not value):
            raise ScenarioFileError(f"{section}: missing")
        return value


def load_scenario_file(path: str | Path) -> ScenarioFileContents:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ScenarioFileError(f"invalid JSON: {exc}") from None
    return parse_scenario_data(raw)


def parse_scenario_data(raw: dict) -> ScenarioFileContents:
    if not isinstance(raw, dict):
        raise ScenarioFileError("top level must be an object")
    _check_keys(raw, {"finance", "links", "generation", "prices", "scenario", "network"}, "")

    finance = _parse_finance(raw["finance"]) if "finance" in raw else None
    links = _parse_links(raw.get("links", {}))
    generation = _parse_generation(raw["generation"]) if "generation" in raw else None
    prices = _parse_prices(raw["prices"]) if "prices" in raw else None
    scenario = None
    if "scenario" in raw:
        if generation is None:
            raise ScenarioFileError("scenario: requires a generation section")
        scenario = _parse_scenario(raw["scenario"], links, generation)
    network = _parse_network(raw["network"]) if "network" in raw else None
    return ScenarioFileContents(
        finance=finance,
        links=links,
        generation=generation,
        prices=prices,
        scenario=scenario,
        network=network,
    )


def _check_keys(obj: dict, allowed: set[str], context: str) -> None:
    if not isinstance(obj, dict):
        raise ScenarioFileError(f"{context or 'top level'}: expected an object")
    for key in obj:
        if key not in allowed:
            where = f"{context}: " if context else ""
            raise ScenarioFileError(f"{where}unknown key {key!r}")


def _get(obj: dict, key: str, context: str):
    if key not in obj:
        raise ScenarioFileError(f"{context}: missing key {key!r}")
    return obj[key]


def _number(obj: dict, key: str, context: str) -> float:
    value = _get(obj, key, context)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioFileError(f"{context}.{key}: expected a number, got {value!r}")
    return float(value)


def _wrap(context: str, builder):
    try:
        return builder()
    except ScenarioFileError:
        raise
    except ValueError as exc:
        raise ScenarioFileError(f"{context}: {exc}") from None


def _parse_finance(obj: dict) -> FinancialAssumptions:
    _check_keys(obj, {"discount_rate", "lifetime_years", "om_rate"}, "finance")
    return _wrap(
        "finance",
        lambda: FinancialAssumptions(
            discount_rate=_number(obj, "discount_rate", "finance"),
            lifetime_years=int(_number(obj, "lifetime_years", "finance")),
            om_rate=_number(obj, "om_rate", "finance") if "om_rate" in obj else 0.0,
        ),
    )


def _parse_links(obj: dict) -> dict[str, TransmissionLink]:
    if not isinstance(obj, dict):
        raise ScenarioFileError("links: expected an object of named links")
    return {name: _parse_link(spec, f"links.{name}") for name, spec in obj.items()}


def _parse_link(obj: dict, context: str) -> TransmissionLink:
    _check_keys(
        obj,
        {"segments", "terminals", "capacity_mw", "availability", "loss_model", "utilization"},
        context,
    )
    segments_raw = _get(obj, "segments", context)
    if not isinstance(segments_raw, list) or not segments_raw:
        raise ScenarioFileError(f"{context}.segments: expected a non-empty list")
    segments = tuple(
        _parse_segment(seg, f"{context}.segments[{i}]") for i, seg in enumerate(segments_raw)
    )
    terminals = _get(obj, "terminals", context)
    _check_keys(terminals, {"count", "unit_cost_meur"}, f"{context}.terminals")
    loss = _parse_loss(obj.get("loss_model", {}), f"{context}.loss_model")
    util = _parse_utilization(obj.get("utilization", {}), f"{context}.utilization")
    return _wrap(
        context,
        lambda: TransmissionLink(
            segments=segments,
            terminal_count=int(_number(terminals, "count", f"{context}.terminals")),
            terminal_unit_cost_meur=_number(
                terminals, "unit_cost_meur", f"{context}.terminals"
            ),
            capacity_mw=_number(obj, "capacity_mw", context),
            availability=_number(obj, "availability", context)
            if "availability" in obj
            else 0.99,
            loss_model=loss,
            utilization=util,
        ),
    )


def _parse_segment(obj: dict, context: str) -> Segment:
    _check_keys(obj, {"kind", "length_km", "unit_cost_meur_per_km"}, context)
    kind_raw = _get(obj, "kind", context)
    try:
        kind = SegmentKind(kind_raw)
    except ValueError:
        raise ScenarioFileError(
            f"{context}.kind: {kind_raw!r} is not one of "
            f"{', '.join(k.value for k in SegmentKind)}"
        ) from None
    return _wrap(
        context,
        lambda: Segment(
            kind=kind,
            length_km=_number(obj, "length_km", context),
            unit_cost_meur_per_km=_number(obj, "unit_cost_meur_per_km", context),
        ),
    )


def _parse_loss(obj: dict, context: str) -> LossModel:
    _check_keys(obj, {"line_loss_per_1000km", "terminal_loss", "composition"}, context)
    composition_raw = obj.get("composition", "linear")
    try:
        composition = LossComposition(composition_raw)
    except ValueError:
        raise ScenarioFileError(
            f"{context}.composition: {composition_raw!r} is not one of "
            f"{', '.join(c.value for c in LossComposition)}"
        ) from None
    return _wrap(
        context,
        lambda: LossModel(
            line_loss_per_1000km=obj.get("line_loss_per_1000km", 0.03),
            terminal_loss=obj.get("terminal_loss", 0.006),
            composition=composition,
        ),
    )


def _parse_utilization(obj: dict, context: str) -> UtilizationModel:
    _check_keys(obj, {"reduced_hours", "reduced_fraction"}, context)
    return _wrap(
        context,
        lambda: UtilizationModel(
            reduced_hours=obj.get("reduced_hours", 0.0),
            reduced_fraction=obj.get("reduced_fraction", 1.0),
        ),
    )


def _parse_generation(obj: dict) -> GenerationSource:
    _check_keys(obj, {"capacity_mw", "capacity_factor", "lcoe_eur_per_kwh"}, "generation")
    return _wrap(
        "generation",
        lambda: GenerationSource(
            capacity_mw=_number(obj, "capacity_mw", "generation"),
            capacity_factor=_number(obj, "capacity_factor", "generation"),
            lcoe_eur_per_kwh=_number(obj, "lcoe_eur_per_kwh", "generation")
            if "lcoe_eur_per_kwh" in obj
            else 0.0,
        ),
    )


def _parse_prices(obj: dict) -> PriceModel:
    _check_keys(obj, {"peak_eur_per_kwh", "offpeak_ratio", "peak_window_hours"}, "prices")
    return _wrap(
        "prices",
        lambda: PriceModel(
            peak_eur_per_kwh=_number(obj, "peak_eur_per_kwh", "prices"),
            offpeak_ratio=_number(obj, "offpeak_ratio", "prices")
            if "offpeak_ratio" in obj
            else 0.5,
            peak_window_hours=_number(obj, "peak_window_hours", "prices")
            if "peak_window_hours" in obj
            else 12.0,
        ),
    )


def _parse_scenario(
    obj: dict, links: dict[str, TransmissionLink], generation: GenerationSource
) -> ConnectionScenario:
    _check_keys(obj, {"paths", "schedule", "trade_enabled"}, "scenario")
    paths_raw = _get(obj, "paths", "scenario")
    if not isinstance(paths_raw, list):
        raise ScenarioFileError("scenario.paths: expected a list")
    if not paths_raw:
        raise ScenarioFileError("paths: empty")
    paths = []
    for i, entry in enumerate(paths_raw):
        context = f"scenario.paths[{i}]"
        _check_keys(entry, {"link", "market", "tz_offset_hours"}, context)
        link_name = _get(entry, "link", context)
        if link_name not in links:
            raise ScenarioFileError(f"{context}.link: unknown link {link_name!r}")
        paths.append(
            ConnectionPath(
                link=links[link_name],
                market=str(_get(entry, "market", context)),
                tz_offset_hours=int(entry.get("tz_offset_hours", 0)),
            )
        )
    schedule_raw = obj.get("schedule", "all_to_single")
    try:
        schedule = SchedulePolicy(schedule_raw)
    except ValueError:
        raise ScenarioFileError(
            f"scenario.schedule: {schedule_raw!r} is not one of "
            f"{', '.join(s.value for s in SchedulePolicy)}"
        ) from None
    return _wrap(
        "scenario",
        lambda: ConnectionScenario(
            source=generation,
            paths=tuple(paths),
            schedule=schedule,
            trade_enabled=bool(obj.get("trade_enabled", False)),
        ),
    )


def _parse_network(obj: dict) -> DispatchNetwork:
    _check_keys(obj, {"regions", "interconnectors", "unserved_penalty_eur_per_mwh"}, "network")
    regions_raw = _get(obj, "regions", "network")
    if not isinstance(regions_raw, list) or not regions_raw:
        raise ScenarioFileError("network.regions: expected a non-empty list")
    regions = []
    for i, entry in enumerate(regions_raw):
        context = f"network.regions[{i}]"
        _check_keys(
            entry,
            {"name", "tz_offset_hours", "demand_peak_mw", "demand_profile_mw", "generators"},
            context,
        )
        if "demand_profile_mw" in entry:
            profile = entry["demand_profile_mw"]
            if not isinstance(profile, list) or len(profile) != 24:
                raise ScenarioFileError(f"{context}.demand_profile_mw: expected 24 values")
            profile = tuple(float(v) for v in profile)
        elif "demand_peak_mw" in entry:
            profile = sinusoid_profile(_number(entry, "demand_peak_mw", context))
        else:
            raise ScenarioFileError(
                f"{context}: needs demand_profile_mw or demand_peak_mw"
            )
        generators_raw = _get(entry, "generators", context)
        if not isinstance(generators_raw, list):
            raise ScenarioFileError(f"{context}.generators: expected a list")
        generators = []
        for j, gen in enumerate(generators_raw):
            gen_context = f"{context}.generators[{j}]"
            _check_keys(gen, {"capacity_mw", "marginal_cost_eur_per_mwh"}, gen_context)
            generators.append(
                (
                    _number(gen, "capacity_mw", gen_context),
                    _number(gen, "marginal_cost_eur_per_mwh", gen_context),
                )
            )
        regions.append(
            _wrap(
                context,
                lambda entry=entry, profile=profile, generators=generators, context=context: Region(
                    name=str(_get(entry, "name", context)),
                    tz_offset_hours=int(entry.get("tz_offset_hours", 0)),
                    demand_profile_mw=profile,
                    generators=tuple(generators),
                ),
            )
        )
    names = [r.name for r in regions]
    interconnectors = []
    for i, entry in enumerate(obj.get("interconnectors", [])):
        context = f"network.interconnectors[{i}]"
        _check_keys(entry, {"from", "to", "capacity_mw", "efficiency"}, context)
        a, b = _get(entry, "from", context), _get(entry, "to", context)
        for endpoint in (a, b):
            if endpoint not in names:
                raise ScenarioFileError(f"{context}: unknown region {endpoint!r}")
        interconnectors.append(
            _wrap(
                context,
                lambda entry=entry, a=a, b=b, context=context: Interconnector(
                    region_a=a,
                    region_b=b,
                    capacity_mw=_number(entry, "capacity_mw", context),
                    efficiency=_number(entry, "efficiency", context)
                    if "efficiency" in entry
                    else 1.0,
                ),
            )
        )
    penalty = obj.get("unserved_penalty_eur_per_mwh", 10000.0)
    return _wrap(
        "network",
        lambda: DispatchNetwork(
            regions=tuple(regions),
            interconnectors=tuple(interconnectors),
            unserved_penalty_eur_per_mwh=float(penalty),
        ),
    )
