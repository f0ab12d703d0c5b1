"""Generation-connection scenarios over one or two transmission paths.

A remote generation source is tied to one market, or to two markets in
different time zones. With two paths the plant chases the peak: it sells
into whichever market is currently at its daily peak window, splitting the
annual energy 50/50 between them, and the capacity left over on the
corridor can carry inter-market trade.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .finance import FinancialAssumptions, annualized_cost
from .transmission import (
    HOURS_PER_YEAR,
    TransmissionLink,
    delivered_from_injection,
    link_capex,
    route_efficiency,
    utilization_factor,
)


class SchedulePolicy(Enum):
    ALL_TO_SINGLE = "all_to_single"
    PEAK_CHASING = "peak_chasing"


@dataclass(frozen=True)
class GenerationSource:
    capacity_mw: float
    capacity_factor: float
    lcoe_eur_per_kwh: float = 0.0  # generation-only cost

    def __post_init__(self) -> None:
        if self.capacity_mw <= 0:
            raise ValueError(f"capacity must be > 0, got {self.capacity_mw}")
        if not 0.0 < self.capacity_factor <= 1.0:
            raise ValueError(f"capacity factor must be in (0, 1], got {self.capacity_factor}")
        if self.lcoe_eur_per_kwh < 0:
            raise ValueError(f"generation lcoe must be >= 0, got {self.lcoe_eur_per_kwh}")


@dataclass(frozen=True)
class PriceModel:
    """Two-level daily price: peak for a window of hours, a ratio of it off-peak."""

    peak_eur_per_kwh: float
    offpeak_ratio: float = 0.5
    peak_window_hours: float = 12.0

    def __post_init__(self) -> None:
        if self.peak_eur_per_kwh <= 0:
            raise ValueError(f"peak price must be > 0, got {self.peak_eur_per_kwh}")
        if not 0.0 <= self.offpeak_ratio <= 1.0:
            raise ValueError(f"offpeak ratio must be in [0, 1], got {self.offpeak_ratio}")
        if not 0.0 < self.peak_window_hours <= 24.0:
            raise ValueError(
                f"peak window must be in (0, 24] hours, got {self.peak_window_hours}"
            )


@dataclass(frozen=True)
class ConnectionPath:
    link: TransmissionLink
    market: str
    tz_offset_hours: int = 0


@dataclass(frozen=True)
class ConnectionScenario:
    source: GenerationSource
    paths: tuple[ConnectionPath, ...]
    schedule: SchedulePolicy = SchedulePolicy.ALL_TO_SINGLE
    trade_enabled: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "paths", tuple(self.paths))
        if not self.paths:
            raise ValueError("paths: empty")
        if len(self.paths) > 2:
            raise ValueError(f"at most two paths supported, got {len(self.paths)}")
        if self.schedule is SchedulePolicy.PEAK_CHASING:
            if len(self.paths) != 2:
                raise ValueError("peak_chasing requires exactly two paths")
            a, b = self.paths
            if a.market == b.market:
                raise ValueError("peak_chasing paths must serve distinct markets")
            if a.tz_offset_hours == b.tz_offset_hours:
                raise ValueError(
                    "peak_chasing markets must lie in different time zones "
                    "(peak windows would coincide)"
                )
        for path in self.paths:
            if path.link.capacity_mw < self.source.capacity_mw:
                raise ValueError(
                    f"path {path.market!r} capacity {path.link.capacity_mw} MW is below "
                    f"source capacity {self.source.capacity_mw} MW"
                )


@dataclass(frozen=True)
class ScenarioResult:
    production_gwh: float
    delivered_per_path_gwh: tuple[float, ...]
    total_capex_meur: float
    scenario_lcoe_eur_per_kwh: float
    trade_delivered_gwh: float
    total_delivered_gwh: float


@dataclass(frozen=True)
class RevenueResult:
    annual_revenue_eur: float
    single_path_revenue_eur: float
    uplift: float  # fraction vs the all-to-first-path baseline


@dataclass(frozen=True)
class TradeResult:
    trade_sent_gwh: float
    trade_delivered_gwh: float
    wind_delivered_gwh: float
    total_delivered_gwh: float


def annual_production(source: GenerationSource) -> float:
    """Expected annual output in GWh: capacity * 8760 * capacity factor."""
    return source.capacity_mw * HOURS_PER_YEAR * source.capacity_factor / 1000.0


def path_injections(scenario: ConnectionScenario) -> tuple[float, ...]:
    """Annual energy injected into each path under the schedule, GWh.

    Peak chasing alternates in 12 h blocks and the source output is assumed
    uncorrelated with the hour of day, so the split is exactly 50/50.
    """
    production = annual_production(scenario.source)
    if scenario.schedule is SchedulePolicy.PEAK_CHASING:
        return tuple(production / len(scenario.paths) for _ in scenario.paths)
    return (production,) + (0.0,) * (len(scenario.paths) - 1)


def evaluate_connection(
    scenario: ConnectionScenario, fin: FinancialAssumptions
) -> ScenarioResult:
    """Deliveries and levelized transmission cost of a connection scenario.

    The LCOE denominator is the delivered source energy, plus delivered
    trade when the scenario enables it.
    """
    injections = path_injections(scenario)
    delivered = tuple(
        delivered_from_injection(path.link, injected)
        for path, injected in zip(scenario.paths, injections)
    )
    capex = sum(link_capex(path.link) for path in scenario.paths)
    trade_delivered = 0.0
    if scenario.trade_enabled:
        trade_delivered = trade_potential(scenario).trade_delivered_gwh
    total_delivered = sum(delivered) + trade_delivered
    lcoe = annualized_cost(capex, fin) / total_delivered if total_delivered > 0 else 0.0
    return ScenarioResult(
        production_gwh=annual_production(scenario.source),
        delivered_per_path_gwh=delivered,
        total_capex_meur=capex,
        scenario_lcoe_eur_per_kwh=lcoe,
        trade_delivered_gwh=trade_delivered,
        total_delivered_gwh=total_delivered,
    )


def revenue(scenario: ConnectionScenario, prices: PriceModel) -> RevenueResult:
    """Annual sales revenue and the uplift over selling everything on path 1.

    Peak chasing sells every delivered kWh at peak price. The single-path
    baseline sells at peak only during the peak window, at ratio * peak for
    the rest of the day.
    """
    w = prices.peak_window_hours
    blended = (w + (24.0 - w) * prices.offpeak_ratio) / 24.0

    single_delivered = delivered_from_injection(
        scenario.paths[0].link, annual_production(scenario.source)
    )
    single_revenue = single_delivered * 1e6 * prices.peak_eur_per_kwh * blended

    if scenario.schedule is SchedulePolicy.PEAK_CHASING:
        injections = path_injections(scenario)
        delivered = sum(
            delivered_from_injection(path.link, injected)
            for path, injected in zip(scenario.paths, injections)
        )
        annual = delivered * 1e6 * prices.peak_eur_per_kwh
    else:
        annual = single_revenue
    return RevenueResult(
        annual_revenue_eur=annual,
        single_path_revenue_eur=single_revenue,
        uplift=annual / single_revenue - 1.0,
    )


def trade_potential(scenario: ConnectionScenario) -> TradeResult:
    """Inter-market trade the corridor can carry on top of the source flows.

    The source is taken at its constant expected output cf * capacity, so
    each path keeps a residual of (path capacity - source output); trade
    runs through both links in series and pays both links' losses, both
    availabilities, and the ramping duty cycle of the corridor.
    """
    if not scenario.trade_enabled:
        raise ValueError("trade is not enabled for this scenario")
    if len(scenario.paths) != 2:
        raise ValueError("trade requires exactly two paths")
    wind_flow = scenario.source.capacity_mw * scenario.source.capacity_factor
    residual = min(path.link.capacity_mw - wind_flow for path in scenario.paths)
    if residual < 0:
        raise ValueError(
            f"negative residual capacity ({residual:.0f} MW): source output exceeds a path rating"
        )
    sent = residual * HOURS_PER_YEAR / 1000.0
    first, second = scenario.paths
    delivered = (
        sent
        * utilization_factor(first.link.utilization)
        * first.link.availability
        * second.link.availability
        * route_efficiency(first.link)
        * route_efficiency(second.link)
    )
    injections = path_injections(scenario)
    wind_delivered = sum(
        delivered_from_injection(path.link, injected)
        for path, injected in zip(scenario.paths, injections)
    )
    return TradeResult(
        trade_sent_gwh=sent,
        trade_delivered_gwh=delivered,
        wind_delivered_gwh=wind_delivered,
        total_delivered_gwh=wind_delivered + delivered,
    )


def delivered_cost_increase(
    gen_lcoe_eur_per_kwh: float, single: ScenarioResult, dual: ScenarioResult
) -> float:
    """Relative increase in cost per delivered kWh when adding the second path."""
    return (gen_lcoe_eur_per_kwh + dual.scenario_lcoe_eur_per_kwh) / (
        gen_lcoe_eur_per_kwh + single.scenario_lcoe_eur_per_kwh
    ) - 1.0


def revenue_per_delivered_kwh(
    revenue_eur: float, link: TransmissionLink, period_hours: float
) -> float:
    """Revenue divided by the energy the link delivers over the period."""
    if period_hours <= 0:
        raise ValueError(f"period_hours must be > 0, got {period_hours}")
    delivered_kwh = (
        link.capacity_mw
        * period_hours
        * utilization_factor(link.utilization)
        * link.availability
        * route_efficiency(link)
        * 1000.0
    )
    if delivered_kwh <= 0:
        raise ValueError("link delivers no energy over the period")
    return revenue_eur / delivered_kwh


def import_competitiveness(
    remote_gen_cost: float, link_lcoe: float, local_cost: float
) -> float:
    """Signed margin of importing remote power over generating locally.

    (local - (remote + link)) / local; positive means importing is cheaper.
    All three inputs must be in the same currency unit.
    """
    if local_cost <= 0:
        raise ValueError(f"local cost must be > 0, got {local_cost}")
    return (local_cost - (remote_gen_cost + link_lcoe)) / local_cost
