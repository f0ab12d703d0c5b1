"""Physical and cost model of a long HVDC route.

A link is an ordered list of cable / overhead-line segments plus converter
terminals. Losses, outage availability, and the ramping-interval duty cycle
derate the energy a link can deliver; the levelized transmission cost is
the annualized capex divided by that delivered energy.

Unit conventions: lengths km, costs M EUR, capacity MW, energy GWh/yr.
M EUR per GWh equals EUR per kWh, so LCOE values come out in EUR/kWh.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .finance import FinancialAssumptions, annualized_cost

HOURS_PER_YEAR = 8760


class SegmentKind(Enum):
    SUBMARINE_CABLE = "submarine_cable"
    OVERHEAD_LINE = "overhead_line"


class LossComposition(Enum):
    LINEAR = "linear"
    COMPOUND = "compound"


@dataclass(frozen=True)
class Segment:
    kind: SegmentKind
    length_km: float
    unit_cost_meur_per_km: float

    def __post_init__(self) -> None:
        if self.length_km <= 0:
            raise ValueError(f"segment length must be > 0, got {self.length_km}")
        if self.unit_cost_meur_per_km < 0:
            raise ValueError(f"unit cost must be >= 0, got {self.unit_cost_meur_per_km}")


@dataclass(frozen=True)
class LossModel:
    """Line loss per 1000 km plus a fixed loss at each converter terminal."""

    line_loss_per_1000km: float = 0.03
    terminal_loss: float = 0.006
    composition: LossComposition = LossComposition.LINEAR

    def __post_init__(self) -> None:
        if not 0.0 <= self.line_loss_per_1000km < 1.0:
            raise ValueError(f"line loss must be in [0, 1), got {self.line_loss_per_1000km}")
        if not 0.0 <= self.terminal_loss < 1.0:
            raise ValueError(f"terminal loss must be in [0, 1), got {self.terminal_loss}")


@dataclass(frozen=True)
class UtilizationModel:
    """Daily duty cycle around flow reversals.

    For reduced_hours per day the link runs at reduced_fraction of rated
    capacity (the ramping constraint interval of current-source converter
    links); the rest of the day it runs at full rating.
    """

    reduced_hours: float = 0.0
    reduced_fraction: float = 1.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.reduced_hours <= 24.0:
            raise ValueError(f"reduced_hours must be in [0, 24], got {self.reduced_hours}")
        if not 0.0 <= self.reduced_fraction <= 1.0:
            raise ValueError(
                f"reduced_fraction must be in [0, 1], got {self.reduced_fraction}"
            )


@dataclass(frozen=True)
class TransmissionLink:
    segments: tuple[Segment, ...]
    terminal_count: int
    terminal_unit_cost_meur: float
    capacity_mw: float
    availability: float = 0.99
    loss_model: LossModel = field(default_factory=LossModel)
    utilization: UtilizationModel = field(default_factory=UtilizationModel)

    def __post_init__(self) -> None:
        object.__setattr__(self, "segments", tuple(self.segments))
        if self.terminal_count < 0:
            raise ValueError(f"terminal_count must be >= 0, got {self.terminal_count}")
        if self.terminal_unit_cost_meur < 0:
            raise ValueError(
                f"terminal cost must be >= 0, got {self.terminal_unit_cost_meur}"
            )
        if self.capacity_mw < 0:
            raise ValueError(f"capacity must be >= 0, got {self.capacity_mw}")
        if not 0.0 < self.availability <= 1.0:
            raise ValueError(f"availability must be in (0, 1], got {self.availability}")
        route_efficiency(self)  # force the positive-efficiency invariant eagerly

    @property
    def total_length_km(self) -> float:
        return sum(s.length_km for s in self.segments)


def link_capex(link: TransmissionLink) -> float:
    """Total capital cost in M EUR: segments at their unit costs plus terminals."""
    segment_cost = sum(s.length_km * s.unit_cost_meur_per_km for s in link.segments)
    return segment_cost + link.terminal_count * link.terminal_unit_cost_meur


def route_efficiency(link: TransmissionLink) -> float:
    """Fraction of injected power that survives line and terminal losses.

    Linear composition stacks losses additively per leg before multiplying
    the line and terminal factors; compound composition exponentiates the
    per-1000-km and per-terminal survival rates.
    """
    lm = link.loss_model
    thousands = link.total_length_km / 1000.0
    if lm.composition is LossComposition.LINEAR:
        line_factor = 1.0 - lm.line_loss_per_1000km * thousands
        terminal_factor = 1.0 - lm.terminal_loss * link.terminal_count
        if line_factor <= 0.0 or terminal_factor <= 0.0:
            raise ValueError(
                "linear loss composition gives non-positive efficiency for "
                f"{link.total_length_km:.0f} km / {link.terminal_count} terminals"
            )
        return line_factor * terminal_factor
    return (1.0 - lm.line_loss_per_1000km) ** thousands * (
        1.0 - lm.terminal_loss
    ) ** link.terminal_count


def utilization_factor(u: UtilizationModel) -> float:
    """Average usable fraction of rated capacity over a day."""
    return ((24.0 - u.reduced_hours) + u.reduced_hours * u.reduced_fraction) / 24.0


def deliverable_energy(link: TransmissionLink) -> float:
    """Annual energy the link can deliver at full duty, GWh/yr.

    capacity * 8760 h * utilization * availability * efficiency. This is the
    capacity-based deliverable used for interconnector LCOE and trade; for
    a generator feeding the link see delivered_from_injection, which does
    not apply the ramping utilization.
    """
    return (
        link.capacity_mw
        * HOURS_PER_YEAR
        * utilization_factor(link.utilization)
        * link.availability
        * route_efficiency(link)
        / 1000.0
    )


def delivered_from_injection(link: TransmissionLink, injected_gwh: float) -> float:
    """Energy arriving at the far end for a given annual injection, GWh/yr."""
    if injected_gwh < 0:
        raise ValueError(f"injected energy must be >= 0, got {injected_gwh}")
    physical_max = link.capacity_mw * HOURS_PER_YEAR * link.availability / 1000.0
    if injected_gwh > physical_max * (1.0 + 1e-12):
        raise ValueError(
            f"injected {injected_gwh:.1f} GWh exceeds the link's physical annual "
            f"maximum of {physical_max:.1f} GWh"
        )
    return injected_gwh * link.availability * route_efficiency(link)


def transmission_lcoe(
    link: TransmissionLink, fin: FinancialAssumptions, delivered_gwh: float
) -> float:
    """Levelized transmission cost in EUR per delivered kWh."""
    if delivered_gwh <= 0:
        raise ValueError(f"delivered energy must be > 0, got {delivered_gwh}")
    return annualized_cost(link_capex(link), fin) / delivered_gwh
