"""Hourly multi-region economic dispatch over an interconnection graph.

Each region has a 24-hour demand profile (shifted by its time-zone offset),
a stack of generators, and interconnectors to other regions that lose a
fixed fraction of whatever is sent through them. Every hour is dispatched
independently at minimum cost: generation is free to move between regions
as long as interconnector ratings are respected, and demand that cannot be
served is shed at a penalty price well above any generator.

The per-hour problem is a min-cost flow with lossy arcs (a unit sent
arrives as ``efficiency`` units). Successive shortest augmenting paths are
not exact once arcs have unequal gains, so the flow is solved as a small
exact linear program instead; costs are normalized before the solve, which
keeps the dispatched flows invariant under uniform price scaling. Marginal
prices come from per-unit-delivered shortest-path labels on the residual
network of the optimal flow, so price ties resolve toward the lower value.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

DEFAULT_UNSERVED_PENALTY = 10000.0  # EUR/MWh, far above any generator

_EPS_FLOW = 1e-7  # residual capacities below this count as saturated
_EPS_IMPROVE = 1e-7  # label must improve by this much to relax


@dataclass(frozen=True)
class Region:
    name: str
    tz_offset_hours: int
    demand_profile_mw: tuple[float, ...]
    generators: tuple[tuple[float, float], ...]  # (capacity MW, marginal cost EUR/MWh)

    def __post_init__(self) -> None:
        object.__setattr__(self, "demand_profile_mw", tuple(self.demand_profile_mw))
        object.__setattr__(
            self, "generators", tuple((float(c), float(m)) for c, m in self.generators)
        )
        if len(self.demand_profile_mw) != 24:
            raise ValueError(
                f"{self.name}: demand profile needs 24 hourly values, "
                f"got {len(self.demand_profile_mw)}"
            )
        if any(d < 0 for d in self.demand_profile_mw):
            raise ValueError(f"{self.name}: demand must be >= 0 every hour")
        for cap, cost in self.generators:
            if cap < 0 or cost < 0:
                raise ValueError(f"{self.name}: generator capacities and costs must be >= 0")

    def demand_at(self, hour: int) -> float:
        """Demand at global hour ``hour``; the profile is read in local time."""
        return self.demand_profile_mw[(hour + self.tz_offset_hours) % 24]


@dataclass(frozen=True)
class Interconnector:
    region_a: str
    region_b: str
    capacity_mw: float
    efficiency: float = 1.0

    def __post_init__(self) -> None:
        if self.region_a == self.region_b:
            raise ValueError(f"interconnector endpoints must differ, got {self.region_a!r}")
        if self.capacity_mw < 0:
            raise ValueError(f"capacity must be >= 0, got {self.capacity_mw}")
        if not 0.0 < self.efficiency <= 1.0:
            raise ValueError(f"efficiency must be in (0, 1], got {self.efficiency}")


@dataclass(frozen=True)
class DispatchNetwork:
    regions: tuple[Region, ...]
    interconnectors: tuple[Interconnector, ...] = ()
    unserved_penalty_eur_per_mwh: float = DEFAULT_UNSERVED_PENALTY

    def __post_init__(self) -> None:
        object.__setattr__(self, "regions", tuple(self.regions))
        object.__setattr__(self, "interconnectors", tuple(self.interconnectors))
        names = [r.name for r in self.regions]
        if len(set(names)) != len(names):
            raise ValueError("region names must be unique")
        for ic in self.interconnectors:
            for endpoint in (ic.region_a, ic.region_b):
                if endpoint not in names:
                    raise ValueError(f"interconnector references unknown region {endpoint!r}")
        if self.unserved_penalty_eur_per_mwh <= 0:
            raise ValueError("unserved penalty must be > 0")

    def region_index(self, name: str) -> int:
        for i, region in enumerate(self.regions):
            if region.name == name:
                return i
        raise KeyError(name)


def sinusoid_profile(
    peak_mw: float, trough_fraction: float = 0.5, peak_hour: int = 12
) -> tuple[float, ...]:
    """Daily demand curve peaking at peak_hour with trough = fraction * peak."""
    if peak_mw < 0:
        raise ValueError(f"peak must be >= 0, got {peak_mw}")
    if not 0.0 <= trough_fraction <= 1.0:
        raise ValueError(f"trough fraction must be in [0, 1], got {trough_fraction}")
    mid = (1.0 + trough_fraction) / 2.0
    amp = (1.0 - trough_fraction) / 2.0
    return tuple(
        peak_mw * (mid + amp * math.cos(2.0 * math.pi * (h - peak_hour) / 24.0))
        for h in range(24)
    )


@dataclass(frozen=True)
class HourSnapshot:
    network: DispatchNetwork
    demand_mw: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "demand_mw", tuple(self.demand_mw))
        if len(self.demand_mw) != len(self.network.regions):
            raise ValueError("one demand value per region required")
        if any(d < 0 or not math.isfinite(d) for d in self.demand_mw):
            raise ValueError("demands must be finite and >= 0")


@dataclass(frozen=True)
class HourlyDispatch:
    demand_mw: tuple[float, ...]
    generation_mw: tuple[tuple[float, ...], ...]  # [region][unit]
    flows_mw: tuple[float, ...]  # signed, positive = region_a -> region_b (sent side)
    unserved_mw: tuple[float, ...]
    curtailed_res_mw: tuple[float, ...]  # idle capacity on zero-cost units
    prices_eur_per_mwh: tuple[float, ...]
    loss_mw: float
    cost_eur: float

    @property
    def served_mw(self) -> tuple[float, ...]:
        return tuple(d - u for d, u in zip(self.demand_mw, self.unserved_mw))


class _Arc:
    """Residual-network arc for the price labels: gain g, cost per sent unit."""

    __slots__ = ("tail", "head", "cap", "gain", "cost", "flow")

    def __init__(self, tail: int, head: int, cap: float, gain: float, cost: float):
        self.tail = tail
        self.head = head
        self.cap = cap
        self.gain = gain
        self.cost = cost
        self.flow = 0.0


def _delivery_price_labels(arcs: list[_Arc], n_nodes: int, source: int) -> list[float]:
    """Cheapest cost of delivering one more unit at each node.

    Bellman-Ford on the residual network; traversing an arc forward maps a
    label p to (p + cost) / gain, traversing it backward refunds to
    p * gain - cost. Relaxation passes are bounded so that zero-cost
    residual loops (degenerate all-free networks) terminate; labels are
    clamped at zero since no cost is negative.
    """
    dist = [math.inf] * n_nodes
    dist[source] = 0.0
    for _ in range(n_nodes + 40):
        improved = False
        for arc in arcs:
            if arc.cap - arc.flow > _EPS_FLOW and dist[arc.tail] < math.inf:
                cand = max(0.0, (dist[arc.tail] + arc.cost) / arc.gain)
                if cand < dist[arc.head] - _EPS_IMPROVE:
                    dist[arc.head] = cand
                    improved = True
            if arc.flow > _EPS_FLOW and dist[arc.head] < math.inf:
                cand = max(0.0, dist[arc.head] * arc.gain - arc.cost)
                if cand < dist[arc.tail] - _EPS_IMPROVE:
                    dist[arc.tail] = cand
                    improved = True
        if not improved:
            break
    return dist


def min_cost_flow(snapshot: HourSnapshot) -> HourlyDispatch:
    """Cost-minimal generation and flows for one hour.

    Demand that cannot be met is absorbed by a penalty variable priced at
    the network's unserved penalty, so the problem is always feasible.
    """
    net = snapshot.network
    n_regions = len(net.regions)
    n_links = len(net.interconnectors)
    penalty = net.unserved_penalty_eur_per_mwh
    gen_index = [
        (ri, cap, cost)
        for ri, region in enumerate(net.regions)
        for cap, cost in region.generators
    ]
    n_gens = len(gen_index)
    n_vars = n_gens + 2 * n_links + n_regions

    costs = np.zeros(n_vars)
    balance = np.zeros((n_regions, n_vars))
    bounds: list[tuple[float, float | None]] = []
    for j, (ri, cap, cost) in enumerate(gen_index):
        costs[j] = cost
        balance[ri, j] = 1.0
        bounds.append((0.0, cap))
    for li, ic in enumerate(net.interconnectors):
        a = net.region_index(ic.region_a)
        b = net.region_index(ic.region_b)
        jf = n_gens + 2 * li
        balance[a, jf] -= 1.0
        balance[b, jf] += ic.efficiency
        balance[b, jf + 1] -= 1.0
        balance[a, jf + 1] += ic.efficiency
        bounds.append((0.0, ic.capacity_mw))
        bounds.append((0.0, ic.capacity_mw))
    for ri in range(n_regions):
        j = n_gens + 2 * n_links + ri
        costs[j] = penalty
        balance[ri, j] = 1.0
        # Capping shedding at local demand rules out degenerate optima that
        # route penalty power over cost-tied efficiency-1 links.
        bounds.append((0.0, snapshot.demand_mw[ri]))

    # Normalizing the objective keeps the chosen vertex invariant when all
    # marginal costs are scaled by a constant.
    scale = float(costs.max())
    objective = costs / scale if scale > 0 else costs
    solution = linprog(
        objective,
        A_eq=balance,
        b_eq=np.array(snapshot.demand_mw),
        bounds=bounds,
        method="highs",
    )
    if solution.status != 0:
        raise RuntimeError(f"dispatch LP failed: {solution.message}")
    x = np.clip(solution.x, 0.0, None)

    generation: list[tuple[float, ...]] = []
    j = 0
    for region in net.regions:
        units = []
        for _ in region.generators:
            units.append(float(x[j]))
            j += 1
        generation.append(tuple(units))
    flows = tuple(
        float(x[n_gens + 2 * li] - x[n_gens + 2 * li + 1]) for li in range(n_links)
    )
    unserved = tuple(
        min(float(x[n_gens + 2 * n_links + ri]), snapshot.demand_mw[ri])
        for ri in range(n_regions)
    )
    curtailed = tuple(
        sum(
            cap - dispatched
            for (cap, cost), dispatched in zip(region.generators, generation[ri])
            if cost == 0.0
        )
        for ri, region in enumerate(net.regions)
    )
    loss = float(
        sum(
            (x[n_gens + 2 * li] + x[n_gens + 2 * li + 1]) * (1.0 - ic.efficiency)
            for li, ic in enumerate(net.interconnectors)
        )
    )
    cost_eur = float(np.dot(costs, x))
    prices = _marginal_prices(net, snapshot.demand_mw, generation, x[n_gens:])
    return HourlyDispatch(
        demand_mw=snapshot.demand_mw,
        generation_mw=tuple(generation),
        flows_mw=flows,
        unserved_mw=unserved,
        curtailed_res_mw=curtailed,
        prices_eur_per_mwh=prices,
        loss_mw=loss,
        cost_eur=cost_eur,
    )


def _marginal_prices(
    net: DispatchNetwork,
    demand: tuple[float, ...],
    generation: list[tuple[float, ...]],
    link_and_unserved: np.ndarray,
) -> tuple[float, ...]:
    """Cost of delivering one more MW into each region at the optimal flow."""
    n_regions = len(net.regions)
    source = 0
    node_of = [1 + i for i in range(n_regions)]
    n_nodes = 1 + n_regions
    penalty = net.unserved_penalty_eur_per_mwh
    arcs: list[_Arc] = []
    for ri, region in enumerate(net.regions):
        for (cap, cost), dispatched in zip(region.generators, generation[ri]):
            arc = _Arc(source, node_of[ri], cap, 1.0, cost)
            arc.flow = min(dispatched, cap)
            arcs.append(arc)
        arcs.append(_Arc(source, node_of[ri], math.inf, 1.0, penalty))
    for li, ic in enumerate(net.interconnectors):
        a = node_of[net.region_index(ic.region_a)]
        b = node_of[net.region_index(ic.region_b)]
        fwd = _Arc(a, b, ic.capacity_mw, ic.efficiency, 0.0)
        bwd = _Arc(b, a, ic.capacity_mw, ic.efficiency, 0.0)
        fwd.flow = min(float(link_and_unserved[2 * li]), ic.capacity_mw)
        bwd.flow = min(float(link_and_unserved[2 * li + 1]), ic.capacity_mw)
        arcs.extend((fwd, bwd))
    labels = _delivery_price_labels(arcs, n_nodes, source)
    return tuple(min(labels[node_of[ri]], penalty) for ri in range(n_regions))


@dataclass(frozen=True)
class DispatchResult:
    network: DispatchNetwork
    hourly: tuple[HourlyDispatch, ...]

    @property
    def n_hours(self) -> int:
        return len(self.hourly)

    @property
    def total_cost_eur(self) -> float:
        return sum(h.cost_eur for h in self.hourly)

    @property
    def total_curtailed_mwh(self) -> float:
        return sum(sum(h.curtailed_res_mw) for h in self.hourly)

    @property
    def total_unserved_mwh(self) -> float:
        return sum(sum(h.unserved_mw) for h in self.hourly)

    @property
    def prices(self) -> np.ndarray:
        return np.array([h.prices_eur_per_mwh for h in self.hourly])

    @property
    def mean_price_spread_eur_per_mwh(self) -> float:
        prices = self.prices
        return float(np.mean(prices.max(axis=1) - prices.min(axis=1)))


def simulate(network: DispatchNetwork, hours: int) -> DispatchResult:
    """Dispatch ``hours`` consecutive hours; hours are independent (no storage)."""
    if hours < 1:
        raise ValueError(f"hours must be >= 1, got {hours}")
    hourly = []
    for t in range(hours):
        demand = tuple(region.demand_at(t) for region in network.regions)
        hourly.append(min_cost_flow(HourSnapshot(network=network, demand_mw=demand)))
    return DispatchResult(network=network, hourly=tuple(hourly))


@dataclass(frozen=True)
class CurtailmentMetrics:
    curtailed_gwh: float
    baseline_curtailed_gwh: float
    curtailment_reduction_pct: float
    cost_reduction_pct: float
    mean_price_spread_eur_per_mwh: float
    baseline_mean_price_spread_eur_per_mwh: float


def curtailment_metrics(
    result: DispatchResult, baseline: DispatchResult
) -> CurtailmentMetrics:
    """Deltas of a run against a baseline differing only in interconnectors."""
    if result.n_hours != baseline.n_hours:
        raise ValueError(
            f"horizons differ: {result.n_hours} vs {baseline.n_hours} hours"
        )
    result_names = [r.name for r in result.network.regions]
    baseline_names = [r.name for r in baseline.network.regions]
    if result_names != baseline_names:
        raise ValueError("results cover different region sets")

    def reduction(base: float, new: float) -> float:
        if base == 0.0:
            return 0.0
        return (base - new) / base * 100.0

    return CurtailmentMetrics(
        curtailed_gwh=result.total_curtailed_mwh / 1000.0,
        baseline_curtailed_gwh=baseline.total_curtailed_mwh / 1000.0,
        curtailment_reduction_pct=reduction(
            baseline.total_curtailed_mwh, result.total_curtailed_mwh
        ),
        cost_reduction_pct=reduction(baseline.total_cost_eur, result.total_cost_eur),
        mean_price_spread_eur_per_mwh=result.mean_price_spread_eur_per_mwh,
        baseline_mean_price_spread_eur_per_mwh=baseline.mean_price_spread_eur_per_mwh,
    )


@dataclass(frozen=True)
class ReserveRequirements:
    isolated_mw: dict[str, float]
    shared_mw: float

    @property
    def isolated_total_mw(self) -> float:
        return sum(self.isolated_mw.values())


def reserve_requirements(
    network: DispatchNetwork,
    alpha: float,
    link_headroom_credit: bool = True,
    hours: int = 24,
) -> ReserveRequirements:
    """Reserve margins as a fraction of peak demand, isolated vs pooled.

    Isolated regions each hold alpha times their own peak. With the
    headroom credit the system holds alpha times the coincident system
    peak, which is never more than the sum of the individual requirements.
    """
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must be in (0, 1], got {alpha}")
    if hours < 1:
        raise ValueError(f"hours must be >= 1, got {hours}")
    isolated = {
        region.name: alpha * max(region.demand_at(t) for t in range(hours))
        for region in network.regions
    }
    if link_headroom_credit:
        system_peak = max(
            sum(region.demand_at(t) for region in network.regions) for t in range(hours)
        )
        shared = min(alpha * system_peak, sum(isolated.values()))
    else:
        shared = sum(isolated.values())
    return ReserveRequirements(isolated_mw=isolated, shared_mw=shared)


def export_csv(result: DispatchResult) -> str:
    """Hour-by-region rows followed by a summary block, RFC-4180 style."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        [
            "hour",
            "region",
            "demand_mw",
            "served_mw",
            "generation_mw",
            "curtailed_mw",
            "unserved_mw",
            "price_eur_per_mwh",
        ]
    )
    for t, hour in enumerate(result.hourly):
        for ri, region in enumerate(result.network.regions):
            writer.writerow(
                [
                    t,
                    region.name,
                    _fmt(hour.demand_mw[ri]),
                    _fmt(hour.served_mw[ri]),
                    _fmt(sum(hour.generation_mw[ri])),
                    _fmt(hour.curtailed_res_mw[ri]),
                    _fmt(hour.unserved_mw[ri]),
                    _fmt(hour.prices_eur_per_mwh[ri]),
                ]
            )
    writer.writerow([])
    writer.writerow(["metric", "value"])
    writer.writerow(["hours", result.n_hours])
    writer.writerow(["total_cost_eur", _fmt(result.total_cost_eur)])
    writer.writerow(["total_curtailed_mwh", _fmt(result.total_curtailed_mwh)])
    writer.writerow(["total_unserved_mwh", _fmt(result.total_unserved_mwh)])
    writer.writerow(["mean_price_spread_eur_per_mwh", _fmt(result.mean_price_spread_eur_per_mwh)])
    return out.getvalue()


def _fmt(value: float) -> str:
    rounded = round(value, 6)
    if rounded == int(rounded):
        return str(int(rounded))
    return format(rounded, "g")
