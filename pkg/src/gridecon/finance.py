"""Capital annuitization and currency normalization.

Every cost computation in the package funnels through these primitives:
capex is converted to a constant annual payment with a capital recovery
factor, and monetary values carry an explicit currency and price year so
figures from different sources can be compared on one basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class Currency(Enum):
    EUR = "EUR"
    USD = "USD"
    GBP = "GBP"


@dataclass(frozen=True)
class FinancialAssumptions:
    """Discount rate, asset lifetime, and fixed O&M rate.

    om_rate is a fraction of capex charged every year on top of the
    annuity (0 disables it).
    """

    discount_rate: float  # fraction per year
    lifetime_years: int
    om_rate: float = 0.0  # fraction of capex per year

    def __post_init__(self) -> None:
        if self.discount_rate < 0:
            raise ValueError(f"discount_rate must be >= 0, got {self.discount_rate}")
        if self.lifetime_years < 1:
            raise ValueError(f"lifetime_years must be >= 1, got {self.lifetime_years}")
        if not 0.0 <= self.om_rate < 1.0:
            raise ValueError(f"om_rate must be in [0, 1), got {self.om_rate}")


@dataclass(frozen=True)
class MoneyAmount:
    value: float
    currency: Currency
    price_year: int

    def __post_init__(self) -> None:
        if not math.isfinite(self.value):
            raise ValueError(f"value must be finite, got {self.value}")
        if not 1900 <= self.price_year <= 2100:
            raise ValueError(f"price_year must be in [1900, 2100], got {self.price_year}")


@dataclass(frozen=True)
class ConversionContext:
    """Exchange rate and inflation path for normalizing a money amount.

    fx_rate is expressed as target-currency units per source unit; use the
    reciprocal quote when converting in the opposite direction.
    """

    fx_rate: float  # target units per source unit
    inflation_rate: float  # fraction per year, applied after conversion
    target_currency: Currency

    def __post_init__(self) -> None:
        if self.fx_rate <= 0:
            raise ValueError(f"fx_rate must be > 0, got {self.fx_rate}")
        if self.inflation_rate <= -1:
            raise ValueError(f"inflation_rate must be > -1, got {self.inflation_rate}")


def capital_recovery_factor(rate: float, years: int) -> float:
    """Annuity fraction converting capex into a constant annual payment.

    Standard end-of-period formula r(1+r)^N / ((1+r)^N - 1); the zero-rate
    limit is straight-line 1/N so sensitivity sweeps can pass rate 0.
    """
    if years < 1:
        raise ValueError(f"years must be >= 1, got {years}")
    if rate <= -1:
        raise ValueError(f"rate must be > -1, got {rate}")
    if rate == 0.0:
        return 1.0 / years
    growth = (1.0 + rate) ** years
    return rate * growth / (growth - 1.0)


def annualized_cost(capex: float, fin: FinancialAssumptions) -> float:
    """Annual payment for a capex: capex * (CRF + om_rate), same unit as capex."""
    if capex < 0:
        raise ValueError(f"capex must be >= 0, got {capex}")
    crf = capital_recovery_factor(fin.discount_rate, fin.lifetime_years)
    return capex * (crf + fin.om_rate)


def normalize_currency(
    amount: MoneyAmount, ctx: ConversionContext, target_year: int
) -> MoneyAmount:
    """Convert an amount to the context's currency and inflate it to target_year.

    value * fx_rate * (1 + inflation_rate)^(target_year - price_year).
    Deflating to an earlier year is not modeled and is rejected.
    """
    if target_year < amount.price_year:
        raise ValueError(
            f"target_year {target_year} precedes price_year {amount.price_year}"
        )
    years = target_year - amount.price_year
    value = amount.value * ctx.fx_rate * (1.0 + ctx.inflation_rate) ** years
    return MoneyAmount(value=value, currency=ctx.target_currency, price_year=target_year)
