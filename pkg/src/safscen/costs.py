"""Per-kg-SAF cost, revenue and margin accounting for one route.

The cost side reproduces the published per-kg DCF accounting:

1. take the mean listed market price over the window (BRL),
2. convert at the bundled FX rate,
3. strip the embedded federal PIS/COFINS share (listed prices include it),
4. charge the full ICMS + PIS + COFINS burden on that stripped basis as an
   explicit, discountable tax line.

The revenue side uses listed market prices as-is: SAF sells at jet-fuel price
and the by-product stream at naphtha price, each optionally carrying a
multiplicative premium; carbon-credit revenue accrues to the SAF mass only.
All money is USD per kg of SAF unless stated otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import TYPE_CHECKING

from . import carbon as carbon_model
from .currency import USD
from .datasets import (
    Commodity,
    DatasetBundle,
    Route,
    average_price,
    to_usd,
)
from .errors import SafscenError

if TYPE_CHECKING:
    from .scenario import IncentivePackage

#: Order of margin-lever deltas in waterfalls and decompositions.
LEVER_ORDER = ("tax_discount", "carbon_price", "saf_premium", "byproduct_premium")


@dataclass(frozen=True)
class CostLine:
    """One consumed commodity: pre-tax cost and tax, both per kg of SAF."""

    commodity: Commodity
    quantity: float
    unit_price: float
    pre_tax_cost: float
    tax_cost: float

    def to_dict(self) -> dict:
        return {
            "commodity": self.commodity.value,
            "quantity": self.quantity,
            "unit_price": self.unit_price,
            "pre_tax_cost": self.pre_tax_cost,
            "tax_cost": self.tax_cost,
        }


@dataclass(frozen=True)
class CostBreakdown:
    route: Route
    lines: tuple[CostLine, ...]
    other_variable: float
    other_variable_tax: float
    total_variable: float
    currency: str = USD

    @property
    def tax_total(self) -> float:
        return sum(line.tax_cost for line in self.lines) + self.other_variable_tax

    def to_dict(self) -> dict:
        return {
            "lines": [line.to_dict() for line in self.lines],
            "other_variable": self.other_variable,
            "other_variable_tax": self.other_variable_tax,
            "total_variable": self.total_variable,
        }


@dataclass(frozen=True)
class RevenueStatement:
    saf_revenue: float
    byproduct_revenue: float
    carbon_revenue: float
    total: float
    currency: str = USD

    def to_dict(self) -> dict:
        return {
            "saf": self.saf_revenue,
            "byproduct": self.byproduct_revenue,
            "carbon": self.carbon_revenue,
            "total": self.total,
        }


@dataclass(frozen=True)
class MarginStatement:
    route: Route
    revenue: RevenueStatement
    cost: CostBreakdown
    contribution_margin: float
    fixed_cost: float
    net_margin: float
    currency: str = USD

    def to_dict(self) -> dict:
        return {
            "route": self.route.value,
            "currency": self.currency,
            "revenue": self.revenue.to_dict(),
            "cost": self.cost.to_dict(),
            "contribution_margin": self.contribution_margin,
            "fixed_cost": self.fixed_cost,
            "net_margin": self.net_margin,
        }


def cost_basis_price(
    bundle: DatasetBundle,
    commodity: Commodity,
    source: str = "table9",
    years: tuple[int, int] | None = None,
) -> float:
    """USD unit price entering the cost lines (override > stripped market mean)."""
    override = bundle.cost_model.price_overrides_usd.get(commodity)
    if override is not None:
        return override
    book = bundle.price_book(source)
    listed = to_usd(average_price(book, commodity, years), book.fx)
    if bundle.cost_model.strip_embedded_federal_taxes:
        listed *= 1.0 - bundle.taxes.for_commodity(commodity).federal
    return listed


def market_price_usd(
    bundle: DatasetBundle,
    commodity: Commodity,
    source: str = "table9",
    years: tuple[int, int] | None = None,
) -> float:
    """Listed market mean in USD, used on the revenue side (no stripping)."""
    book = bundle.price_book(source)
    return to_usd(average_price(book, commodity, years), book.fx)


def variable_cost(
    bundle: DatasetBundle,
    route: Route,
    source: str = "table9",
    tax_discount: float = 0.0,
    include_other_variable: bool = True,
    years: tuple[int, int] | None = None,
) -> CostBreakdown:
    """Full variable cost: one line per consumed commodity plus route constants.

    ``tax_discount`` scales every tax component by (1 - discount); at 1.0 all
    tax fields are exactly zero and the total is the pre-tax cost alone.
    ``include_other_variable=False`` drops the non-feedstock constants to
    reproduce the feedstock-and-energy-only historical comparison.
    """
    if not 0.0 <= tax_discount <= 1.0:
        raise SafscenError(f"tax_discount {tax_discount} outside [0, 1]")
    spec = bundle.yield_spec(route)
    relief = 1.0 - tax_discount
    lines = []
    for commodity in spec.consumed():
        quantity = spec.consumption[commodity]
        unit_price = cost_basis_price(bundle, commodity, source, years)
        pre_tax = quantity * unit_price
        rate = bundle.taxes.for_commodity(commodity).effective
        tax = 0.0 if tax_discount == 1.0 else pre_tax * rate * relief
        lines.append(CostLine(commodity, quantity, unit_price, pre_tax, tax))
    if include_other_variable:
        other = spec.other_variable_cost
        other_tax = 0.0 if tax_discount == 1.0 else spec.other_variable_tax * relief
    else:
        other = other_tax = 0.0
    total = sum(line.pre_tax_cost + line.tax_cost for line in lines)
    total += other
    total += other_tax
    return CostBreakdown(
        route=route,
        lines=tuple(lines),
        other_variable=other,
        other_variable_tax=other_tax,
        total_variable=total,
    )


def revenue(
    bundle: DatasetBundle,
    route: Route,
    source: str = "table9",
    saf_premium: float = 0.0,
    byproduct_premium: float = 0.0,
    carbon_revenue: float = 0.0,
    years: tuple[int, int] | None = None,
) -> RevenueStatement:
    """SAF at jet-fuel price, by-products at naphtha price, premiums multiplicative.

    ``carbon_revenue`` is USD per kg SAF, supplied by the carbon model.
    """
    if saf_premium < 0 or byproduct_premium < 0:
        raise SafscenError("premiums must be >= 0")
    if carbon_revenue < 0:
        raise SafscenError("carbon_revenue must be >= 0")
    spec = bundle.yield_spec(route)
    saf = market_price_usd(bundle, Commodity.JET_FUEL, source, years) * (1.0 + saf_premium)
    byproduct = (
        market_price_usd(bundle, Commodity.NAPHTHA, source, years)
        * (1.0 + byproduct_premium)
        * spec.byproduct_yield
    )
    return RevenueStatement(
        saf_revenue=saf,
        byproduct_revenue=byproduct,
        carbon_revenue=carbon_revenue,
        total=saf + byproduct + carbon_revenue,
    )


def carbon_credit_usd_per_kg(
    bundle: DatasetBundle, route: Route, carbon_price_brl_per_t: float
) -> float:
    """Per-kg credit revenue for a route at a BRL carbon price, converted to USD."""
    ci = bundle.carbon
    abatement = carbon_model.abatement_per_kg(
        ci.for_route(route), ci.fossil_jet, ci.lhv_mj_per_kg
    )
    credit_brl = carbon_model.credit_revenue(abatement, carbon_price_brl_per_t)
    return to_usd(credit_brl, bundle.fx)


def margin(
    bundle: DatasetBundle,
    route: Route,
    package: "IncentivePackage",
    source: str = "table9",
    years: tuple[int, int] | None = None,
) -> MarginStatement:
    """Margin statement under an incentive package.

    The capital grant does not touch the margin; it enters the DCF only.
    """
    package.validate()
    cost = variable_cost(bundle, route, source, tax_discount=package.tax_discount,
                         years=years)
    rev = revenue(
        bundle, route, source,
        saf_premium=package.saf_premium,
        byproduct_premium=package.byproduct_premium,
        carbon_revenue=carbon_credit_usd_per_kg(bundle, route, package.carbon_price),
        years=years,
    )
    contribution = rev.total - cost.total_variable
    fixed = bundle.finance.fixed_cost_per_kg
    return MarginStatement(
        route=route,
        revenue=rev,
        cost=cost,
        contribution_margin=contribution,
        fixed_cost=fixed,
        net_margin=contribution - fixed,
    )


def margin_waterfall(
    bundle: DatasetBundle,
    route: Route,
    package: "IncentivePackage",
    source: str = "table9",
    years: tuple[int, int] | None = None,
) -> tuple[tuple[str, float], ...]:
    """Baseline contribution margin plus one additive delta per margin lever.

    All four levers act additively on the margin, so the deltas sum exactly to
    margin(package) - margin(baseline).
    """
    from .scenario import BASE  # local import to avoid a module cycle

    base_margin = margin(bundle, route, BASE, source, years).contribution_margin
    steps: list[tuple[str, float]] = [("baseline", base_margin)]
    for lever in LEVER_ORDER:
        single = replace(BASE, **{lever: getattr(package, lever)})
        delta = margin(bundle, route, single, source, years).contribution_margin - base_margin
        steps.append((lever, delta))
    return tuple(steps)
