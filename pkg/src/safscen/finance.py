"""Discounted-cash-flow engine: annuity factors, NPV, IRR, reverse DCF.

The project model is deliberately flat: a constant real margin over the plant
life, CAPEX at t = 0, no residual value, no perpetuity and no construction
period. Under those assumptions NPV inverts in closed form, which is what
``max_capex`` exploits: the largest investment a margin can pay back at the
given WACC is FCF x annuity_factor(wacc, life).

Depreciation and income-tax shields are not modeled; a single ``revenue_tax``
fraction (default 0) is the only profit-tax hook.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .currency import USD, FxRate
from .errors import CurrencyMixError

#: Root bracket searched by :func:`irr`.
IRR_BRACKET = (-0.99, 10.0)


@dataclass(frozen=True)
class FinancialAssumptions:
    """Plant-level assumptions for the reverse DCF."""

    wacc: float = 0.12
    life: int = 20
    capacity_kt: float = 300.0
    fx: FxRate = FxRate(5.20)
    revenue_tax: float = 0.0
    capital_grant: float = 0.0
    fixed_cost_per_kg: float = 0.04
    currency: str = USD

    def with_grant(self, grant: float) -> "FinancialAssumptions":
        return replace(self, capital_grant=grant)


@dataclass(frozen=True)
class CashFlowSeries:
    """Cash flows for years 1..life; year 0 is reserved for -CAPEX + grant."""

    flows: tuple[float, ...]
    currency: str = USD

    @classmethod
    def flat(cls, value: float, life: int, currency: str = USD) -> "CashFlowSeries":
        if life < 1:
            raise ValueError("life must be >= 1 year")
        return cls(flows=(value,) * life, currency=currency)


@dataclass(frozen=True)
class DcfResult:
    """Reverse-DCF outcome. ``irr`` is None when the flows never change sign."""

    npv: float
    irr: float | None
    max_capex: float
    currency: str = USD

    def to_dict(self) -> dict:
        return {
            "npv": self.npv,
            "irr": self.irr,
            "max_capex": self.max_capex,
            "currency": self.currency,
        }


def annuity_factor(rate: float, n: int) -> float:
    """Present value of 1 per year for n years: (1 - (1+rate)^-n) / rate.

    Exactly n at rate 0 (the zero-rate limit of the closed form). Evaluated
    via expm1/log1p so tiny rates keep full precision.
    """
    if n < 1:
        raise ValueError("n must be >= 1 year")
    if rate < 0:
        raise ValueError("rate must be >= 0")
    if rate == 0:
        return float(n)
    return -math.expm1(-n * math.log1p(rate)) / rate


def npv(capex: float, grant: float, flows: CashFlowSeries, rate: float) -> float:
    """-(capex - grant) + sum of discounted flows, years 1..life."""
    total = -(capex - grant)
    for t, flow in enumerate(flows.flows, start=1):
        total += flow / (1.0 + rate) ** t
    return total


def irr(capex: float, flows: CashFlowSeries) -> float | None:
    """Rate at which npv(capex, 0, flows, rate) = 0, or None without a sign change.

    Bracketed on [-0.99, 10]: a few secant steps for speed, bisection whenever
    the secant leaves the bracket, until |npv| <= 1e-6 x capex. Flat series
    have at most one sign change, hence at most one root.
    """
    lo, hi = IRR_BRACKET
    f = lambda r: npv(capex, 0.0, flows, r)
    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        return None
    tol = 1e-6 * abs(capex) if capex != 0 else 1e-12
    x0, x1, f0, f1 = lo, hi, f_lo, f_hi
    best, f_best = x1, f_hi
    for _ in range(300):
        # Secant proposal, clamped to the live bracket [lo, hi].
        if f1 != f0:
            x2 = x1 - f1 * (x1 - x0) / (f1 - f0)
        else:
            x2 = 0.5 * (lo + hi)
        if not (lo < x2 < hi):
            x2 = 0.5 * (lo + hi)
        f2 = f(x2)
        if abs(f2) < abs(f_best):
            best, f_best = x2, f2
        # Keep refining past the npv tolerance until the rate itself is tight.
        if abs(f2) <= tol and hi - lo <= 1e-9:
            return x2
        if (f2 > 0) == (f_lo > 0):
            lo, f_lo = x2, f2
        else:
            hi, f_hi = x2, f2
        x0, f0, x1, f1 = x1, f1, x2, f2
        if hi - lo < 1e-14:
            break
    return best


def annual_free_cash_flow(margin, fin: FinancialAssumptions) -> float:
    """Yearly cash from a per-kg margin statement at the plant's capacity."""
    if margin.currency != fin.currency:
        raise CurrencyMixError(
            f"margin is in {margin.currency} but assumptions are in {fin.currency}"
        )
    kg_per_year = fin.capacity_kt * 1e6
    return margin.net_margin * kg_per_year * (1.0 - fin.revenue_tax)


def max_capex(margin, fin: FinancialAssumptions) -> float:
    """Largest CAPEX with NPV = 0 at the assumed WACC, grant included.

    Negative values mean even a zero-CAPEX plant destroys value: a capital
    grant of at least that magnitude would be needed to reach NPV = 0.
    """
    fcf = annual_free_cash_flow(margin, fin)
    return fcf * annuity_factor(fin.wacc, fin.life) + fin.capital_grant


def grant_needed(margin, fin: FinancialAssumptions, reference_capex: float) -> float:
    """Grant required to fund `reference_capex` given what the margin can pay back."""
    affordable = max_capex(margin, fin.with_grant(0.0))
    return max(0.0, reference_capex - affordable)
