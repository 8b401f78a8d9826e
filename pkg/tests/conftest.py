"""Shared fixtures and independent oracle data.

The tables below are deliberately duplicated from the published sources
rather than read from the bundled CSVs, so tests recompute expectations
through a second, independent path.
"""

from __future__ import annotations

import shutil

import pytest

from safscen import Route, load_bundle
from safscen.costs import CostBreakdown, MarginStatement, RevenueStatement

# Listed market prices, BRL per kg (electricity per kWh), 2021-2024 averages basis.
ORACLE_TABLE9 = {
    "ethanol":     [4.37, 4.37, 3.55, 3.44],
    "soy_oil":     [6.59, 7.82, 5.38, 5.05],
    "jet_fuel":    [4.17, 7.20, 6.16, 5.75],
    "naphtha":     [5.17, 6.59, 4.50, 4.20],
    "hydrogen":    [6.90, 6.90, 6.90, 7.55],
    "natural_gas": [0.82, 1.25, 0.75, 0.75],
    "electricity": [0.49, 0.52, 0.54, 0.57],
}

# Yearly market prices 2014-2024.
ORACLE_TABLE7 = {
    "ethanol":     [1.57, 1.70, 2.11, 1.91, 2.08, 2.19, 2.26, 3.71, 3.70, 3.01, 2.92],
    "soy_oil":     [2.04, 2.30, 2.49, 2.45, 2.65, 2.63, 3.54, 6.59, 7.82, 5.38, 5.05],
    "jet_fuel":    [2.42, 2.04, 1.77, 2.00, 2.76, 2.78, 2.33, 3.58, 6.10, 5.22, 4.88],
    "naphtha":     [2.55, 2.10, 1.77, 2.05, 3.02, 2.72, 2.44, 4.36, 5.60, 3.83, 3.56],
    "hydrogen":    [5.84] * 10 + [6.40],
    "natural_gas": [0.41, 0.32, 0.42, 0.38, 0.46, 0.40, 0.34, 0.69, 1.06, 0.63, 0.63],
    "electricity": [0.39, 0.42, 0.40, 0.35, 0.40, 0.38, 0.36, 0.41, 0.44, 0.46, 0.48],
}

# (icms, pis, cofins); hydrogen follows the ethanol/natural-gas pattern.
ORACLE_TAXES = {
    "soy_oil":     (0.12, 0.0165, 0.076),
    "ethanol":     (0.18, 0.0186, 0.086),
    "hydrogen":    (0.18, 0.0186, 0.086),
    "natural_gas": (0.18, 0.0186, 0.086),
    "electricity": (0.18, 0.0165, 0.076),
    "jet_fuel":    (0.18, 0.0165, 0.076),
    "naphtha":     (0.18, 0.0165, 0.076),
}

# Consumption per kg SAF; (other variable cost, its tax), USD/kg; by-product yield.
ORACLE_CONSUMPTION = {
    "hefa": {"soy_oil": 2.02, "hydrogen": 0.08, "electricity": 0.71, "natural_gas": 0.8926},
    "atj":  {"ethanol": 3.2411, "hydrogen": 0.0398, "electricity": 0.2377, "natural_gas": 0.1897},
}
ORACLE_OTHER_VARIABLE = {"hefa": (0.28, 0.05), "atj": (0.10, 0.02)}
ORACLE_BYPRODUCT_YIELD = {"hefa": 0.82, "atj": 0.8961}

ORACLE_FX = 5.20
ORACLE_H2_OVERRIDE_USD = 0.10
ORACLE_FIXED_COST = 0.04
ORACLE_CI = {"fossil_jet": 89.0, "hefa": 42.9, "atj": 36.0}
ORACLE_LHV = 43.8

# Demand milestones, kt/y: {(year, policy, bound): volume}.
ORACLE_DEMAND = {
    (2027, "corsia", "lower"): 721.6,   (2027, "corsia", "higher"): 2307.2,
    (2027, "probioqav", "lower"): 32.0, (2027, "probioqav", "higher"): 100.8,
    (2027, "total", "lower"): 753.6,    (2027, "total", "higher"): 2408.0,
    (2029, "corsia", "lower"): 949.6,   (2029, "corsia", "higher"): 2992.0,
    (2029, "probioqav", "lower"): 112.8, (2029, "probioqav", "higher"): 356.8,
    (2029, "total", "lower"): 1062.4,   (2029, "total", "higher"): 3348.8,
    (2034, "corsia", "lower"): 1347.2,  (2034, "corsia", "higher"): 4244.0,
    (2034, "probioqav", "lower"): 292.8, (2034, "probioqav", "higher"): 921.6,
    (2034, "total", "lower"): 1640.0,   (2034, "total", "higher"): 5165.6,
    (2037, "corsia", "lower"): 1864.8,  (2037, "corsia", "higher"): 5874.4,
    (2037, "probioqav", "lower"): 444.8, (2037, "probioqav", "higher"): 1400.0,
    (2037, "total", "lower"): 2309.6,   (2037, "total", "higher"): 7274.4,
}


def oracle_mean(values):
    return sum(values) / len(values)


def oracle_listed_usd(commodity: str) -> float:
    return oracle_mean(ORACLE_TABLE9[commodity]) / ORACLE_FX


def oracle_effective_rate(commodity: str) -> float:
    icms, pis, cofins = ORACLE_TAXES[commodity]
    return icms + pis + cofins


def oracle_cost_basis_usd(commodity: str) -> float:
    if commodity == "hydrogen":
        return ORACLE_H2_OVERRIDE_USD
    icms, pis, cofins = ORACLE_TAXES[commodity]
    return oracle_listed_usd(commodity) * (1.0 - pis - cofins)


def oracle_variable_cost(route: str, tax_discount: float = 0.0) -> float:
    total = 0.0
    for commodity, quantity in ORACLE_CONSUMPTION[route].items():
        basis = oracle_cost_basis_usd(commodity)
        pre = quantity * basis
        total += pre + pre * oracle_effective_rate(commodity) * (1.0 - tax_discount)
    other, other_tax = ORACLE_OTHER_VARIABLE[route]
    return total + other + other_tax * (1.0 - tax_discount)


def oracle_tax_sum(route: str) -> float:
    total = 0.0
    for commodity, quantity in ORACLE_CONSUMPTION[route].items():
        basis = oracle_cost_basis_usd(commodity)
        total += quantity * basis * oracle_effective_rate(commodity)
    return total + ORACLE_OTHER_VARIABLE[route][1]


def oracle_revenue(route: str, saf_premium: float = 0.0, byproduct_premium: float = 0.0,
                   carbon_usd: float = 0.0) -> float:
    saf = oracle_listed_usd("jet_fuel") * (1.0 + saf_premium)
    byproduct = (oracle_listed_usd("naphtha") * (1.0 + byproduct_premium)
                 * ORACLE_BYPRODUCT_YIELD[route])
    return saf + byproduct + carbon_usd


def oracle_abatement(route: str) -> float:
    return (ORACLE_CI["fossil_jet"] - ORACLE_CI[route]) * ORACLE_LHV * 1e-6


def oracle_carbon_usd(route: str, price_brl_per_t: float) -> float:
    return oracle_abatement(route) * price_brl_per_t / ORACLE_FX


def oracle_net_margin(route: str, tax_discount=0.0, carbon_price=0.0,
                      saf_premium=0.0, byproduct_premium=0.0) -> float:
    revenue = oracle_revenue(route, saf_premium, byproduct_premium,
                             oracle_carbon_usd(route, carbon_price))
    return revenue - oracle_variable_cost(route, tax_discount) - ORACLE_FIXED_COST


def oracle_annuity(rate: float, n: int) -> float:
    # Explicit discounted sum, independent of the closed form under test.
    return sum(1.0 / (1.0 + rate) ** t for t in range(1, n + 1))


def make_margin(net_margin: float, route: Route = Route.HEFA,
                currency: str = "usd") -> MarginStatement:
    """Minimal margin statement for finance-level tests."""
    return MarginStatement(
        route=route,
        revenue=RevenueStatement(0.0, 0.0, 0.0, 0.0, currency=currency),
        cost=CostBreakdown(route, (), 0.0, 0.0, 0.0, currency=currency),
        contribution_margin=net_margin,
        fixed_cost=0.0,
        net_margin=net_margin,
        currency=currency,
    )


@pytest.fixture(scope="session")
def bundle():
    return load_bundle()


@pytest.fixture
def bundle_dir_copy(tmp_path):
    """Writable copy of the embedded bundle directory for mutation tests."""
    from safscen.datasets import default_bundle_dir

    target = tmp_path / "bundle"
    shutil.copytree(default_bundle_dir(), target)
    return target
