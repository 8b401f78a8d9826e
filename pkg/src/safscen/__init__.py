"""safscen: techno-economic scenario engine for SAF production in Brazil.

Compares the soybean HEFA-SPK and 1G-ethanol alcohol-to-jet routes on
variable cost, contribution margin, carbon-credit revenue and reverse
discounted cash flow, and evaluates incentive packages (input-tax relief,
carbon price, price premiums, capital grants) against the bundled Brazilian
market dataset.
"""

from .carbon import CarbonIntensitySet, abatement_per_kg, cbio_count, credit_revenue
from .costs import (
    CostBreakdown,
    CostLine,
    MarginStatement,
    RevenueStatement,
    margin,
    margin_waterfall,
    revenue,
    variable_cost,
)
from .currency import FxRate
from .datasets import (
    Commodity,
    DatasetBundle,
    PriceBook,
    PriceRecord,
    Route,
    TaxRates,
    TaxSchedule,
    YieldSpec,
    average_price,
    effective_tax_rate,
    load_bundle,
    to_usd,
)
from .demand import (
    DemandRecord,
    DemandTable,
    InvestmentEnvelope,
    byproduct_volume,
    demand_at,
)
from .errors import (
    BundleError,
    BundleIOError,
    CurrencyMixError,
    DemandRangeError,
    GridError,
    PackageBoundsError,
    PackageSchemaError,
    PriceLookupError,
    SafscenError,
)
from .finance import (
    CashFlowSeries,
    DcfResult,
    FinancialAssumptions,
    annuity_factor,
    grant_needed,
    irr,
    max_capex,
    npv,
)
from .reproduce import ReproductionReport, build_report
from .scenario import (
    BASE,
    S1,
    S2,
    SCENARIOS,
    EvaluationResult,
    IncentivePackage,
    SweepSpec,
    decompose,
    evaluate,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "BASE", "S1", "S2", "SCENARIOS",
    "BundleError", "BundleIOError", "PackageSchemaError",
    "CarbonIntensitySet", "CashFlowSeries", "Commodity",
    "CostBreakdown", "CostLine", "CurrencyMixError", "DatasetBundle",
    "DcfResult", "DemandRangeError", "DemandRecord", "DemandTable",
    "EvaluationResult", "FinancialAssumptions", "FxRate", "GridError",
    "IncentivePackage", "InvestmentEnvelope", "MarginStatement",
    "PackageBoundsError", "PriceBook", "PriceLookupError", "PriceRecord",
    "ReproductionReport", "RevenueStatement", "Route", "SafscenError",
    "SweepSpec", "TaxRates", "TaxSchedule", "YieldSpec",
    "abatement_per_kg", "annuity_factor", "average_price", "build_report",
    "byproduct_volume", "cbio_count", "credit_revenue", "decompose",
    "demand_at", "effective_tax_rate", "evaluate", "grant_needed", "irr",
    "load_bundle", "margin", "margin_waterfall", "max_capex", "npv",
    "revenue", "sweep", "to_usd", "variable_cost",
]
