"""Incentive packages, named scenarios, case evaluation, sweeps and decomposition.

A package bundles the five policy levers: input-tax discount, carbon price,
SAF and by-product price premiums, and a one-time capital grant. The named
presets are ``base`` (no incentives), ``s1`` (50% tax relief, 200 BRL/t, 25%
premiums) and ``s2`` (full tax relief, 400 BRL/t, 50% premiums).

Evaluations are pure functions of (bundle, route, package, assumptions):
identical inputs serialize to identical bytes, and independent cases may be
evaluated concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from . import carbon as carbon_model
from . import costs, finance
from .datasets import DatasetBundle, Route
from .errors import GridError, PackageBoundsError, PackageSchemaError
from .finance import DcfResult, FinancialAssumptions

#: Margin levers in reporting order; the capital grant acts on CAPEX only.
MARGIN_LEVERS = costs.LEVER_ORDER


@dataclass(frozen=True)
class IncentivePackage:
    """The five policy levers; all zero means the unassisted base case."""

    tax_discount: float = 0.0
    carbon_price: float = 0.0  # BRL per tCO2e
    saf_premium: float = 0.0
    byproduct_premium: float = 0.0
    capital_grant: float = 0.0  # USD

    def validate(self) -> None:
        if not 0.0 <= self.tax_discount <= 1.0:
            raise PackageBoundsError(
                "tax_discount", f"tax_discount {self.tax_discount} outside [0, 1]"
            )
        for name in ("carbon_price", "saf_premium", "byproduct_premium", "capital_grant"):
            value = getattr(self, name)
            if value < 0:
                raise PackageBoundsError(name, f"{name} {value} must be >= 0")

    def to_dict(self) -> dict:
        return {
            "tax_discount": self.tax_discount,
            "carbon_price": self.carbon_price,
            "saf_premium": self.saf_premium,
            "byproduct_premium": self.byproduct_premium,
            "capital_grant": self.capital_grant,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "IncentivePackage":
        known = {"tax_discount", "carbon_price", "saf_premium",
                 "byproduct_premium", "capital_grant"}
        unknown = set(data) - known
        if unknown:
            raise PackageSchemaError(
                sorted(unknown)[0], f"unknown package field {sorted(unknown)[0]!r}"
            )
        values = {}
        for name in known:
            raw = data.get(name, 0.0)
            if isinstance(raw, bool) or not isinstance(raw, (int, float)):
                raise PackageSchemaError(name, f"{name} must be a number")
            values[name] = float(raw)
        package = cls(**values)
        package.validate()
        return package


BASE = IncentivePackage()
S1 = IncentivePackage(tax_discount=0.5, carbon_price=200.0,
                      saf_premium=0.25, byproduct_premium=0.25)
S2 = IncentivePackage(tax_discount=1.0, carbon_price=400.0,
                      saf_premium=0.5, byproduct_premium=0.5)

SCENARIOS: dict[str, IncentivePackage] = {"base": BASE, "s1": S1, "s2": S2}


def resolve_package(name_or_package: str | dict | IncentivePackage) -> tuple[str | None, IncentivePackage]:
    """Turn a scenario name, raw dict or package into (name, package)."""
    if isinstance(name_or_package, IncentivePackage):
        name_or_package.validate()
        named = next(
            (n for n, p in SCENARIOS.items() if p == name_or_package), None
        )
        return named, name_or_package
    if isinstance(name_or_package, str):
        try:
            return name_or_package, SCENARIOS[name_or_package]
        except KeyError:
            raise PackageSchemaError(
                "package", f"unknown scenario {name_or_package!r}"
            ) from None
    if isinstance(name_or_package, dict):
        package = IncentivePackage.from_dict(name_or_package)
        named = next((n for n, p in SCENARIOS.items() if p == package), None)
        return named, package
    raise PackageSchemaError("package", "package must be a name or an object")


@dataclass(frozen=True)
class Deviation:
    """Computed-vs-published comparison for one reproduction target."""

    target: str
    published: float
    computed: float

    @property
    def rel_error(self) -> float:
        scale = max(abs(self.published), abs(self.computed), 1e-30)
        return abs(self.computed - self.published) / scale

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "published": self.published,
            "computed": self.computed,
            "rel_error": self.rel_error,
        }


@dataclass(frozen=True)
class EvaluationResult:
    route: Route
    package: IncentivePackage
    package_name: str | None
    margin: costs.MarginStatement
    dcf: DcfResult
    waterfall: tuple[tuple[str, float], ...]
    annual_free_cash_flow: float
    cbios_per_year: float
    deviations: tuple[Deviation, ...]

    def to_dict(self) -> dict:
        return {
            "route": self.route.value,
            "package_name": self.package_name,
            "package": self.package.to_dict(),
            "margin": self.margin.to_dict(),
            "dcf": {
                **self.dcf.to_dict(),
                "annual_free_cash_flow": self.annual_free_cash_flow,
                "cbios_per_year": self.cbios_per_year,
            },
            "waterfall": [
                {"lever": lever, "delta": delta} for lever, delta in self.waterfall
            ],
            "deviations": [d.to_dict() for d in self.deviations],
        }


def evaluate(
    bundle: DatasetBundle,
    route: Route,
    package: str | dict | IncentivePackage,
    fin: FinancialAssumptions | None = None,
    source: str = "table9",
) -> EvaluationResult:
    """Full pipeline for one (route, package) case: margin, waterfall, reverse DCF.

    For the named scenarios the result also carries deviations against the
    published reverse-DCF table, which is a comparison target rather than a
    fit constraint (it cannot be re-derived from its own published inputs).
    """
    name, pkg = resolve_package(package)
    fin = fin if fin is not None else bundle.finance
    fin = fin.with_grant(pkg.capital_grant)

    stmt = costs.margin(bundle, route, pkg, source)
    waterfall = costs.margin_waterfall(bundle, route, pkg, source)
    fcf = finance.annual_free_cash_flow(stmt, fin)
    capex_limit = finance.max_capex(stmt, fin)

    reference_capex = bundle.targets["capex_reference_usd"]["ref27"][route.value]
    flows = finance.CashFlowSeries.flat(fcf, fin.life)
    npv_at_ref = finance.npv(reference_capex, fin.capital_grant, flows, fin.wacc)
    irr_at_ref = finance.irr(reference_capex - fin.capital_grant, flows)
    dcf = DcfResult(npv=npv_at_ref, irr=irr_at_ref, max_capex=capex_limit,
                    currency=fin.currency)

    ci = bundle.carbon
    abatement = carbon_model.abatement_per_kg(ci.for_route(route), ci.fossil_jet,
                                              ci.lhv_mj_per_kg)
    cbios = carbon_model.cbio_count(fin.capacity_kt, abatement)

    deviations = ()
    if name in SCENARIOS:
        published = bundle.targets["max_capex_usd"][route.value][name]
        deviations = (
            Deviation(target=f"max_capex_{name}_{route.value}",
                      published=published, computed=capex_limit),
        )
    return EvaluationResult(
        route=route,
        package=pkg,
        package_name=name,
        margin=stmt,
        dcf=dcf,
        waterfall=waterfall,
        annual_free_cash_flow=fcf,
        cbios_per_year=cbios,
        deviations=deviations,
    )


@dataclass(frozen=True)
class SweepSpec:
    """Inclusive, evenly spaced grid over one lever; other levers held fixed."""

    lever: str
    start: float
    stop: float
    steps: int
    fixed: IncentivePackage = field(default_factory=IncentivePackage)

    def __post_init__(self):
        if self.lever not in MARGIN_LEVERS and self.lever != "capital_grant":
            raise GridError(f"unknown lever {self.lever!r}")
        if self.steps < 2 or not self.start < self.stop:
            raise GridError(
                f"degenerate grid: need steps >= 2 and start < stop, "
                f"got steps={self.steps}, start={self.start}, stop={self.stop}"
            )

    def grid(self) -> list[float]:
        span = self.stop - self.start
        return [self.start + span * i / (self.steps - 1) for i in range(self.steps)]


@dataclass(frozen=True)
class SweepRow:
    value: float
    contribution_margin: float
    net_margin: float
    max_capex: float

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "contribution_margin": self.contribution_margin,
            "net_margin": self.net_margin,
            "max_capex": self.max_capex,
        }


def sweep(
    bundle: DatasetBundle,
    route: Route,
    spec: SweepSpec,
    fin: FinancialAssumptions | None = None,
    source: str = "table9",
) -> list[SweepRow]:
    """One evaluation per grid point, ordered by lever value.

    Points are independent; this runs them sequentially because a single
    evaluation is microseconds of arithmetic.
    """
    fin = fin if fin is not None else bundle.finance
    rows = []
    for value in spec.grid():
        package = replace(spec.fixed, **{spec.lever: value})
        package.validate()
        stmt = costs.margin(bundle, route, package, source)
        capex_limit = finance.max_capex(stmt, fin.with_grant(package.capital_grant))
        rows.append(SweepRow(
            value=value,
            contribution_margin=stmt.contribution_margin,
            net_margin=stmt.net_margin,
            max_capex=capex_limit,
        ))
    return rows


def decompose(
    bundle: DatasetBundle,
    route: Route,
    package: str | dict | IncentivePackage,
    source: str = "table9",
) -> list[tuple[str, float]]:
    """Isolated margin impact of each of the four margin levers.

    The grant is excluded (it acts on CAPEX, not margin). Because the margin
    is affine in every lever, the four deltas sum exactly to the composite
    margin change versus the base case.
    """
    _, pkg = resolve_package(package)
    steps = costs.margin_waterfall(bundle, route, pkg, source)
    return [(lever, delta) for lever, delta in steps if lever != "baseline"]
