"""Exogenous datasets: prices, taxes, yields, carbon intensities, financial constants.

Everything the engine computes is derived from a :class:`DatasetBundle`, an
immutable snapshot of the input tables loaded from a bundle directory (or the
embedded default). Two price books are bundled side by side because the
underlying sources disagree for overlapping years:

* ``table7`` - yearly Brazilian market prices 2014-2024, used for the
  historical cost comparison;
* ``table9`` - the 2021-2024 averages that anchor the incentive analysis.

Prices are stored as listed (tax-inclusive) BRL per kg, except electricity,
which is priced per kWh. Currency conversion and the stripping of embedded
federal levies happen downstream in the cost model, never at ingestion.
"""

from __future__ import annotations

import csv
import hashlib
import json
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from enum import Enum
from importlib import resources
from pathlib import Path

from .carbon import CarbonIntensitySet
from .currency import FxRate
from .demand import DemandRecord, DemandTable, InvestmentData, load_investment
from .errors import BundleError, BundleIOError, PriceLookupError
from .finance import FinancialAssumptions

BUNDLE_VERSION = 1

#: Year range enforced for the bundled (non-user) datasets.
BUNDLED_YEAR_RANGE = (2014, 2024)


class Commodity(str, Enum):
    """Closed set of priced commodities. Unknown identifiers are rejected at ingestion."""

    SOY_OIL = "soy_oil"
    ETHANOL = "ethanol"
    HYDROGEN = "hydrogen"
    NATURAL_GAS = "natural_gas"
    ELECTRICITY = "electricity"
    JET_FUEL = "jet_fuel"
    NAPHTHA = "naphtha"
    SAF = "saf"

    @property
    def base_unit(self) -> str:
        # Electricity is the only commodity priced per kWh.
        return "kWh" if self is Commodity.ELECTRICITY else "kg"


class Route(str, Enum):
    HEFA = "hefa"
    ATJ = "atj"


#: Feedstock each route consumes; the other route's feedstock must be absent.
ROUTE_FEEDSTOCK = {Route.HEFA: Commodity.SOY_OIL, Route.ATJ: Commodity.ETHANOL}

#: Stable ordering for cost lines and serialized output.
COMMODITY_ORDER = [
    Commodity.SOY_OIL,
    Commodity.ETHANOL,
    Commodity.ELECTRICITY,
    Commodity.HYDROGEN,
    Commodity.NATURAL_GAS,
    Commodity.JET_FUEL,
    Commodity.NAPHTHA,
    Commodity.SAF,
]

PRICE_SOURCES = ("table7", "table9", "user")


@dataclass(frozen=True)
class PriceRecord:
    year: int
    commodity: Commodity
    value: float
    currency: str
    source: str


@dataclass(frozen=True)
class PriceBook:
    """Per-year commodity prices from a single source, keyed by (year, commodity)."""

    source: str
    records: tuple[PriceRecord, ...]
    fx: FxRate

    def __post_init__(self):
        seen = set()
        for rec in self.records:
            key = (rec.year, rec.commodity)
            if key in seen:
                raise BundleError(
                    f"{self.source}: duplicate price for {rec.commodity.value} {rec.year}"
                )
            seen.add(key)
        object.__setattr__(self, "_index", {(r.year, r.commodity): r for r in self.records})

    def years(self, commodity: Commodity) -> list[int]:
        return sorted(r.year for r in self.records if r.commodity is commodity)

    def year_range(self) -> tuple[int, int]:
        years = sorted({r.year for r in self.records})
        return (years[0], years[-1])

    def commodities(self) -> list[Commodity]:
        present = {r.commodity for r in self.records}
        return [c for c in COMMODITY_ORDER if c in present]

    def price(self, year: int, commodity: Commodity) -> float:
        """Listed BRL price for one year; raises PriceLookupError naming the gap."""
        rec = self._index.get((year, commodity))
        if rec is None:
            raise PriceLookupError(
                f"{self.source}: no price for {commodity.value} in {year}"
            )
        return rec.value


@dataclass(frozen=True)
class TaxRates:
    """Rates applying to one commodity; effective burden is ICMS + PIS + COFINS."""

    icms: float
    pis: float
    cofins: float
    cide_per_liter: float = 0.0

    @property
    def effective(self) -> float:
        return self.icms + self.pis + self.cofins

    @property
    def federal(self) -> float:
        # PIS + COFINS, the share already embedded in listed market prices.
        return self.pis + self.cofins


@dataclass(frozen=True)
class TaxSchedule:
    rates: dict[str, TaxRates]

    def __post_init__(self):
        for name, r in self.rates.items():
            for label, v in (("icms", r.icms), ("pis", r.pis), ("cofins", r.cofins)):
                if not 0.0 <= v < 0.5:
                    raise BundleError(f"taxes: {name} {label}={v} outside [0, 0.5)")

    def for_commodity(self, commodity: Commodity) -> TaxRates:
        try:
            return self.rates[commodity.value]
        except KeyError:
            raise BundleError(f"taxes: no schedule entry for {commodity.value}") from None


@dataclass(frozen=True)
class YieldSpec:
    """Specific consumptions and by-product yield per kg of SAF for one route."""

    route: Route
    consumption: dict[Commodity, float]
    byproduct_yield: float
    other_variable_cost: float
    other_variable_tax: float

    def __post_init__(self):
        for c, q in self.consumption.items():
            if q < 0:
                raise BundleError(f"yields: {self.route.value} {c.value} consumption is negative")
        for label, v in (
            ("byproduct_yield", self.byproduct_yield),
            ("other_variable_cost", self.other_variable_cost),
            ("other_variable_tax", self.other_variable_tax),
        ):
            if v < 0:
                raise BundleError(f"yields: {self.route.value} {label} is negative")
        other = ROUTE_FEEDSTOCK[Route.ATJ if self.route is Route.HEFA else Route.HEFA]
        if other in self.consumption:
            raise BundleError(
                f"yields: {self.route.value} must not consume {other.value}"
            )
        if ROUTE_FEEDSTOCK[self.route] not in self.consumption:
            raise BundleError(
                f"yields: {self.route.value} missing feedstock "
                f"{ROUTE_FEEDSTOCK[self.route].value}"
            )

    def consumed(self) -> list[Commodity]:
        return [c for c in COMMODITY_ORDER if c in self.consumption]


@dataclass(frozen=True)
class CostModelConfig:
    """Knobs reproducing the published per-kg cost accounting.

    ``strip_embedded_federal_taxes`` removes the PIS/COFINS share from listed
    market prices before costing; the published unit-price column equals
    mean(listed)/fx * (1 - PIS - COFINS) for every input commodity except
    hydrogen, which the published DCF table prices at 0.10 USD/kg flat
    (``price_overrides_usd``) in contradiction with its own market-price table.
    """

    strip_embedded_federal_taxes: bool = True
    price_overrides_usd: dict[Commodity, float] = field(default_factory=dict)


@dataclass(frozen=True)
class DatasetBundle:
    """Immutable, validated snapshot of every exogenous dataset.

    Safe for unlimited concurrent readers once loaded.
    """

    version: int
    price_books: dict[str, PriceBook]
    taxes: TaxSchedule
    yields: dict[Route, YieldSpec]
    carbon: CarbonIntensitySet
    finance: FinancialAssumptions
    cost_model: CostModelConfig
    demand: DemandTable
    investment: InvestmentData
    targets: dict
    provenance: dict[str, str]

    @property
    def fx(self) -> FxRate:
        return self.price_books["table9"].fx

    def price_book(self, source: str) -> PriceBook:
        try:
            return self.price_books[source]
        except KeyError:
            raise BundleError(f"no price book named {source!r}") from None

    def yield_spec(self, route: Route) -> YieldSpec:
        return self.yields[route]

    def content_hash(self) -> str:
        """Stable hash of the bundle content, used as the service ETag."""
        payload = json.dumps(_bundle_to_jsonable(self), sort_keys=True)
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    def save(self, directory: str | Path) -> None:
        """Write the bundle back out in the documented directory layout."""
        save_bundle(self, directory)


# ---------------------------------------------------------------------------
# Core operations


def to_usd(amount_brl: float, fx: FxRate) -> float:
    """Convert BRL to USD by exact division; no rounding."""
    return amount_brl / fx.brl_per_usd


def to_brl(amount_usd: float, fx: FxRate) -> float:
    return amount_usd * fx.brl_per_usd


def average_price(
    book: PriceBook, commodity: Commodity, years: tuple[int, int] | None = None
) -> float:
    """Arithmetic mean of listed BRL prices over an inclusive year window.

    Defaults to the book's full span. Missing years raise
    :class:`PriceLookupError` naming the first gap.
    """
    if years is None:
        years = book.year_range()
    first, last = years
    if first > last:
        raise PriceLookupError(f"empty year window {first}-{last}")
    values = [book.price(y, commodity) for y in range(first, last + 1)]
    return sum(values) / len(values)


def effective_tax_rate(schedule: TaxSchedule, commodity: Commodity) -> float:
    """ICMS + PIS + COFINS for one commodity."""
    return schedule.for_commodity(commodity).effective


# ---------------------------------------------------------------------------
# Loading and validation


def default_bundle_dir() -> Path:
    return Path(str(resources.files("safscen").joinpath("data/default_bundle")))


def load_bundle(path: str | Path | None = None) -> DatasetBundle:
    """Load and validate a bundle directory; ``None`` loads the embedded default.

    Raises :class:`BundleError` naming the offending table/row on any schema or
    invariant violation.
    """
    directory = Path(path) if path is not None else default_bundle_dir()
    if not directory.is_dir():
        raise BundleIOError(f"bundle directory not found: {directory}")

    manifest = _read_json(directory, "bundle.json")
    version = manifest.get("bundle_version")
    if version != BUNDLE_VERSION:
        raise BundleError(f"bundle.json: unsupported bundle_version {version!r}")
    provenance = dict(manifest.get("provenance", {}))

    finance = _load_finance(directory)
    fx = FxRate(brl_per_usd=finance.fx.brl_per_usd)
    price_books = _load_prices(directory, fx)
    taxes = _load_taxes(directory)
    yields_by_route, cost_model = _load_yields(directory)
    carbon = _load_carbon(directory)
    demand = _load_demand(directory)
    investment = load_investment(_read_json(directory, "investment.json"))
    targets = _read_json(directory, "targets.json")

    _check_book_completeness(price_books)
    _check_cross_references(price_books, taxes, yields_by_route)

    return DatasetBundle(
        version=version,
        price_books=price_books,
        taxes=taxes,
        yields=yields_by_route,
        carbon=carbon,
        finance=finance,
        cost_model=cost_model,
        demand=demand,
        investment=investment,
        targets=targets,
        provenance=provenance,
    )


def _read_json(directory: Path, name: str) -> dict:
    path = directory / name
    if not path.is_file():
        raise BundleIOError(f"missing bundle file: {name}")
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as exc:
        raise BundleError(f"{name}: invalid JSON ({exc})") from exc


def _load_prices(directory: Path, fx: FxRate) -> dict[str, PriceBook]:
    path = directory / "prices.csv"
    if not path.is_file():
        raise BundleIOError("missing bundle file: prices.csv")
    by_source: dict[str, list[PriceRecord]] = {}
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        expected = ["year", "commodity", "value", "currency", "source"]
        if reader.fieldnames != expected:
            raise BundleError(f"prices.csv: header must be {','.join(expected)}")
        for i, row in enumerate(reader, start=2):
            try:
                year = int(row["year"])
                value = float(row["value"])
            except (TypeError, ValueError):
                raise BundleError(f"prices.csv row {i}: non-numeric year or value") from None
            try:
                commodity = Commodity(row["commodity"])
            except ValueError:
                raise BundleError(
                    f"prices.csv row {i}: unknown commodity {row['commodity']!r}"
                ) from None
            currency = row["currency"]
            if currency not in ("BRL", "USD"):
                raise BundleError(f"prices.csv row {i}: currency must be BRL or USD")
            source = row["source"]
            if source not in PRICE_SOURCES:
                raise BundleError(f"prices.csv row {i}: unknown source {source!r}")
            if not value > 0:
                raise BundleError(
                    f"prices.csv: non-positive price for ({year}, {commodity.value})"
                )
            if source != "user" and not (
                BUNDLED_YEAR_RANGE[0] <= year <= BUNDLED_YEAR_RANGE[1]
            ):
                raise BundleError(
                    f"prices.csv: year {year} outside "
                    f"{BUNDLED_YEAR_RANGE[0]}-{BUNDLED_YEAR_RANGE[1]} for source {source}"
                )
            by_source.setdefault(source, []).append(
                PriceRecord(year, commodity, value, currency, source)
            )
    return {
        source: PriceBook(source=source, records=tuple(records), fx=fx)
        for source, records in by_source.items()
    }


def _check_book_completeness(books: dict[str, PriceBook]) -> None:
    priced = [c for c in Commodity if c is not Commodity.SAF]
    spans = {"table7": range(2014, 2025), "table9": range(2021, 2025)}
    for source, span in spans.items():
        book = books.get(source)
        if book is None:
            raise BundleError(f"{source} incomplete: book missing entirely")
        for commodity in priced:
            have = set(book.years(commodity))
            missing = [y for y in span if y not in have]
            if missing:
                raise BundleError(
                    f"{source} incomplete: missing {commodity.value} {missing[0]}"
                )


def _load_taxes(directory: Path) -> TaxSchedule:
    path = directory / "taxes.csv"
    if not path.is_file():
        raise BundleIOError("missing bundle file: taxes.csv")
    known = {c.value for c in Commodity} | {"diesel"}  # diesel carried for CIDE only
    rates: dict[str, TaxRates] = {}
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        expected = ["commodity", "icms", "pis", "cofins", "cide_per_liter"]
        if reader.fieldnames != expected:
            raise BundleError(f"taxes.csv: header must be {','.join(expected)}")
        for i, row in enumerate(reader, start=2):
            name = row["commodity"]
            if name not in known:
                raise BundleError(f"taxes.csv row {i}: unknown commodity {name!r}")
            if name in rates:
                raise BundleError(f"taxes.csv row {i}: duplicate commodity {name!r}")
            try:
                rates[name] = TaxRates(
                    icms=float(row["icms"]),
                    pis=float(row["pis"]),
                    cofins=float(row["cofins"]),
                    cide_per_liter=float(row["cide_per_liter"]),
                )
            except ValueError:
                raise BundleError(f"taxes.csv row {i}: non-numeric rate") from None
    return TaxSchedule(rates=rates)


def _load_yields(directory: Path) -> tuple[dict[Route, YieldSpec], CostModelConfig]:
    data = _read_json(directory, "yields.json")
    routes = data.get("routes")
    if not isinstance(routes, dict):
        raise BundleError("yields.json: missing 'routes' object")
    specs: dict[Route, YieldSpec] = {}
    for route in Route:
        entry = routes.get(route.value)
        if entry is None:
            raise BundleError(f"yields.json: missing route {route.value}")
        try:
            consumption = {
                Commodity(name): float(q) for name, q in entry["consumption"].items()
            }
        except ValueError as exc:
            raise BundleError(f"yields.json: {route.value}: {exc}") from None
        except KeyError:
            raise BundleError(f"yields.json: {route.value} missing consumption") from None
        specs[route] = YieldSpec(
            route=route,
            consumption=consumption,
            byproduct_yield=float(entry["byproduct_yield"]),
            other_variable_cost=float(entry["other_variable_cost_usd_per_kg"]),
            other_variable_tax=float(entry["other_variable_tax_usd_per_kg"]),
        )
    cm = data.get("cost_model", {})
    overrides = {
        Commodity(name): float(v)
        for name, v in cm.get("price_overrides_usd_per_unit", {}).items()
    }
    config = CostModelConfig(
        strip_embedded_federal_taxes=bool(cm.get("strip_embedded_federal_taxes", True)),
        price_overrides_usd=overrides,
    )
    return specs, config


def _load_carbon(directory: Path) -> CarbonIntensitySet:
    data = _read_json(directory, "carbon.json")
    try:
        return CarbonIntensitySet(
            fossil_jet=float(data["fossil_jet"]),
            hefa=float(data["hefa"]),
            atj=float(data["atj"]),
            lhv_mj_per_kg=float(data["lhv_mj_per_kg"]),
        )
    except KeyError as exc:
        raise BundleError(f"carbon.json: missing key {exc}") from None
    except ValueError as exc:
        raise BundleError(f"carbon.json: {exc}") from exc


def _load_finance(directory: Path) -> FinancialAssumptions:
    data = _read_json(directory, "finance.json")
    try:
        fin = FinancialAssumptions(
            wacc=float(data["wacc"]),
            life=int(data["life_years"]),
            capacity_kt=float(data["capacity_kt_per_year"]),
            fx=FxRate(float(data["brl_per_usd"])),
            revenue_tax=float(data.get("revenue_tax", 0.0)),
            capital_grant=float(data.get("capital_grant", 0.0)),
            fixed_cost_per_kg=float(data.get("fixed_cost_usd_per_kg", 0.04)),
        )
    except KeyError as exc:
        raise BundleError(f"finance.json: missing key {exc}") from None
    if fin.wacc < 0:
        raise BundleError("finance.json: wacc must be >= 0")
    if fin.life < 1:
        raise BundleError("finance.json: life_years must be >= 1")
    return fin


def _load_demand(directory: Path) -> DemandTable:
    path = directory / "demand.csv"
    if not path.is_file():
        raise BundleIOError("missing bundle file: demand.csv")
    records: list[DemandRecord] = []
    raw: dict[tuple[int, str, str], Decimal] = {}
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        expected = ["year", "policy", "ci_bound", "volume_kt"]
        if reader.fieldnames != expected:
            raise BundleError(f"demand.csv: header must be {','.join(expected)}")
        for i, row in enumerate(reader, start=2):
            try:
                year = int(row["year"])
                exact = Decimal(row["volume_kt"])
            except (ValueError, InvalidOperation):
                raise BundleError(f"demand.csv row {i}: non-numeric field") from None
            policy, bound = row["policy"], row["ci_bound"]
            if policy not in ("corsia", "probioqav", "total"):
                raise BundleError(f"demand.csv row {i}: unknown policy {policy!r}")
            if bound not in ("lower", "higher"):
                raise BundleError(f"demand.csv row {i}: unknown ci_bound {bound!r}")
            key = (year, policy, bound)
            if key in raw:
                raise BundleError(f"demand.csv row {i}: duplicate entry {key}")
            raw[key] = exact
            records.append(
                DemandRecord(year=year, policy=policy, ci_bound=bound,
                             volume_kt=float(row["volume_kt"]))
            )
    table = DemandTable(records=tuple(records))
    # Additivity must hold exactly as published, hence the Decimal check.
    for (year, bound), total in table.grouped_totals().items():
        corsia = raw.get((year, "corsia", bound))
        probioqav = raw.get((year, "probioqav", bound))
        if corsia is None or probioqav is None or total is None:
            raise BundleError(f"demand.csv: incomplete milestone {year} {bound}")
        if corsia + probioqav != raw[(year, "total", bound)]:
            raise BundleError(
                f"demand.csv: total != corsia + probioqav for {year} {bound}"
            )
    return table


def _check_cross_references(
    books: dict[str, PriceBook],
    taxes: TaxSchedule,
    yields_by_route: dict[Route, YieldSpec],
) -> None:
    for route, spec in yields_by_route.items():
        for commodity in spec.consumed():
            taxes.for_commodity(commodity)
            for source in ("table7", "table9"):
                if commodity not in books[source].commodities():
                    raise BundleError(
                        f"{source}: no prices for consumed commodity {commodity.value}"
                    )
    for commodity in (Commodity.JET_FUEL, Commodity.NAPHTHA):
        taxes.for_commodity(commodity)


# ---------------------------------------------------------------------------
# Serialization (round-trips through load_bundle)


def save_bundle(bundle: DatasetBundle, directory: str | Path) -> None:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)

    with open(directory / "bundle.json", "w", encoding="utf-8") as f:
        json.dump(
            {"bundle_version": bundle.version, "provenance": bundle.provenance},
            f, indent=2, sort_keys=True)
        f.write("\n")

    with open(directory / "prices.csv", "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f)
        w.writerow(["year", "commodity", "value", "currency", "source"])
        for source in sorted(bundle.price_books):
            for rec in bundle.price_books[source].records:
                w.writerow([rec.year, rec.commodity.value, repr(rec.value),
                            rec.currency, rec.source])

    with open(directory / "taxes.csv", "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f)
        w.writerow(["commodity", "icms", "pis", "cofins", "cide_per_liter"])
        for name, r in bundle.taxes.rates.items():
            w.writerow([name, repr(r.icms), repr(r.pis), repr(r.cofins),
                        repr(r.cide_per_liter)])

    yields_doc = {
        "routes": {
            route.value: {
                "consumption": {c.value: q for c, q in spec.consumption.items()},
                "byproduct_yield": spec.byproduct_yield,
                "other_variable_cost_usd_per_kg": spec.other_variable_cost,
                "other_variable_tax_usd_per_kg": spec.other_variable_tax,
            }
            for route, spec in bundle.yields.items()
        },
        "cost_model": {
            "strip_embedded_federal_taxes": bundle.cost_model.strip_embedded_federal_taxes,
            "price_overrides_usd_per_unit": {
                c.value: v for c, v in bundle.cost_model.price_overrides_usd.items()
            },
        },
    }
    _dump_json(directory / "yields.json", yields_doc)

    _dump_json(directory / "carbon.json", {
        "fossil_jet": bundle.carbon.fossil_jet,
        "hefa": bundle.carbon.hefa,
        "atj": bundle.carbon.atj,
        "lhv_mj_per_kg": bundle.carbon.lhv_mj_per_kg,
    })

    _dump_json(directory / "finance.json", {
        "wacc": bundle.finance.wacc,
        "life_years": bundle.finance.life,
        "capacity_kt_per_year": bundle.finance.capacity_kt,
        "brl_per_usd": bundle.finance.fx.brl_per_usd,
        "revenue_tax": bundle.finance.revenue_tax,
        "capital_grant": bundle.finance.capital_grant,
        "fixed_cost_usd_per_kg": bundle.finance.fixed_cost_per_kg,
    })

    with open(directory / "demand.csv", "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f)
        w.writerow(["year", "policy", "ci_bound", "volume_kt"])
        for rec in bundle.demand.records:
            w.writerow([rec.year, rec.policy, rec.ci_bound, repr(rec.volume_kt)])

    _dump_json(directory / "investment.json", bundle.investment.to_dict())
    _dump_json(directory / "targets.json", bundle.targets)


def _dump_json(path: Path, obj: dict) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(obj, f, indent=2, sort_keys=True)
        f.write("\n")


def _bundle_to_jsonable(bundle: DatasetBundle) -> dict:
    return {
        "version": bundle.version,
        "prices": [
            [r.year, r.commodity.value, r.value, r.currency, r.source]
            for source in sorted(bundle.price_books)
            for r in bundle.price_books[source].records
        ],
        "taxes": {
            name: [r.icms, r.pis, r.cofins, r.cide_per_liter]
            for name, r in sorted(bundle.taxes.rates.items())
        },
        "yields": {
            route.value: {
                "consumption": {c.value: q for c, q in spec.consumption.items()},
                "byproduct_yield": spec.byproduct_yield,
                "other_variable": [spec.other_variable_cost, spec.other_variable_tax],
            }
            for route, spec in sorted(bundle.yields.items(), key=lambda kv: kv[0].value)
        },
        "cost_model": {
            "strip": bundle.cost_model.strip_embedded_federal_taxes,
            "overrides": {
                c.value: v for c, v in sorted(bundle.cost_model.price_overrides_usd.items())
            },
        },
        "carbon": [bundle.carbon.fossil_jet, bundle.carbon.hefa, bundle.carbon.atj,
                   bundle.carbon.lhv_mj_per_kg],
        "finance": [bundle.finance.wacc, bundle.finance.life, bundle.finance.capacity_kt,
                    bundle.finance.fx.brl_per_usd, bundle.finance.revenue_tax,
                    bundle.finance.capital_grant, bundle.finance.fixed_cost_per_kg],
        "demand": [
            [r.year, r.policy, r.ci_bound, r.volume_kt] for r in bundle.demand.records
        ],
        "investment": bundle.investment.to_dict(),
        "targets": bundle.targets,
        "provenance": bundle.provenance,
    }
