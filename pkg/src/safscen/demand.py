"""Demand trajectories, by-product volume projections and investment envelopes.

The demand table carries the four published milestone years (2027, 2029, 2034,
2037) for the CORSIA and ProBioQAV reduction targets at a lower and a higher
carbon-intensity bound, in kt/y. Non-milestone years are served by linear
interpolation and explicitly tagged ``interpolated`` so derived numbers are
never mistaken for published ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal

from .errors import BundleError, DemandRangeError

POLICIES = ("corsia", "probioqav", "total")
CI_BOUNDS = ("lower", "higher")
HORIZON = (2027, 2037)


@dataclass(frozen=True)
class DemandRecord:
    year: int
    policy: str
    ci_bound: str
    volume_kt: float
    source: str = "paper"

    def to_dict(self) -> dict:
        return {
            "year": self.year,
            "policy": self.policy,
            "ci_bound": self.ci_bound,
            "volume_kt": self.volume_kt,
            "source": self.source,
        }


@dataclass(frozen=True)
class DemandTable:
    records: tuple[DemandRecord, ...]

    def __post_init__(self):
        index = {(r.year, r.policy, r.ci_bound): r for r in self.records}
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_years", sorted({r.year for r in self.records}))

    @property
    def milestone_years(self) -> list[int]:
        return list(self._years)

    def grouped_totals(self) -> dict[tuple[int, str], float | None]:
        out: dict[tuple[int, str], float | None] = {}
        for year in self._years:
            for bound in CI_BOUNDS:
                rec = self._index.get((year, "total", bound))
                out[(year, bound)] = rec.volume_kt if rec else None
        return out

    def at(self, year: int, policy: str, ci_bound: str,
           interpolate: bool = False) -> DemandRecord:
        """Demand in kt/y; exact at milestones, linear in between when allowed."""
        if policy not in POLICIES:
            raise DemandRangeError(f"unknown policy {policy!r}")
        if ci_bound not in CI_BOUNDS:
            raise DemandRangeError(f"unknown ci_bound {ci_bound!r}")
        if not HORIZON[0] <= year <= HORIZON[1]:
            raise DemandRangeError(
                f"year {year} outside {HORIZON[0]}-{HORIZON[1]}"
            )
        rec = self._index.get((year, policy, ci_bound))
        if rec is not None:
            return rec
        if not interpolate:
            raise DemandRangeError(
                f"{year} is not a published milestone; pass interpolate=True "
                f"for a linear estimate"
            )
        below = max(y for y in self._years if y < year)
        above = min(y for y in self._years if y > year)
        v0 = self._index[(below, policy, ci_bound)].volume_kt
        v1 = self._index[(above, policy, ci_bound)].volume_kt
        value = v0 + (v1 - v0) * (year - below) / (above - below)
        return DemandRecord(year=year, policy=policy, ci_bound=ci_bound,
                            volume_kt=value, source="interpolated")


def demand_at(table: DemandTable, year: int, policy: str, ci_bound: str,
              interpolate: bool = False) -> DemandRecord:
    return table.at(year, policy, ci_bound, interpolate=interpolate)


def byproduct_volume(saf_volume_kt: float, hefa_share: float,
                     hefa_yield: float = 0.82, atj_yield: float = 0.8961) -> float:
    """Naphtha-equivalent by-product volume for a SAF volume and route mix.

    ``hefa_share`` is the fraction of SAF produced via HEFA; the remainder is
    alcohol-to-jet. Yields are kg by-product per kg SAF.
    """
    if saf_volume_kt < 0:
        raise ValueError("saf_volume_kt must be >= 0")
    if not 0.0 <= hefa_share <= 1.0:
        raise ValueError("hefa_share must be in [0, 1]")
    blended = hefa_share * hefa_yield + (1.0 - hefa_share) * atj_yield
    return saf_volume_kt * blended


@dataclass(frozen=True)
class InvestmentEnvelope:
    """National investment needed for the 2025-2037 buildout, production plants only."""

    brl_low: float
    brl_high: float
    usd_low: float
    usd_high: float
    horizon: tuple[int, int]

    def to_dict(self) -> dict:
        return {
            "brl_low": self.brl_low,
            "brl_high": self.brl_high,
            "usd_low": self.usd_low,
            "usd_high": self.usd_high,
            "horizon": list(self.horizon),
        }


@dataclass(frozen=True)
class BuildoutScenario:
    """One published buildout scenario with its CAPEX estimate."""

    id: str
    description: str
    capex_brl_low: float
    capex_brl_high: float
    capacity_published: str

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "capex_brl_low": self.capex_brl_low,
            "capex_brl_high": self.capex_brl_high,
            "capacity_published": self.capacity_published,
        }


@dataclass(frozen=True)
class InvestmentData:
    envelope: InvestmentEnvelope
    buildout_scenarios: tuple[BuildoutScenario, ...]

    def to_dict(self) -> dict:
        return {
            "envelope": self.envelope.to_dict(),
            "buildout_scenarios": [s.to_dict() for s in self.buildout_scenarios],
        }


def load_investment(data: dict) -> InvestmentData:
    try:
        env = data["envelope"]
        envelope = InvestmentEnvelope(
            brl_low=float(env["brl_low"]),
            brl_high=float(env["brl_high"]),
            usd_low=float(env["usd_low"]),
            usd_high=float(env["usd_high"]),
            horizon=(int(env["horizon"][0]), int(env["horizon"][1])),
        )
        scenarios = tuple(
            BuildoutScenario(
                id=str(s["id"]),
                description=str(s["description"]),
                capex_brl_low=float(s["capex_brl_low"]),
                capex_brl_high=float(s["capex_brl_high"]),
                capacity_published=str(s["capacity_published"]),
            )
            for s in data["buildout_scenarios"]
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise BundleError(f"investment.json: {exc}") from exc
    if envelope.brl_low > envelope.brl_high or envelope.usd_low > envelope.usd_high:
        raise BundleError("investment.json: envelope bounds out of order")
    return InvestmentData(envelope=envelope, buildout_scenarios=scenarios)
