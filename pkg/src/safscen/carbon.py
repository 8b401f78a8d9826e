"""Carbon-credit arithmetic: intensity differentials, credit revenue, CBIO counts.

Carbon intensities are gCO2e per MJ of fuel; prices are BRL per tCO2e (one
CBIO certifies one tonne of CO2e). The intensity tables are exogenous inputs;
no life-cycle computation happens here, and land-use change, feedstock and
transport emissions are out of scope by construction.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import BundleError

#: Lower heating value applied to both fossil jet and SAF when converting
#: per-MJ intensities to per-kg abatement. The published analysis does not
#: state the constant it used; 43.8 MJ/kg is typical jet kerosene.
DEFAULT_LHV_MJ_PER_KG = 43.8


@dataclass(frozen=True)
class CarbonIntensitySet:
    """Bundled carbon intensities (gCO2e/MJ) plus the energy-density constant."""

    fossil_jet: float
    hefa: float
    atj: float
    lhv_mj_per_kg: float = DEFAULT_LHV_MJ_PER_KG

    def __post_init__(self):
        for label, v in (("fossil_jet", self.fossil_jet), ("hefa", self.hefa),
                         ("atj", self.atj), ("lhv_mj_per_kg", self.lhv_mj_per_kg)):
            if not v > 0:
                raise BundleError(f"carbon: {label} must be positive, got {v}")

    def for_route(self, route) -> float:
        return self.hefa if getattr(route, "value", route) == "hefa" else self.atj


def abatement_per_kg(route_ci: float, fossil_ci: float,
                     lhv_mj_per_kg: float = DEFAULT_LHV_MJ_PER_KG) -> float:
    """tCO2e avoided per kg of SAF displacing fossil jet fuel.

    (fossil - route) gCO2e/MJ x MJ/kg x 1e-6 t/g. A route dirtier than fossil
    jet clamps to zero with a warning; the credit mechanism only ever pays for
    reductions.
    """
    diff = fossil_ci - route_ci
    if diff < 0:
        warnings.warn(
            f"route carbon intensity {route_ci} exceeds fossil reference "
            f"{fossil_ci}; clamping abatement to zero",
            stacklevel=2,
        )
        return 0.0
    return diff * lhv_mj_per_kg * 1e-6


def credit_revenue(abatement_t_per_kg: float, price_brl_per_t: float) -> float:
    """Credit revenue in BRL per kg SAF; bilinear in abatement and price."""
    if abatement_t_per_kg < 0 or price_brl_per_t < 0:
        raise ValueError("abatement and carbon price must be non-negative")
    return abatement_t_per_kg * price_brl_per_t


def cbio_count(annual_saf_kt: float, abatement_t_per_kg: float) -> float:
    """CBIOs generated per year by `annual_saf_kt` of production (1 CBIO = 1 tCO2e)."""
    if annual_saf_kt < 0 or abatement_t_per_kg < 0:
        raise ValueError("production and abatement must be non-negative")
    return annual_saf_kt * 1e6 * abatement_t_per_kg
