"""Currency primitives shared by the price books and the finance engine."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BundleError

USD = "usd"
BRL = "brl"


@dataclass(frozen=True)
class FxRate:
    """BRL per USD conversion rate."""

    brl_per_usd: float

    def __post_init__(self):
        if not self.brl_per_usd > 0:
            raise BundleError(f"fx rate must be positive, got {self.brl_per_usd}")
