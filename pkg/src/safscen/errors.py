"""Exception types shared across the engine."""


class SafscenError(Exception):
    """Base class for all engine errors."""


class BundleError(SafscenError):
    """Raised when a dataset bundle is malformed or violates an invariant."""


class BundleIOError(BundleError):
    """Raised when a bundle directory or file cannot be found or read."""


class PriceLookupError(SafscenError):
    """Raised when a requested (year, commodity) price is not in the book."""


class CurrencyMixError(SafscenError):
    """Raised when BRL and USD quantities are combined in one financial computation."""


class PackageSchemaError(SafscenError):
    """Raised when an incentive package has an unknown field or a non-numeric value."""

    def __init__(self, field: str, message: str):
        super().__init__(message)
        self.field = field


class PackageBoundsError(SafscenError):
    """Raised when an incentive package field is outside its allowed range."""

    def __init__(self, field: str, message: str):
        super().__init__(message)
        self.field = field


class GridError(SafscenError):
    """Raised for an invalid sweep grid (too few steps or a degenerate range)."""


class DemandRangeError(SafscenError):
    """Raised when a demand query falls outside the covered 2027-2037 horizon."""
