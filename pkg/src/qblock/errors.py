"""Exception types shared across the package."""


class CapacityError(Exception):
    """Raised when a request would exceed a configured memory/size cap."""
