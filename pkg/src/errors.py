"""
Exception types shared across the simulator.
"""


class ContractViolation(ValueError):
    """An operation was called outside its documented preconditions."""


class LayoutError(ContractViolation):
    """A circuit layout is malformed (overlapping elements, bad modes)."""


class ConfigError(ValueError):
    """A run configuration failed schema or model validation."""


class CatalogIntegrityError(RuntimeError):
    """A catalog scheme produced a detection pattern that cannot be classified."""
