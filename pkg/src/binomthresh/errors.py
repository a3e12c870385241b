"""Shared exception types for the binomthresh package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ResourceLimitError(RuntimeError):
    """A requested computation would exceed a configured resource budget."""


class CorruptCacheError(ValueError):
    """A sequence cache file failed validation on load."""
