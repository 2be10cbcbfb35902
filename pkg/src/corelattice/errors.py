"""Shared exception types."""

from __future__ import annotations


class CapExceededError(RuntimeError):
    """Raised when a requested enumeration would exceed the configured cap."""


class FitValidationError(ValueError):
    """Raised when held-out samples contradict a fitted (quasi)polynomial."""
