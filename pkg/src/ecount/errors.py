"""Exception types shared across the package."""

from __future__ import annotations

__all__ = ["DomainError", "PrecisionCapError", "InvariantViolation"]


class DomainError(ValueError):
    """An argument violated a documented precondition."""


class PrecisionCapError(RuntimeError):
    """Adaptive refinement hit the precision cap before deciding."""


class InvariantViolation(RuntimeError):
    """A cross-route identity or ordering that must hold did not."""
