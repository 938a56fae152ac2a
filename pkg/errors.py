"""Exception hierarchy for ctforge."""

from __future__ import annotations

from typing import Any, Optional


class CtforgeError(Exception):
    """Base class for every error ctforge raises on purpose."""


class InvalidInputError(CtforgeError, ValueError):
    """Input rejected by validation (bad rank, unknown name, malformed vector, ...)."""


class VerificationError(CtforgeError):
    """A mathematical check failed: a Hom space that must vanish does not."""

    def __init__(self, message: str, witness: Optional[dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.witness = witness or {}


class RouteMismatchError(VerificationError):
    """Two independent computation routes disagree."""


class WindowExceededError(CtforgeError):
    """A pair of objects lies outside the oracle window."""


class InternalError(CtforgeError):
    """An internal invariant broke. Always a bug."""
