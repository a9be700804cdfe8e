"""Exception hierarchy and argument guards shared across the package."""

from __future__ import annotations

import math
from typing import Any

__all__ = [
    "KappainfError",
    "DomainError",
    "RegimeError",
    "NumericalError",
    "require_finite",
    "require_positive",
    "require_kappa",
]


class KappainfError(Exception):
    """Base class for every error raised by this package."""


class DomainError(KappainfError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class RegimeError(KappainfError, ValueError):
    """The requested quantity does not exist in this parameter regime."""


class NumericalError(KappainfError, ArithmeticError):
    """A numerical procedure failed to converge within its budget."""


def require_finite(name: str, value: Any) -> float:
    """Coerce to float and reject NaN/inf/non-numbers."""
    try:
        x = float(value)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{name} must be a real number, got {value!r}") from exc
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


def require_positive(name: str, value: Any) -> float:
    x = require_finite(name, value)
    if x <= 0.0:
        raise DomainError(f"{name} must be > 0, got {x!r}")
    return x


def require_kappa(kappa: Any) -> float:
    """The mean multiplier in P(X <= kappa*E[X]) must be a positive real."""
    return require_positive("kappa", kappa)
