"""One-parameter probability curves P(X <= kappa*E[X]) in reduced coordinates.

For every family the two-parameter probability collapses to a function of a
single coordinate:

* inverse Gaussian: x = sqrt(lambda/mu) > 0,
* log-normal:       sigma > 0 (the probability does not depend on mu),
* Gumbel:           x = mu/beta,
* logistic:         y = mu/beta.

The inverse Gaussian curve is

    Phi((kappa-1)x/sqrt(kappa)) + e^{2x^2} Phi(-(kappa+1)x/sqrt(kappa)),

whose second term is the product of an exploding exponential and a Gaussian
tail.  Every function here pre-combines such exponents before exponentiating:
with c = (kappa+1)/sqrt(kappa) the term equals

    0.5 * exp((2 - c^2/2) x^2) * erfcx(c x / sqrt(2)),

and 2 - c^2/2 <= 0 for every kappa > 0 (equality iff kappa = 1), so only
non-positive exponents are ever formed.  Naive evaluation overflows near
x ~ 19; these forms are finite for all x and kappa in range.

Coordinate arguments accept a scalar or an ndarray.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.special as _sc

from . import special
from .distributions import POSITIVE_SUPPORT, DistParams, Family
from .errors import DomainError, RegimeError, require_kappa

__all__ = [
    "ReducedPoint",
    "reduce_params",
    "reduced_prob",
    "ig_stationarity",
    "ig_stationarity_scaled",
    "ig_prob_deriv",
    "ig_stationarity_slope_factor",
    "ig_peak_coord",
]


@dataclass(frozen=True)
class ReducedPoint:
    """A point of a family's reduced coordinate space."""

    family: Family
    coord: float

    def __post_init__(self):
        family = Family(self.family)
        object.__setattr__(self, "family", family)
        coord = float(self.coord)
        if not math.isfinite(coord):
            raise DomainError(f"coord must be finite, got {self.coord!r}")
        if family in POSITIVE_SUPPORT and coord <= 0.0:
            raise DomainError(
                f"coord must be > 0 for family {family.value}, got {coord!r}"
            )
        object.__setattr__(self, "coord", coord)


def reduce_params(params: DistParams) -> ReducedPoint:
    """Map native parameters to the family's reduced coordinate."""
    if params.family is Family.INVERSE_GAUSSIAN:
        coord = math.sqrt(params.p2 / params.p1)
    elif params.family is Family.LOG_NORMAL:
        coord = params.p2
    else:
        coord = params.p1 / params.p2
    return ReducedPoint(params.family, coord)


def _coord_array(family: Family, coord) -> tuple[np.ndarray, bool]:
    if isinstance(coord, ReducedPoint):
        if coord.family is not family:
            raise DomainError(
                f"reduced point belongs to {coord.family.value}, not {family.value}"
            )
        coord = coord.coord
    arr = np.asarray(coord, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"coord must be finite, got {coord!r}")
    if family in POSITIVE_SUPPORT and np.any(arr <= 0.0):
        raise DomainError(f"coord must be > 0 for family {family.value}")
    return arr, arr.ndim == 0


def reduced_prob(family: Family, kappa: float, coord):
    """P(X <= kappa*E[X]) as a function of the reduced coordinate.

    Agrees with cdf(params, kappa*mean(params)) for any params that reduce
    to the given coordinate.  ``coord`` may be a ReducedPoint, a scalar or
    an ndarray.
    """
    family = Family(family)
    k = require_kappa(kappa)
    x, scalar = _coord_array(family, coord)

    if family is Family.INVERSE_GAUSSIAN:
        rk = math.sqrt(k)
        term1 = special.std_normal_cdf((k - 1.0) * x / rk)
        expo = (2.0 - (k + 1.0) ** 2 / (2.0 * k)) * x * x
        term2 = 0.5 * np.exp(expo) * special.erfcx((k + 1.0) * x / math.sqrt(2.0 * k))
        p = np.clip(term1 + term2, 0.0, 1.0)
    elif family is Family.LOG_NORMAL:
        p = special.std_normal_cdf(math.log(k) / x + 0.5 * x)
    elif family is Family.GUMBEL:
        with np.errstate(over="ignore"):
            p = np.exp(-np.exp(-((k - 1.0) * x + k * special.EULER_GAMMA)))
    else:
        p = _sc.expit((k - 1.0) * x)
    return float(p) if scalar else p


def _ig_coord(kappa, x) -> tuple[float, np.ndarray, bool]:
    k = require_kappa(kappa)
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
        raise DomainError(f"x must be finite and > 0, got {x!r}")
    return k, arr, arr.ndim == 0


def ig_stationarity(kappa: float, x):
    """Stationarity function of the inverse Gaussian curve.

    Defined as 2*int_a^inf e^{-t^2/2} dt - e^{-a^2/2}/(sqrt(kappa)*x) with
    a = (kappa+1)x/sqrt(kappa).  Its sign equals the sign of the curve's
    derivative: negative everywhere for kappa <= 1, and for kappa > 1
    negative below the unique zero and positive above it.
    """
    k, x_arr, scalar = _ig_coord(kappa, x)
    a2 = (k + 1.0) ** 2 * x_arr * x_arr / k
    v = np.exp(-0.5 * a2) * ig_stationarity_scaled(k, x_arr)
    return float(v) if scalar else v


def ig_stationarity_scaled(kappa: float, x):
    """e^{a^2/2}-rescaled stationarity function: same zeros and signs.

    Equals 2*sqrt(pi/2)*erfcx((kappa+1)x/sqrt(2*kappa)) - 1/(sqrt(kappa)*x).
    Unlike the plain function it neither overflows nor underflows, so root
    finding can bracket it at any x; as x -> inf it tends to 0 with the sign
    of kappa - 1.
    """
    k, x_arr, scalar = _ig_coord(kappa, x)
    s = (k + 1.0) * x_arr / math.sqrt(2.0 * k)
    v = 2.0 * special.SQRT_HALF_PI * special.erfcx(s) - 1.0 / (math.sqrt(k) * x_arr)
    return float(v) if scalar else v


def ig_prob_deriv(kappa: float, x):
    """d/dx of the inverse Gaussian curve.

    The factorized form (2x e^{2x^2}/sqrt(2*pi)) * stationarity(x) is
    evaluated with the exponents combined: the product of e^{2x^2} and the
    e^{-a^2/2} inside the stationarity function has exponent
    (2 - (kappa+1)^2/(2*kappa)) x^2 <= 0, so the result stays finite for
    every positive x and kappa.
    """
    k, x_arr, scalar = _ig_coord(kappa, x)
    expo = (2.0 - (k + 1.0) ** 2 / (2.0 * k)) * x_arr * x_arr
    v = (
        2.0 * x_arr / special.SQRT_TWO_PI
        * np.exp(expo)
        * ig_stationarity_scaled(k, x_arr)
    )
    return float(v) if scalar else v


def ig_stationarity_slope_factor(kappa: float, x):
    """1/kappa - kappa + 1/x^2: carries the sign of the stationarity slope.

    For kappa <= 1 it is positive everywhere; for kappa > 1 its unique
    positive root sqrt(kappa/(kappa^2-1)) is where the stationarity function
    peaks.
    """
    k, x_arr, scalar = _ig_coord(kappa, x)
    v = 1.0 / k - k + 1.0 / (x_arr * x_arr)
    return float(v) if scalar else v


def ig_peak_coord(kappa: float) -> float:
    """sqrt(kappa/(kappa^2-1)), the peak of the stationarity function.

    Only exists for kappa > 1; it upper-bounds the critical coordinate.
    """
    k = require_kappa(kappa)
    if k <= 1.0:
        raise RegimeError(
            "the stationarity function has no peak for kappa <= 1; "
            "the curve is strictly decreasing there"
        )
    return math.sqrt(k / (k * k - 1.0))
