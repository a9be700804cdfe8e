"""The four distribution families: parameters, moments, densities, sampling.

Pointwise functions (``cdf``, ``pdf``) accept a scalar or an ndarray of
evaluation points.  ``sample`` is deterministic per (params, n, seed): the
seed feeds a ``numpy.random.Generator`` (PCG64 via ``default_rng``, i.e. the
stream is derived from the seed through ``SeedSequence``), and each family
uses a fixed transformation of that stream:

* log-normal, Gumbel, logistic: inverse-CDF transform of uniforms;
* inverse Gaussian: the Michael-Schucany-Haas transformation (a chi-square
  variate, the smaller root of the defining quadratic, then a uniform to pick
  between the root and its conjugate), since this CDF has no closed-form
  inverse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
import scipy.special as _sc

from . import special
from .errors import DomainError, require_finite, require_positive

__all__ = ["Family", "DistParams", "mean", "variance", "cdf", "pdf", "sample"]


class Family(str, Enum):
    """The four supported families (values are the CLI / file spellings)."""

    INVERSE_GAUSSIAN = "inverse-gaussian"
    LOG_NORMAL = "log-normal"
    GUMBEL = "gumbel"
    LOGISTIC = "logistic"


# Families whose support is (0, inf) rather than the whole real line.
POSITIVE_SUPPORT = frozenset({Family.INVERSE_GAUSSIAN, Family.LOG_NORMAL})


@dataclass(frozen=True)
class DistParams:
    """One member of a family.

    (p1, p2) reads as (mu, lambda) for inverse Gaussian with both > 0,
    (mu, sigma) for log-normal, (mu, beta) for Gumbel and logistic, with the
    scale/shape parameter > 0 and mu unrestricted for the latter three.
    """

    family: Family
    p1: float
    p2: float

    def __post_init__(self):
        family = Family(self.family)
        object.__setattr__(self, "family", family)
        if family is Family.INVERSE_GAUSSIAN:
            p1 = require_positive("mu", self.p1)
        else:
            p1 = require_finite("mu", self.p1)
        name = {
            Family.INVERSE_GAUSSIAN: "lambda",
            Family.LOG_NORMAL: "sigma",
            Family.GUMBEL: "beta",
            Family.LOGISTIC: "beta",
        }[family]
        p2 = require_positive(name, self.p2)
        object.__setattr__(self, "p1", p1)
        object.__setattr__(self, "p2", p2)

    @classmethod
    def inverse_gaussian(cls, mu: float, lam: float) -> "DistParams":
        return cls(Family.INVERSE_GAUSSIAN, mu, lam)

    @classmethod
    def log_normal(cls, mu: float, sigma: float) -> "DistParams":
        return cls(Family.LOG_NORMAL, mu, sigma)

    @classmethod
    def gumbel(cls, mu: float, beta: float) -> "DistParams":
        return cls(Family.GUMBEL, mu, beta)

    @classmethod
    def logistic(cls, mu: float, beta: float) -> "DistParams":
        return cls(Family.LOGISTIC, mu, beta)


def mean(params: DistParams) -> float:
    """E[X]: mu / exp(mu + sigma^2/2) / mu + beta*gamma / mu per family."""
    p1, p2 = params.p1, params.p2
    if params.family is Family.INVERSE_GAUSSIAN:
        return p1
    if params.family is Family.LOG_NORMAL:
        return math.exp(p1 + 0.5 * p2 * p2)
    if params.family is Family.GUMBEL:
        return p1 + p2 * special.EULER_GAMMA
    return p1


def variance(params: DistParams) -> float:
    """Var[X]; used by the sampling oracles for CLT error bounds."""
    p1, p2 = params.p1, params.p2
    if params.family is Family.INVERSE_GAUSSIAN:
        return p1**3 / p2
    if params.family is Family.LOG_NORMAL:
        s2 = p2 * p2
        return math.expm1(s2) * math.exp(2.0 * p1 + s2)
    if params.family is Family.GUMBEL:
        return (math.pi * p2) ** 2 / 6.0
    return (math.pi * p2) ** 2 / 3.0


def _mode(params: DistParams) -> float:
    """Location of the density peak (used to seed adaptive quadrature)."""
    p1, p2 = params.p1, params.p2
    if params.family is Family.INVERSE_GAUSSIAN:
        r = 1.5 * p1 / p2
        return p1 * (math.sqrt(1.0 + r * r) - r)
    if params.family is Family.LOG_NORMAL:
        return math.exp(p1 - p2 * p2)
    return p1


def cdf(params: DistParams, t):
    """P(X <= t); right-continuous, non-decreasing, limits 0 and 1.

    For the inverse Gaussian the two-term closed form is evaluated in the
    erfcx carrier: the second term's exponent 2*lambda/mu - a^2/2 (with
    a = sqrt(lambda/t)(t/mu + 1)) simplifies to -lambda*(t-mu)^2/(2*mu^2*t),
    which is <= 0, so nothing is exponentiated before the exponents combine
    and e^{2*lambda/mu} is never formed on its own.
    """
    t_arr = np.asarray(t, dtype=float)
    scalar = t_arr.ndim == 0
    if not np.all(np.isfinite(t_arr)):
        raise DomainError(f"t must be finite, got {t!r}")
    p1, p2 = params.p1, params.p2

    if params.family is Family.INVERSE_GAUSSIAN:
        out = np.zeros_like(t_arr, dtype=float)
        pos = t_arr > 0.0
        if np.any(pos):
            tp = t_arr[pos]
            # reduced evaluation: ratio = t/mu plays the mean-multiple role
            # and x^2 = lambda/mu, identical to the one-parameter curve
            ratio = tp / p1
            x2 = p2 / p1
            x = math.sqrt(x2)
            term1 = special.std_normal_cdf((ratio - 1.0) * x / np.sqrt(ratio))
            expo = (2.0 - (ratio + 1.0) ** 2 / (2.0 * ratio)) * x2
            carrier = special.erfcx((ratio + 1.0) * x / np.sqrt(2.0 * ratio))
            out[pos] = np.clip(term1 + 0.5 * np.exp(expo) * carrier, 0.0, 1.0)
        return float(out) if scalar else out

    if params.family is Family.LOG_NORMAL:
        out = np.zeros_like(t_arr, dtype=float)
        pos = t_arr > 0.0
        if np.any(pos):
            out[pos] = special.std_normal_cdf((np.log(t_arr[pos]) - p1) / p2)
        return float(out) if scalar else out

    z = (t_arr - p1) / p2
    if params.family is Family.GUMBEL:
        with np.errstate(over="ignore"):
            out = np.exp(-np.exp(-z))
        return float(out) if scalar else out

    out = _sc.expit(z)
    return float(out) if scalar else out


def pdf(params: DistParams, t):
    """Density at t.  Positive-support families reject t <= 0.

    Computed through the log-density so far-tail evaluations underflow to 0
    instead of producing inf*0.
    """
    t_arr = np.asarray(t, dtype=float)
    scalar = t_arr.ndim == 0
    if not np.all(np.isfinite(t_arr)):
        raise DomainError(f"t must be finite, got {t!r}")
    p1, p2 = params.p1, params.p2

    if params.family in POSITIVE_SUPPORT and np.any(t_arr <= 0.0):
        raise DomainError(f"density of {params.family.value} requires t > 0, got {t!r}")

    if params.family is Family.INVERSE_GAUSSIAN:
        log_pdf = (
            0.5 * (math.log(p2) - math.log(2.0 * math.pi))
            - 1.5 * np.log(t_arr)
            - p2 * (t_arr - p1) ** 2 / (2.0 * p1 * p1 * t_arr)
        )
        out = np.exp(log_pdf)
    elif params.family is Family.LOG_NORMAL:
        log_t = np.log(t_arr)
        log_pdf = (
            -math.log(p2) - 0.5 * math.log(2.0 * math.pi)
            - log_t
            - (log_t - p1) ** 2 / (2.0 * p2 * p2)
        )
        out = np.exp(log_pdf)
    elif params.family is Family.GUMBEL:
        z = (t_arr - p1) / p2
        with np.errstate(over="ignore"):
            log_pdf = -math.log(p2) - z - np.exp(-z)
        out = np.exp(log_pdf)
    else:
        z = np.abs(t_arr - p1) / p2
        e = np.exp(-z)
        out = e / (p2 * (1.0 + e) ** 2)
    return float(out) if scalar else out


def sample(params: DistParams, n: int, seed: int) -> np.ndarray:
    """n i.i.d. draws; identical output for identical (params, n, seed)."""
    if n < 0:
        raise DomainError(f"sample size must be >= 0, got {n}")
    rng = np.random.default_rng(seed)
    p1, p2 = params.p1, params.p2

    if params.family is Family.INVERSE_GAUSSIAN:
        y = rng.standard_normal(n) ** 2
        w = p1 * y / (2.0 * p2)
        root = p1 * (1.0 + w - np.sqrt(w * (w + 2.0)))
        u = rng.random(n)
        return np.where(u <= p1 / (p1 + root), root, p1 * p1 / root)

    u = np.maximum(rng.random(n), 5e-324)  # keep inverse transforms finite
    if params.family is Family.LOG_NORMAL:
        return np.exp(p1 + p2 * _sc.ndtri(u))
    if params.family is Family.GUMBEL:
        return p1 - p2 * np.log(-np.log(u))
    return p1 + p2 * (np.log(u) - np.log1p(-u))
