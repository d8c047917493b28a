"""
Dagum income distribution.

The law has CDF ``(1 + (x/lam)**-v)**-a`` on ``x > 0``. Everything here is
evaluated through logarithms so that small ``a`` (where ``q**(-1/a)`` is
astronomically large) stays finite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "DagumParams",
    "RatioSpec",
    "cdf",
    "pdf",
    "logpdf",
    "quantile",
    "sample",
    "ratio_of_quantiles",
    "v_from_ratio",
    "log_quantile_term",
    "replicate_rng",
]


@dataclass(frozen=True)
class DagumParams:
    """Shape ``a``, shape ``v`` and scale ``lam`` of a Dagum law."""

    a: float
    v: float
    lam: float = 1.0

    def __post_init__(self):
        for name in ("a", "v", "lam"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"Dagum parameter {name} must be > 0, got {value!r}")


@dataclass(frozen=True)
class RatioSpec:
    """Quantile orders ``0 < alpha < beta < 1`` of the ratio Q(beta)/Q(alpha)."""

    alpha: float = 0.2
    beta: float = 0.8

    def __post_init__(self):
        if not 0.0 < self.alpha < self.beta < 1.0:
            raise DomainError(
                f"need 0 < alpha < beta < 1, got alpha={self.alpha!r}, beta={self.beta!r}"
            )


def _log_expm1(y):
    """log(exp(y) - 1) for y > 0 without overflow."""
    y = np.asarray(y, dtype=float)
    with np.errstate(over="ignore"):
        small = np.log(np.expm1(np.minimum(y, 50.0)))
    large = y + np.log1p(-np.exp(-y))
    return np.where(y > 50.0, large, small)


def log_quantile_term(q, a):
    """``log(q**(-1/a) - 1)``, the q-dependent part of log Q(q)."""
    q = np.asarray(q, dtype=float)
    return _log_expm1(-np.log(q) / a)


def cdf(params: DagumParams, x):
    """Dagum CDF. ``cdf(0) = 0``; negative incomes are rejected."""
    x = np.asarray(x, dtype=float)
    if np.any(x < 0) or np.any(np.isnan(x)):
        raise DomainError("Dagum CDF is defined for x >= 0")
    with np.errstate(divide="ignore"):
        t = -params.v * (np.log(x) - math.log(params.lam))
    out = np.exp(-params.a * np.logaddexp(0.0, t))
    return out[()] if out.ndim == 0 else out


def pdf(params: DagumParams, x):
    x = np.asarray(x, dtype=float)
    if np.any(~(x > 0)):
        raise DomainError("Dagum PDF is defined for x > 0")
    out = np.exp(logpdf(params, x))
    return out[()] if out.ndim == 0 else out


def logpdf(params: DagumParams, x):
    """Log density; no domain check (callers pass positive incomes)."""
    x = np.asarray(x, dtype=float)
    a, v, lam = params.a, params.v, params.lam
    lz = np.log(x) - math.log(lam)
    return (
        math.log(a * v / lam)
        + (a * v - 1.0) * lz
        - (a + 1.0) * np.logaddexp(0.0, v * lz)
    )


def quantile(params: DagumParams, q):
    """Dagum quantile function ``lam * (q**(-1/a) - 1)**(-1/v)``."""
    q = np.asarray(q, dtype=float)
    if np.any(~((q > 0) & (q < 1))):
        raise DomainError("quantile order must lie in (0, 1)")
    out = params.lam * np.exp(-log_quantile_term(q, params.a) / params.v)
    return out[()] if out.ndim == 0 else out


def replicate_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Independent generator for replicate ``stream`` under master ``seed``."""
    return np.random.default_rng(np.random.SeedSequence(int(seed), spawn_key=(int(stream),)))


def sample(params: DagumParams, count: int, seed: int, stream: int = 0) -> np.ndarray:
    """Draw ``count`` Dagum variates by inverse transform.

    The uniforms come from a generator keyed by ``(seed, stream)``, so a
    replicate's draws do not depend on which worker produced them.
    """
    if int(count) != count or count < 1:
        raise DomainError(f"count must be a positive integer, got {count!r}")
    u = replicate_rng(seed, stream).random(int(count))
    # random() is on [0, 1); map an exact 0 to the smallest positive double
    u[u == 0.0] = np.nextafter(0.0, 1.0)
    return quantile(params, u)


def ratio_of_quantiles(params: DagumParams, spec: RatioSpec) -> float:
    """Population ratio Q(beta) / Q(alpha); does not depend on ``lam``."""
    log_num = log_quantile_term(spec.alpha, params.a)
    log_den = log_quantile_term(spec.beta, params.a)
    return float(np.exp((log_num - log_den) / params.v))


def v_from_ratio(a: float, spec: RatioSpec, r: float) -> float:
    """Shape ``v`` giving quantile ratio ``r`` when the other shape is ``a``."""
    if not a > 0:
        raise DomainError(f"shape a must be > 0, got {a!r}")
    if not r > 1:
        raise DomainError(f"quantile ratio must exceed 1, got {r!r}")
    log_term = log_quantile_term(spec.alpha, a) - log_quantile_term(spec.beta, a)
    return float(log_term / math.log(r))
