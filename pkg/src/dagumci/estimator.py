"""
Sample-side quantities: the order-statistic ratio estimator, its asymptotic
variance factor, and estimation of the Dagum shape from raw incomes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from .dagum import DagumParams, RatioSpec, log_quantile_term, logpdf
from .errors import ConvergenceError, DomainError

__all__ = [
    "RatioEstimate",
    "order_statistic_indices",
    "sample_quantile_ratio",
    "asymptotic_w2",
    "asymptotic_variance",
    "dagum_loglik",
    "fit_dagum_mle",
    "fit_dagum_quantiles",
]


@dataclass(frozen=True)
class RatioEstimate:
    """Observed quantile ratio together with what inference needs about it."""

    r_star: float
    n: int
    spec: RatioSpec
    a_hat: float

    def __post_init__(self):
        if not (math.isfinite(self.r_star) and self.r_star > 0):
            raise DomainError(f"r_star must be positive, got {self.r_star!r}")
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"sample size must be a positive integer, got {self.n!r}")
        if not (math.isfinite(self.a_hat) and self.a_hat > 0):
            raise DomainError(f"shape estimate must be > 0, got {self.a_hat!r}")


def order_statistic_indices(n: int, spec: RatioSpec) -> tuple[int, int]:
    """1-based ranks ``(floor(alpha n) + 1, floor(beta n) + 1)``."""
    lo = math.floor(spec.alpha * n) + 1
    hi = math.floor(spec.beta * n) + 1
    if hi > n:
        raise DomainError(f"rank {hi} of the beta order statistic exceeds n={n}")
    if lo == hi:
        raise DomainError(f"alpha and beta select the same order statistic (rank {lo}) at n={n}")
    return lo, hi


def _as_incomes(data) -> np.ndarray:
    x = np.asarray(data, dtype=float).ravel()
    if x.size == 0:
        raise DomainError("income sample is empty")
    if not np.all(np.isfinite(x)) or np.any(x <= 0):
        raise DomainError("incomes must be finite and strictly positive")
    return x


def sample_quantile_ratio(data, spec: RatioSpec) -> float:
    """``X[floor(beta n)+1 : n] / X[floor(alpha n)+1 : n]`` with no interpolation."""
    x = _as_incomes(data)
    lo, hi = order_statistic_indices(x.size, spec)
    part = np.partition(x, (lo - 1, hi - 1))
    return float(part[hi - 1] / part[lo - 1])


def _w2_bracket(a: float, spec: RatioSpec) -> float:
    al, be = spec.alpha, spec.beta
    # 1 - q**(1/a) via expm1 keeps precision when q**(1/a) is close to 1
    one_m_al = -math.expm1(math.log(al) / a)
    one_m_be = -math.expm1(math.log(be) / a)
    return (
        (1.0 - be) / be / one_m_be ** 2
        + (1.0 - al) / al / one_m_al ** 2
        - 2.0 * (1.0 - be) / be / (one_m_al * one_m_be)
    )


def asymptotic_w2(a: float, spec: RatioSpec) -> float:
    """Variance factor of the pivot ``sqrt(n)(r* - r) / (r log(r) w(a))``.

    This is the form with ``a * log((alpha**(-1/a) - 1) / (beta**(-1/a) - 1))``
    in the denominator. It depends on the shape ``a`` only, because the
    ``log r`` that relates it to the variance of ``r*`` sits in the pivot.
    """
    if not a > 0:
        raise DomainError(f"shape a must be > 0, got {a!r}")
    log_term = float(log_quantile_term(spec.alpha, a) - log_quantile_term(spec.beta, a))
    return _w2_bracket(a, spec) / (a * log_term) ** 2


def asymptotic_variance(params: DagumParams, spec: RatioSpec) -> float:
    """Limit variance of ``sqrt(n) (r* - r) / r``, i.e. ``bracket / (a v)**2``."""
    return _w2_bracket(params.a, spec) / (params.a * params.v) ** 2


def dagum_loglik(params: DagumParams, data) -> float:
    x = _as_incomes(data)
    return float(np.sum(logpdf(params, x)))


def _start_point(y: np.ndarray) -> np.ndarray:
    # a = 1 (log-logistic), scale at the median, v from the 0.2/0.8 quantiles
    q20, q80 = np.quantile(y, [0.2, 0.8])
    ratio = q80 / q20
    if not ratio > 1.0:
        raise ConvergenceError("degenerate sample: 0.2 and 0.8 quantiles coincide")
    v0 = math.log(16.0) / math.log(ratio)
    return np.array([0.0, math.log(v0), 0.0])


def fit_dagum_mle(data, max_iter: int = 500) -> DagumParams:
    """Maximum-likelihood Dagum fit by Nelder-Mead in log-parameter space.

    The sample is divided by its median first, so the fit is scale
    equivariant up to optimizer tolerance.

    Raises
    ------
    ConvergenceError
        When the simplex does not converge within ``max_iter`` iterations or
        the sample is degenerate. ``best`` holds the best parameters seen.
    """
    x = _as_incomes(data)
    if x.size < 50:
        raise DomainError(f"MLE needs at least 50 observations, got {x.size}")
    med = float(np.median(x))
    ly = np.log(x / med)
    start = _start_point(x / med)

    def nll(theta):
        la, lv, llam = theta
        a, v = math.exp(la), math.exp(lv)
        z = ly - llam
        val = -(
            ly.size * (la + lv - llam)
            + (a * v - 1.0) * np.sum(z)
            - (a + 1.0) * np.sum(np.logaddexp(0.0, v * z))
        )
        return val if math.isfinite(val) else math.inf

    res = optimize.minimize(
        nll,
        start,
        method="Nelder-Mead",
        options={"maxiter": max_iter, "xatol": 1e-8, "fatol": 1e-10, "adaptive": False},
    )
    la, lv, llam = res.x
    best = DagumParams(math.exp(la), math.exp(lv), med * math.exp(llam))
    if not res.success:
        raise ConvergenceError(f"Dagum MLE did not converge: {res.message}", best=best)
    if res.fun > nll(start):
        raise ConvergenceError("Dagum MLE ended below the starting likelihood", best=best)
    return best


def fit_dagum_quantiles(data, probs=(0.2, 0.5, 0.8)) -> DagumParams:
    """Dagum parameters matching three empirical quantiles exactly.

    A fast alternative to :func:`fit_dagum_mle`. The shape ``a`` is found
    from the ratio of the two log quantile spreads, which does not involve
    ``v`` or the scale.
    """
    x = _as_incomes(data)
    p1, p2, p3 = probs
    q1, q2, q3 = (float(q) for q in np.quantile(x, probs))
    lo_spread, hi_spread = math.log(q2 / q1), math.log(q3 / q2)
    if not (lo_spread > 0 and hi_spread > 0):
        raise ConvergenceError("degenerate sample: matched quantiles coincide")
    target = math.log(hi_spread / lo_spread)

    def gap(log_a):
        a = math.exp(log_a)
        t1, t2, t3 = (float(log_quantile_term(p, a)) for p in (p1, p2, p3))
        return math.log((t2 - t3) / (t1 - t2)) - target

    lo_b, hi_b = -8.0, 8.0
    try:
        log_a = optimize.brentq(gap, lo_b, hi_b, xtol=1e-12)
    except ValueError:
        raise ConvergenceError(
            "quantile matching has no solution for a in [exp(-8), exp(8)]"
        ) from None
    a = math.exp(log_a)
    t1, t2, t3 = (float(log_quantile_term(p, a)) for p in (p1, p2, p3))
    v = (t1 - t2) / lo_spread
    lam = q2 * math.exp(t2 / v)
    return DagumParams(a, v, lam)
