"""
Confidence intervals for a Dagum quantile ratio.

An interval end ``rho`` at probability ``gamma`` solves the pivot equation

    sqrt(n) * (r* - rho) = u_gamma * w(a) * rho * log(rho)

where ``u_gamma`` is the standard normal gamma-quantile. The interval at
level ``delta`` with overestimation risk ``s`` is ``(end(delta + s), end(s))``;
``s = (1 - delta) / 2`` gives the standard equal-risk interval, and
minimizing the length over ``s`` gives the shortest one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import optimize

from .errors import BracketError, ConvergenceError, DomainError
from .estimator import RatioEstimate, asymptotic_w2
from .special import Branch, lambert_w_from_log, normal_quantile

__all__ = [
    "ConfidenceInterval",
    "pivot_residual",
    "endpoint",
    "endpoint_closed_form",
    "endpoint_root_find",
    "interval",
    "standard_interval",
    "interval_length",
    "shortest_interval",
]

_EDGE = 1e-9
_BRACKET_CAP = 2.0 ** 40


@dataclass(frozen=True)
class ConfidenceInterval:
    """Interval for the quantile ratio with its risk split.

    ``over_risk`` is the asymptotic probability that the true ratio lies
    above ``upper`` and ``under_risk`` that it lies below ``lower``; the two
    add up to ``1 - level``.
    """

    lower: float
    upper: float
    level: float
    under_risk: float
    over_risk: float

    @property
    def length(self) -> float:
        return self.upper - self.lower

    def contains(self, r: float) -> bool:
        return self.lower <= r <= self.upper


def _check_gamma(gamma: float) -> float:
    if not 0.0 < gamma < 1.0:
        raise DomainError(f"gamma must lie in (0, 1), got {gamma!r}")
    if gamma == 0.5:
        raise DomainError("gamma = 0.5 makes u_gamma = 0; the end is r* itself")
    return normal_quantile(gamma)


def _check_estimate(est: RatioEstimate) -> None:
    if not est.r_star > 1.0:
        raise DomainError(f"interval construction needs r* > 1, got {est.r_star!r}")


def pivot_residual(rho: float, gamma: float, est: RatioEstimate) -> float:
    """``sqrt(n)(r* - rho) - u_gamma w(a) rho log(rho)``."""
    u = normal_quantile(gamma)
    w = math.sqrt(asymptotic_w2(est.a_hat, est.spec))
    return math.sqrt(est.n) * (est.r_star - rho) - u * w * rho * math.log(rho)


def endpoint_closed_form(gamma: float, est: RatioEstimate) -> float:
    """Interval end via the Lambert W function.

    With ``z = sqrt(n) / (u_gamma w(a))`` the end is
    ``r* z / W(r* z exp(z))``. For ``u_gamma > 0`` the argument is positive
    and the principal branch applies. For ``u_gamma < 0`` the argument lies
    in ``(-1/e, 0)`` and both real branches give roots of the pivot
    equation; the lower branch gives the one adjacent to ``r*`` and the
    principal branch a spurious far root near ``exp(-z)``.

    Raises
    ------
    DomainError
        For ``gamma = 0.5``, ``r* <= 1``, or when ``u_gamma < 0`` is so
        extreme that the pivot equation has no root above ``r*`` (the upper
        end is unbounded).
    """
    u = _check_gamma(gamma)
    _check_estimate(est)
    w = math.sqrt(asymptotic_w2(est.a_hat, est.spec))
    z = math.sqrt(est.n) / (u * w)
    r = est.r_star
    log_abs_arg = math.log(r) + math.log(abs(z)) + z
    if u > 0:
        t = lambert_w_from_log(log_abs_arg, Branch.PRINCIPAL)
    else:
        if log_abs_arg > -1.0:
            raise DomainError(
                f"no finite interval end at gamma={gamma!r}: the pivot equation has no root above r*"
            )
        t = lambert_w_from_log(log_abs_arg, Branch.LOWER)
    rho = r * z / t
    if not rho > 1.0:
        raise DomainError(f"Lambert W end {rho!r} is not above 1")
    return rho


def endpoint_root_find(gamma: float, est: RatioEstimate) -> float:
    """Interval end by bracketed root finding on the pivot equation.

    For ``u_gamma > 0`` the root lies in ``(1, r*)``. For ``u_gamma < 0`` the
    residual is convex in ``rho`` with minimum at
    ``exp(sqrt(n) / (|u| w) - 1)``; the wanted root is the one between ``r*``
    and that minimum. The upper bracket is found by doubling from 10 and is
    never allowed past the minimum.
    """
    u = _check_gamma(gamma)
    _check_estimate(est)
    w = math.sqrt(asymptotic_w2(est.a_hat, est.spec))
    sqn = math.sqrt(est.n)
    r = est.r_star

    def f(rho):
        return sqn * (r - rho) - u * w * rho * math.log(rho)

    if u > 0:
        lo, hi = 1.0, r
    else:
        log_turn = sqn / (-u * w) - 1.0
        turn = math.exp(log_turn) if log_turn < 700.0 else math.inf
        lo, hi = r, max(10.0, 2.0 * r)
        while f(hi) > 0.0 and hi < turn and hi < _BRACKET_CAP:
            lo, hi = hi, 2.0 * hi
        if hi > turn:
            hi = turn
        if not f(hi) < 0.0:
            raise BracketError(
                f"no sign change of the pivot residual on [{r!r}, {hi!r}] at gamma={gamma!r}",
                scanned=(r, hi),
            )
    rho = optimize.brentq(f, lo, hi, xtol=1e-15, rtol=1e-15, maxiter=200)
    return rho


def endpoint(gamma: float, est: RatioEstimate) -> float:
    """Closed-form end, falling back to root finding if it cannot be trusted."""
    try:
        rho = endpoint_closed_form(gamma, est)
    except DomainError:
        _check_gamma(gamma)
        _check_estimate(est)
        return endpoint_root_find(gamma, est)
    if abs(pivot_residual(rho, gamma, est)) <= 1e-9 * math.sqrt(est.n) * est.r_star:
        return rho
    return endpoint_root_find(gamma, est)


def _check_level(level: float) -> None:
    if not 0.0 < level < 1.0:
        raise DomainError(f"confidence level must lie in (0, 1), got {level!r}")


def interval(est: RatioEstimate, level: float, over_risk: float) -> ConfidenceInterval:
    """Interval at ``level`` with overestimation risk ``over_risk``."""
    _check_level(level)
    if not 0.0 < over_risk < 1.0 - level:
        raise DomainError(f"risk split must lie in (0, {1.0 - level!r}), got {over_risk!r}")
    lower = endpoint(level + over_risk, est)
    upper = endpoint(over_risk, est)
    return ConfidenceInterval(
        lower=lower,
        upper=upper,
        level=level,
        under_risk=1.0 - level - over_risk,
        over_risk=over_risk,
    )


def standard_interval(est: RatioEstimate, level: float = 0.95) -> ConfidenceInterval:
    """Equal-risk interval ``(end((1 + level)/2), end((1 - level)/2))``."""
    _check_level(level)
    half = (1.0 - level) / 2.0
    return ConfidenceInterval(
        lower=endpoint((1.0 + level) / 2.0, est),
        upper=endpoint(half, est),
        level=level,
        under_risk=half,
        over_risk=half,
    )


def interval_length(over_risk: float, est: RatioEstimate, level: float = 0.95) -> float:
    """Length ``end(over_risk) - end(level + over_risk)``."""
    _check_level(level)
    if not 0.0 < over_risk < 1.0 - level:
        raise DomainError(f"risk split must lie in (0, {1.0 - level!r}), got {over_risk!r}")
    return endpoint(over_risk, est) - endpoint(level + over_risk, est)


def shortest_interval(
    est: RatioEstimate, level: float = 0.95, tol: float = 1e-12
) -> ConfidenceInterval:
    """Interval of minimal length over the risk split.

    The split is found by bounded Brent minimization on
    ``(1e-9, 1 - level - 1e-9)``. Splits for which the upper end does not
    exist count as infinitely long.

    Raises
    ------
    ConvergenceError
        If no interior minimum shorter than the standard interval is found.
    """
    _check_level(level)
    _check_estimate(est)

    def length(s):
        try:
            return endpoint(s, est) - endpoint(level + s, est)
        except (DomainError, BracketError):
            return math.inf

    res = optimize.minimize_scalar(
        length,
        bounds=(_EDGE, 1.0 - level - _EDGE),
        method="bounded",
        options={"xatol": tol, "maxiter": 500},
    )
    s = float(res.x)
    if not (res.success and math.isfinite(res.fun)):
        raise ConvergenceError(f"length minimization failed: {res.message}", best=s)
    best = interval(est, level, s)
    standard = standard_interval(est, level)
    if best.length > standard.length:
        raise ConvergenceError(
            "length minimization ended above the standard interval length", best=s
        )
    return best
