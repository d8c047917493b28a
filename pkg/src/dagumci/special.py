"""
Real Lambert W and the standard normal quantile.

Both are scalar routines built on :mod:`math` only.
"""

from __future__ import annotations

import enum
import math

from .errors import DomainError

__all__ = [
    "Branch",
    "lambert_w",
    "lambert_w_from_log",
    "normal_cdf",
    "normal_quantile",
]

_INV_E = math.exp(-1.0)
_CLAMP = 1e-15
_MAX_ITER = 100
_STEP_TOL = 1e-16


class Branch(str, enum.Enum):
    """Real branch of the Lambert W function."""

    PRINCIPAL = "principal"  # W0, range [-1, inf)
    LOWER = "lower"  # W-1, range (-inf, -1]


def _as_branch(branch) -> Branch:
    try:
        return Branch(branch)
    except ValueError:
        raise DomainError(f"unknown Lambert W branch {branch!r}") from None


def _branch_point_series(x: float, sign: float) -> float:
    # expansion in p = sqrt(2(ex + 1)) around x = -1/e
    p = sign * math.sqrt(max(2.0 * (math.e * x + 1.0), 0.0))
    return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p ** 3


def _initial_guess(x: float, branch: Branch) -> float:
    if branch is Branch.PRINCIPAL:
        if x < -0.32:
            return _branch_point_series(x, 1.0)
        if x < 3.0:
            lp = math.log1p(x)
            return lp * (1.0 - math.log1p(lp) / (2.0 + lp))
        l1 = math.log(x)
        l2 = math.log(l1)
        return l1 - l2 + l2 / l1
    if x < -0.25:
        return _branch_point_series(x, -1.0)
    l1 = math.log(-x)
    l2 = math.log(-l1)
    return l1 - l2 + l2 / l1


def _halley(x: float, w: float) -> float:
    last = math.inf
    for _ in range(_MAX_ITER):
        ew = math.exp(w)
        f = w * ew - x
        wp1 = w + 1.0
        if wp1 == 0.0:
            break
        step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w -= step
        size = abs(step)
        # stop on tolerance, or once rounding noise stops the steps shrinking
        scale = 1.0 + abs(w)
        if size <= _STEP_TOL * scale or (size >= last and size < 1e-10 * scale):
            break
        last = size
    return w


def lambert_w(x: float, branch: Branch | str = Branch.PRINCIPAL) -> float:
    """Real Lambert W: the ``t`` solving ``t * exp(t) = x``.

    Parameters
    ----------
    x : float
        Argument. ``x >= -1/e`` for the principal branch and
        ``-1/e <= x < 0`` for the lower branch. Values no more than 1e-15
        below ``-1/e`` are treated as the branch point.
    branch : Branch or {"principal", "lower"}
        ``principal`` returns ``W0(x) >= -1``; ``lower`` returns
        ``W-1(x) <= -1``.

    Returns
    -------
    float

    Raises
    ------
    DomainError
        If ``x`` is outside the domain of the requested branch.
    """
    branch = _as_branch(branch)
    x = float(x)
    if math.isnan(x):
        raise DomainError("lambert_w argument is NaN")
    if x < -_INV_E:
        if x < -_INV_E - _CLAMP:
            raise DomainError(f"lambert_w argument {x!r} is below -1/e")
        x = -_INV_E
    if branch is Branch.LOWER and x >= 0.0:
        raise DomainError(f"lower branch requires -1/e <= x < 0, got {x!r}")
    if x == -_INV_E:
        return -1.0
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return math.inf
    w = _halley(x, _initial_guess(x, branch))
    if branch is Branch.PRINCIPAL:
        return max(w, -1.0)
    return min(w, -1.0)


def lambert_w_from_log(log_abs_x: float, branch: Branch | str = Branch.PRINCIPAL) -> float:
    """Lambert W evaluated at an argument given through its logarithm.

    For the principal branch this returns ``W0(exp(log_abs_x))``; for the
    lower branch ``W-1(-exp(log_abs_x))``, which needs ``log_abs_x <= -1``.
    Arguments far beyond the float range (either way) are handled by
    solving ``t + log|t| = log_abs_x`` directly.
    """
    branch = _as_branch(branch)
    lx = float(log_abs_x)
    if math.isnan(lx):
        raise DomainError("lambert_w_from_log argument is NaN")
    if branch is Branch.PRINCIPAL:
        if lx < 700.0:
            return lambert_w(math.exp(lx), branch)
        t = lx - math.log(lx)
        sign = 1.0
    else:
        if lx > -1.0:
            if lx - (-1.0) > _CLAMP:
                raise DomainError(
                    f"lower branch needs |x| <= 1/e, got log|x| = {lx!r}"
                )
            return -1.0
        if lx > -700.0:
            return lambert_w(-math.exp(lx), branch)
        t = lx - math.log(-lx)
        sign = -1.0
    # Newton on g(t) = t + log(sign * t) - lx; g is nearly linear out here
    for _ in range(_MAX_ITER):
        g = t + math.log(sign * t) - lx
        step = g / (1.0 + 1.0 / t)
        t -= step
        if abs(step) <= _STEP_TOL * (1.0 + abs(t)):
            break
    return t


# Wichura's AS 241 (PPND16) coefficients.
_A = (
    3.3871328727963666080e0,
    1.3314166789178437745e2,
    1.9715909503065514427e3,
    1.3731693765509461125e4,
    4.5921953931549871457e4,
    6.7265770927008700853e4,
    3.3430575583588128105e4,
    2.5090809287301226727e3,
)
_B = (
    1.0,
    4.2313330701600911252e1,
    6.8718700749205790830e2,
    5.3941960214247511077e3,
    2.1213794301586595867e4,
    3.9307895800092710610e4,
    2.8729085735721942674e4,
    5.2264952788528545610e3,
)
_C = (
    1.42343711074968357734e0,
    4.63033784615654529590e0,
    5.76949722146069140550e0,
    3.64784832476320460504e0,
    1.27045825245236838258e0,
    2.41780725177450611770e-1,
    2.27238449892691845833e-2,
    7.74545014278341407640e-4,
)
_D = (
    1.0,
    2.05319162663775882187e0,
    1.67638483018380384940e0,
    6.89767334985100004550e-1,
    1.48103976427480074590e-1,
    1.51986665636164571966e-2,
    5.47593808499534494600e-4,
    1.05075007164441684324e-9,
)
_E = (
    6.65790464350110377720e0,
    5.46378491116411436990e0,
    1.78482653991729133580e0,
    2.96560571828504891230e-1,
    2.65321895265761230930e-2,
    1.24266094738807843860e-3,
    2.71155556874348757815e-5,
    2.01033439929228813265e-7,
)
_F = (
    1.0,
    5.99832206555887937690e-1,
    1.36929880922735805310e-1,
    1.48753612908506148525e-2,
    7.86869131145613259100e-4,
    1.84631831751005468180e-5,
    1.42151175831644588870e-7,
    2.04426310338993978564e-15,
)


def _poly(coeffs, x):
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def normal_quantile(p: float) -> float:
    """Quantile function of N(0, 1), accurate to about 1e-16 relative."""
    p = float(p)
    if not 0.0 < p < 1.0:
        raise DomainError(f"probability must lie in (0, 1), got {p!r}")
    q = p - 0.5
    if abs(q) <= 0.425:
        r = 0.180625 - q * q
        return q * _poly(_A, r) / _poly(_B, r)
    r = p if q < 0.0 else 1.0 - p
    r = math.sqrt(-math.log(r))
    if r <= 5.0:
        r -= 1.6
        x = _poly(_C, r) / _poly(_D, r)
    else:
        r -= 5.0
        x = _poly(_E, r) / _poly(_F, r)
    return -x if q < 0.0 else x


def normal_cdf(x: float) -> float:
    return 0.5 * math.erfc(-x / math.sqrt(2.0))
