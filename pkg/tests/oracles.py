"""Independent reference computations used to freeze expected values."""

import math


def bisect(f, lo, hi, tol=1e-15, max_iter=400):
    flo = f(lo)
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
        if hi - lo <= tol * max(1.0, abs(mid)):
            break
    return 0.5 * (lo + hi)


def erf_normal_cdf(x):
    return 0.5 * (1.0 + math.erf(x / math.sqrt(2.0)))


def normal_quantile_bisect(p):
    return bisect(lambda x: erf_normal_cdf(x) - p, -40.0, 40.0, tol=1e-16)


def pivot_root_bisect(r_star, n, u, w, lo, hi):
    """Root of sqrt(n)(r* - rho) - u w rho log(rho) on [lo, hi] by bisection."""
    return bisect(lambda p: math.sqrt(n) * (r_star - p) - u * w * p * math.log(p), lo, hi, tol=1e-15)
