"""
Interval ends and the length curve
==================================

An interval end solves ``sqrt(n)(r* - rho) = u w(a) rho log(rho)``. It has a
closed form through the Lambert W function and can also be found by
bracketed root finding; the two agree to rounding.
"""

# %%
import numpy as np

from dagumci import RatioEstimate, RatioSpec, endpoint_closed_form, endpoint_root_find
from dagumci.ci import interval_length, shortest_interval, standard_interval

est = RatioEstimate(r_star=2.5, n=1000, spec=RatioSpec(0.2, 0.8), a_hat=0.1)

for gamma in (0.01, 0.025, 0.1, 0.9, 0.975, 0.99):
    closed = endpoint_closed_form(gamma, est)
    rooted = endpoint_root_find(gamma, est)
    print(f"gamma={gamma:<6} closed form {closed:.12f}  root finder {rooted:.12f}")

# %%
# The ends are asymmetric around r*: the upper one is further away.
standard = standard_interval(est, 0.95)
print(f"standard: ({standard.lower:.6f}, {standard.upper:.6f}), length {standard.length:.6f}")
print(f"distances from r*: {est.r_star - standard.lower:.6f} below, {standard.upper - est.r_star:.6f} above")

# %%
# Moving risk to the upper side shortens the interval. The length as a
# function of the overestimation risk s has an interior minimum.
for s in np.linspace(0.001, 0.049, 13):
    print(f"s={s:.4f}  length={interval_length(s, est, 0.95):.6f}")

best = shortest_interval(est, 0.95)
print(f"shortest: s={best.over_risk:.5f}, length {best.length:.6f}, "
      f"reduction {100 * (1 - best.length / standard.length):.3f}%")
