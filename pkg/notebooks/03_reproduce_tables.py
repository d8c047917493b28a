"""
Shortest vs. standard lengths
=============================

Interval lengths at n = 1000 and level 0.95 over a in {0.1, 0.5, 1} and
r* in {2, ..., 6}, for the quintile ratio (0.2, 0.8) and the decile ratio
(0.1, 0.9).
"""

# %%
from dagumci import RatioSpec, reproduce_tables

for label, spec in (("quintiles", RatioSpec(0.2, 0.8)), ("deciles", RatioSpec(0.1, 0.9))):
    print(f"\n{label}: alpha={spec.alpha}, beta={spec.beta}")
    print(f"{'a':>4} {'r':>4} {'d1-d':>8} {'1-d1':>8} {'short':>9} {'standard':>9} {'reduction':>9}")
    for row in reproduce_tables(spec):
        print(f"{row.a:>4} {row.r_star:>4} {row.over_risk:>8.5f} {row.under_risk:>8.5f} "
              f"{row.short_length:>9.6f} {row.standard_length:>9.6f} {row.reduction_pct:>8.3f}%")

# %%
# The gain grows with inequality (larger r*) and shrinks as a grows.
