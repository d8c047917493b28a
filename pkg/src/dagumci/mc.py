"""
Monte Carlo coverage studies and the length tables for n = 1000, delta = 0.95.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import ci
from .dagum import DagumParams, RatioSpec, ratio_of_quantiles, sample
from .errors import ConvergenceError, DomainError
from .estimator import (
    RatioEstimate,
    fit_dagum_mle,
    fit_dagum_quantiles,
    sample_quantile_ratio,
)

__all__ = [
    "SimulationConfig",
    "CoverageReport",
    "TableRow",
    "TABLE_A_VALUES",
    "TABLE_R_VALUES",
    "run_coverage",
    "reproduce_tables",
]

TABLE_A_VALUES = (0.1, 0.5, 1.0)
TABLE_R_VALUES = (2.0, 3.0, 4.0, 5.0, 6.0)

METHODS = ("standard", "shortest")
A_MODES = ("known", "estimated")
A_ESTIMATORS = ("mle", "quantile")

# share of failed replicates above which a report is flagged invalid
MAX_FAILURE_SHARE = 0.01


@dataclass(frozen=True)
class SimulationConfig:
    params: DagumParams
    spec: RatioSpec = field(default_factory=RatioSpec)
    n: int = 1000
    level: float = 0.95
    replicates: int = 10_000
    seed: int = 0
    method: str = "standard"
    a_mode: str = "known"
    a_estimator: str = "mle"

    def __post_init__(self):
        if int(self.replicates) != self.replicates or self.replicates < 1:
            raise DomainError(f"replicates must be a positive integer, got {self.replicates!r}")
        if int(self.n) != self.n or self.n < 10:
            raise DomainError(f"sample size must be an integer >= 10, got {self.n!r}")
        if not 0.0 < self.level < 1.0:
            raise DomainError(f"level must lie in (0, 1), got {self.level!r}")
        if self.method not in METHODS:
            raise DomainError(f"method must be one of {METHODS}, got {self.method!r}")
        if self.a_mode not in A_MODES:
            raise DomainError(f"a_mode must be one of {A_MODES}, got {self.a_mode!r}")
        if self.a_estimator not in A_ESTIMATORS:
            raise DomainError(f"a_estimator must be one of {A_ESTIMATORS}, got {self.a_estimator!r}")


@dataclass(frozen=True)
class CoverageReport:
    """Outcome of a coverage run.

    ``coverage`` and the miss frequencies are taken over replicates whose
    interval could be built; ``failures`` counts the others.
    ``above_upper`` counts replicates with the true ratio above the upper
    end (the event whose nominal probability is ``over_risk``).
    """

    coverage: float
    mean_length: float
    mean_over_risk: float
    replicates: int
    seed: int
    failures: int
    above_upper: int
    below_lower: int
    method: str
    a_mode: str
    true_ratio: float

    @property
    def completed(self) -> int:
        return self.replicates - self.failures

    @property
    def valid(self) -> bool:
        return self.failures <= MAX_FAILURE_SHARE * self.replicates and self.completed > 0

    @property
    def over_frequency(self) -> float:
        return self.above_upper / self.completed if self.completed else math.nan

    @property
    def under_frequency(self) -> float:
        return self.below_lower / self.completed if self.completed else math.nan


@dataclass(frozen=True)
class TableRow:
    a: float
    r_star: float
    over_risk: float
    under_risk: float
    short_length: float
    standard_length: float

    @property
    def reduction_pct(self) -> float:
        return 100.0 * (1.0 - self.short_length / self.standard_length)


def _shape_estimate(config: SimulationConfig, x: np.ndarray) -> float:
    if config.a_mode == "known":
        return config.params.a
    if config.a_estimator == "mle":
        return fit_dagum_mle(x).a
    return fit_dagum_quantiles(x).a


def _replicate(config: SimulationConfig, index: int, true_ratio: float):
    """(inside, above, below, length, over_risk), or None when construction failed."""
    x = sample(config.params, config.n, config.seed, stream=index)
    try:
        est = RatioEstimate(
            r_star=sample_quantile_ratio(x, config.spec),
            n=config.n,
            spec=config.spec,
            a_hat=_shape_estimate(config, x),
        )
        if config.method == "standard":
            iv = ci.standard_interval(est, config.level)
        else:
            iv = ci.shortest_interval(est, config.level)
    except (DomainError, ConvergenceError):
        return None
    return (
        iv.contains(true_ratio),
        true_ratio > iv.upper,
        true_ratio < iv.lower,
        iv.length,
        iv.over_risk,
    )


def _run_chunk(config: SimulationConfig, start: int, stop: int, true_ratio: float):
    return [_replicate(config, i, true_ratio) for i in range(start, stop)]


def run_coverage(config: SimulationConfig, workers: int = 1) -> CoverageReport:
    """Empirical coverage of the configured interval method.

    Replicate ``i`` draws its sample from the stream keyed by
    ``(config.seed, i)`` and results are reduced in replicate order, so the
    report is identical for any ``workers``.
    """
    true_ratio = ratio_of_quantiles(config.params, config.spec)
    total = config.replicates
    if workers <= 1:
        outcomes = _run_chunk(config, 0, total, true_ratio)
    else:
        size = max(1, math.ceil(total / (4 * workers)))
        bounds = [(lo, min(lo + size, total)) for lo in range(0, total, size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(
                _run_chunk,
                [config] * len(bounds),
                [b[0] for b in bounds],
                [b[1] for b in bounds],
                [true_ratio] * len(bounds),
            )
            outcomes = [o for part in parts for o in part]

    done = [o for o in outcomes if o is not None]
    failures = total - len(done)
    k = len(done)
    inside = sum(o[0] for o in done)
    return CoverageReport(
        coverage=inside / k if k else math.nan,
        mean_length=math.fsum(o[3] for o in done) / k if k else math.nan,
        mean_over_risk=math.fsum(o[4] for o in done) / k if k else math.nan,
        replicates=total,
        seed=config.seed,
        failures=failures,
        above_upper=sum(o[1] for o in done),
        below_lower=sum(o[2] for o in done),
        method=config.method,
        a_mode=config.a_mode,
        true_ratio=true_ratio,
    )


def table_row(spec: RatioSpec, n: int, level: float, a: float, r_star: float) -> TableRow:
    est = RatioEstimate(r_star=r_star, n=n, spec=spec, a_hat=a)
    short = ci.shortest_interval(est, level)
    standard = ci.standard_interval(est, level)
    return TableRow(
        a=a,
        r_star=r_star,
        over_risk=short.over_risk,
        under_risk=short.under_risk,
        short_length=short.length,
        standard_length=standard.length,
    )


def reproduce_tables(
    spec: RatioSpec,
    n: int = 1000,
    level: float = 0.95,
    a_values=TABLE_A_VALUES,
    r_values=TABLE_R_VALUES,
) -> list[TableRow]:
    """Shortest vs. standard interval lengths over an ``(a, r*)`` grid.

    Rows run over ``r_values`` within each ``a`` block. No sampling is
    involved: ``r*`` is taken as observed and ``a`` as given.
    """
    if any(not a > 0 for a in a_values):
        raise DomainError("all shape values must be > 0")
    if any(not r > 1 for r in r_values):
        raise DomainError("all ratios must exceed 1")
    return [table_row(spec, n, level, a, r) for a in a_values for r in r_values]
