"""Point estimates and shortest confidence intervals for Dagum quantile ratios."""

from .ci import (
    ConfidenceInterval,
    endpoint,
    endpoint_closed_form,
    endpoint_root_find,
    interval,
    interval_length,
    shortest_interval,
    standard_interval,
)
from .dagum import (
    DagumParams,
    RatioSpec,
    cdf,
    pdf,
    quantile,
    ratio_of_quantiles,
    sample,
    v_from_ratio,
)
from .errors import BracketError, ConvergenceError, DomainError
from .estimator import (
    RatioEstimate,
    asymptotic_w2,
    fit_dagum_mle,
    fit_dagum_quantiles,
    sample_quantile_ratio,
)
from .mc import CoverageReport, SimulationConfig, TableRow, reproduce_tables, run_coverage
from .special import Branch, lambert_w, normal_quantile

__version__ = "0.1.0"
