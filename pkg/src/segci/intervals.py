"""Confidence intervals for mean DSC: parametric reconstruction and bootstrap.

The parametric interval is the classical t-based bracket

    mean +/- t(n-1, 1-alpha/2) * sd / sqrt(n)

applied to aggregate results as published (mean, test size, SD). When a
publication omits the SD, :func:`approximate_sd` fills it in from the
quadratic mean-to-SD model. The percentile bootstrap operates on
per-case values and serves as the non-parametric cross-check.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .descriptive import interpolated_quantile
from .glm import GlmFit, predict_sd_pct
from .rng import DOMAIN_BOOTSTRAP, substream
from .special import t_quantile

__all__ = [
    "PARAMETRIC_T",
    "BOOTSTRAP_PERCENTILE",
    "AggregateReport",
    "ConfidenceInterval",
    "CiComparison",
    "approximate_sd",
    "parametric_ci",
    "bootstrap_ci",
    "compare_cis",
]

PARAMETRIC_T = "parametric_t"
BOOTSTRAP_PERCENTILE = "bootstrap_percentile"

MIN_BOOTSTRAP_RESAMPLES = 100


@dataclass(frozen=True)
class AggregateReport:
    """Aggregate performance as extractable from a publication.

    All values on the fraction scale; ``sd`` is None when unreported.
    """

    mean_dsc: float
    n: int
    sd: float | None = None

    def __post_init__(self) -> None:
        if not 0.0 <= self.mean_dsc <= 1.0:
            raise ValueError(f"mean_dsc must lie in [0, 1], got {self.mean_dsc}")
        if self.n < 1:
            raise ValueError(f"test size must be >= 1, got {self.n}")
        if self.sd is not None and self.sd < 0.0:
            raise ValueError(f"sd must be >= 0, got {self.sd}")


@dataclass(frozen=True)
class ConfidenceInterval:
    lower: float
    upper: float
    alpha: float
    method: str
    clamped: bool = False

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def contains(self, value: float) -> bool:
        return self.lower <= value <= self.upper


@dataclass(frozen=True)
class CiComparison:
    lower_diff: float
    upper_diff: float
    width_diff: float


def approximate_sd(report: AggregateReport, model: "GlmFit | Sequence[float]") -> float:
    """Model-based SD (fraction scale) for a report lacking one.

    The model operates on the percent scale, so the mean is scaled up
    and the prediction scaled back down.
    """
    return predict_sd_pct(model, report.mean_dsc * 100.0) / 100.0


def parametric_ci(
    mean_dsc: float,
    sd: float,
    n: int,
    alpha: float = 0.05,
    clamp: bool = True,
) -> ConfidenceInterval:
    """t-based confidence interval around a mean DSC.

    Parameters
    ----------
    mean_dsc : float
        Mean on the fraction scale.
    sd : float
        Standard deviation of per-case values, fraction scale.
    n : int
        Test-set size, at least 2.
    alpha : float
        Significance level; 0.05 gives the 95% interval.
    clamp : bool
        Restrict the interval to [0, 1] (a Dice score cannot leave it).
        A clamped interval is marked via the ``clamped`` field.
    """
    if n < 2:
        raise ValueError(f"parametric CI needs n >= 2 for n-1 degrees of freedom, got n={n}")
    if sd < 0.0:
        raise ValueError(f"sd must be >= 0, got {sd}")
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    half_width = t_quantile(1.0 - alpha / 2.0, n - 1) * sd / math.sqrt(n)
    lower = mean_dsc - half_width
    upper = mean_dsc + half_width
    clamped = False
    if clamp:
        clipped_lower = max(0.0, lower)
        clipped_upper = min(1.0, upper)
        clamped = clipped_lower != lower or clipped_upper != upper
        lower, upper = clipped_lower, clipped_upper
    return ConfidenceInterval(lower, upper, alpha, PARAMETRIC_T, clamped)


def _resample_mean(values: np.ndarray, seed: int, index: int) -> float:
    rng = substream(seed, DOMAIN_BOOTSTRAP, index)
    idx = rng.integers(0, values.size, size=values.size)
    # compensated sum: a resample of a constant sample keeps the exact mean
    return math.fsum(values[idx]) / values.size


def bootstrap_ci(
    values: Sequence[float],
    alpha: float = 0.05,
    n_resamples: int = 10_000,
    seed: int = 0,
    workers: int = 1,
) -> ConfidenceInterval:
    """Percentile bootstrap interval for the mean of per-case values.

    Each resample draws its own counter-based random stream from
    (seed, resample index), so the result is bit-identical for a given
    seed regardless of ``workers`` or evaluation order. The sample is
    sorted first, making the result a function of the multiset of
    values rather than their ordering.
    """
    arr = np.sort(np.asarray(values, dtype=float))
    if arr.size == 0:
        raise ValueError("bootstrap_ci needs a non-empty sample")
    if n_resamples < MIN_BOOTSTRAP_RESAMPLES:
        raise ValueError(
            f"n_resamples must be >= {MIN_BOOTSTRAP_RESAMPLES}, got {n_resamples}"
        )
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    if arr[0] == arr[-1]:
        # constant sample: every resample mean equals the shared value
        return ConfidenceInterval(float(arr[0]), float(arr[0]), alpha, BOOTSTRAP_PERCENTILE)

    means = np.empty(n_resamples)
    if workers <= 1:
        for r in range(n_resamples):
            means[r] = _resample_mean(arr, seed, r)
    else:
        def fill(bounds: tuple[int, int]) -> None:
            for r in range(*bounds):
                means[r] = _resample_mean(arr, seed, r)

        step = -(-n_resamples // workers)
        chunks = [(s, min(s + step, n_resamples)) for s in range(0, n_resamples, step)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(fill, chunks))

    means.sort()
    lower = interpolated_quantile(means, alpha / 2.0)
    upper = interpolated_quantile(means, 1.0 - alpha / 2.0)
    return ConfidenceInterval(lower, upper, alpha, BOOTSTRAP_PERCENTILE)


def compare_cis(a: ConfidenceInterval, b: ConfidenceInterval) -> CiComparison:
    """Signed per-field differences a - b between two intervals."""
    if a.alpha != b.alpha:
        raise ValueError(
            f"cannot compare intervals at different alpha ({a.alpha} vs {b.alpha})"
        )
    return CiComparison(
        lower_diff=a.lower - b.lower,
        upper_diff=a.upper - b.upper,
        width_diff=a.width - b.width,
    )
