"""Descriptive statistics: sample summaries and interpolated quantiles."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

__all__ = ["SampleSummary", "interpolated_quantile", "summarize"]


@dataclass(frozen=True)
class SampleSummary:
    """Five-number summary plus mean and sample SD of a batch of values.

    ``sd`` uses the n-1 denominator and is None for single-value samples.
    """

    n: int
    mean: float
    sd: float | None
    median: float
    q1: float
    q3: float
    min: float
    max: float

    @property
    def iqr(self) -> float:
        return self.q3 - self.q1


def interpolated_quantile(values: Sequence[float], p: float) -> float:
    """Quantile by linear interpolation between closest order statistics.

    The quantile sits at position (n-1)*p of the sorted sample
    (zero-indexed) and is interpolated linearly between the two
    bracketing order statistics.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"quantile level must lie in [0, 1], got {p}")
    s = np.sort(np.asarray(values, dtype=float))
    n = s.size
    if n == 0:
        raise ValueError("cannot take a quantile of an empty sample")
    pos = (n - 1) * p
    lo = int(math.floor(pos))
    if lo >= n - 1:
        return float(s[-1])
    frac = pos - lo
    return float(s[lo] + frac * (s[lo + 1] - s[lo]))


def summarize(values: Sequence[float]) -> SampleSummary:
    """Compute a SampleSummary for a non-empty batch of values.

    Sums use compensated summation, so the result is independent of the
    input order and exact for constant samples.
    """
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        raise ValueError("cannot summarize an empty sample")
    n = int(arr.size)
    s = np.sort(arr)
    if s[0] == s[-1]:
        # constant sample: summation noise must not produce a phantom SD
        value = float(s[0])
        return SampleSummary(
            n=n, mean=value, sd=0.0 if n >= 2 else None,
            median=value, q1=value, q3=value, min=value, max=value,
        )
    mean = math.fsum(arr) / n
    sd = math.sqrt(math.fsum((v - mean) ** 2 for v in arr) / (n - 1)) if n >= 2 else None
    return SampleSummary(
        n=n,
        mean=mean,
        sd=sd,
        median=interpolated_quantile(s, 0.5),
        q1=interpolated_quantile(s, 0.25),
        q3=interpolated_quantile(s, 0.75),
        min=float(s[0]),
        max=float(s[-1]),
    )
