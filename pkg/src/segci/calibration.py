"""Predicted versus observed CI widths over a validation dataset.

For every (task, method) result with an observed SD, the model SD is
predicted from the mean alone and both SDs are turned into CI widths at
the same alpha and test size. The summary reports the signed difference
observed - predicted (median and IQR), restricted to test sizes above a
threshold, with the absolute-difference summary alongside since either
reading of "difference" may be wanted.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .descriptive import interpolated_quantile
from .glm import GlmFit
from .intervals import AggregateReport, approximate_sd, parametric_ci

__all__ = [
    "CalibrationRecord",
    "CalibrationSummary",
    "CalibrationTable",
    "calibrate",
    "export_calibration_points",
    "write_calibration_csv",
]

DEFAULT_MIN_N = 20


@dataclass(frozen=True)
class CalibrationRecord:
    """Observed and predicted dispersion for one (task, method) result.

    Widths are unclamped so they stay recomputable from (n, sd, alpha).
    """

    task_id: str
    method_id: str
    n: int
    mean_dsc: float
    observed_sd: float
    predicted_sd: float
    observed_width: float
    predicted_width: float

    @property
    def width_diff(self) -> float:
        return self.observed_width - self.predicted_width


@dataclass(frozen=True)
class CalibrationSummary:
    """Median/IQR of width differences over records with n > min_n_filter.

    The statistics are None when the filter removes every record.
    """

    n_records: int
    n_after_filter: int
    min_n_filter: int
    median_width_diff: float | None
    iqr_width_diff: tuple[float, float] | None
    median_abs_width_diff: float | None
    iqr_abs_width_diff: tuple[float, float] | None

    @property
    def empty(self) -> bool:
        return self.n_after_filter == 0


def calibrate(
    results: Iterable[tuple[str, str, int, float, float]],
    model: "GlmFit | Sequence[float]",
    alpha: float = 0.05,
    min_n: int = DEFAULT_MIN_N,
) -> tuple[list[CalibrationRecord], CalibrationSummary]:
    """Build calibration records and their summary.

    Parameters
    ----------
    results : iterable of (task_id, method_id, n, mean_dsc, observed_sd)
        Observed aggregates on the fraction scale, each with n >= 2.
    model : GlmFit or coefficient triple
        Mean-to-SD model used for the predicted side.
    alpha : float
        Significance level for both widths.
    min_n : int
        Only records with n strictly greater than this enter the summary.
    """
    records: list[CalibrationRecord] = []
    for task_id, method_id, n, mean_dsc, observed_sd in results:
        if observed_sd < 0.0:
            raise ValueError(
                f"observed sd must be >= 0, got {observed_sd} for ({task_id}, {method_id})"
            )
        predicted_sd = approximate_sd(AggregateReport(mean_dsc, n), model)
        observed_width = parametric_ci(mean_dsc, observed_sd, n, alpha, clamp=False).width
        predicted_width = parametric_ci(mean_dsc, predicted_sd, n, alpha, clamp=False).width
        records.append(
            CalibrationRecord(
                task_id=str(task_id),
                method_id=str(method_id),
                n=int(n),
                mean_dsc=float(mean_dsc),
                observed_sd=float(observed_sd),
                predicted_sd=predicted_sd,
                observed_width=observed_width,
                predicted_width=predicted_width,
            )
        )
    if not records:
        raise ValueError("calibration needs at least one result")

    kept = [r.width_diff for r in records if r.n > min_n]
    if kept:
        abs_kept = [abs(d) for d in kept]
        summary = CalibrationSummary(
            n_records=len(records),
            n_after_filter=len(kept),
            min_n_filter=min_n,
            median_width_diff=interpolated_quantile(kept, 0.5),
            iqr_width_diff=(
                interpolated_quantile(kept, 0.25),
                interpolated_quantile(kept, 0.75),
            ),
            median_abs_width_diff=interpolated_quantile(abs_kept, 0.5),
            iqr_abs_width_diff=(
                interpolated_quantile(abs_kept, 0.25),
                interpolated_quantile(abs_kept, 0.75),
            ),
        )
    else:
        summary = CalibrationSummary(
            n_records=len(records),
            n_after_filter=0,
            min_n_filter=min_n,
            median_width_diff=None,
            iqr_width_diff=None,
            median_abs_width_diff=None,
            iqr_abs_width_diff=None,
        )
    return records, summary


@dataclass(frozen=True)
class CalibrationTable:
    """Scatter-plot data: one (predicted_width, observed_width, n) row per record."""

    rows: tuple[tuple[float, float, int], ...]
    # Reference line for the plot; perfect calibration falls on y = x.
    identity_line: bool = True


def export_calibration_points(records: Sequence[CalibrationRecord]) -> CalibrationTable:
    """Rows for the calibration scatter plot, preserving record order."""
    return CalibrationTable(
        rows=tuple((r.predicted_width, r.observed_width, r.n) for r in records)
    )


def write_calibration_csv(records: Sequence[CalibrationRecord], path: "str | Path") -> None:
    """Write calibration points as CSV (6 decimal places)."""
    table = export_calibration_points(records)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["predicted_width", "observed_width", "n"])
        for predicted, observed, n in table.rows:
            writer.writerow([f"{predicted:.6f}", f"{observed:.6f}", n])
