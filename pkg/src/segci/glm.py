"""Gamma GLM with log link relating SD to mean DSC on the percent scale.

The model expresses ln(SD) as a quadratic in the mean Dice score, both
measured in percentage points:

    ln SD = b0 + b1 * x + b2 * x^2,   x = mean DSC in [0, 100]

Fitting uses iteratively reweighted least squares. For the Gamma family
with a log link the working weights are constant, so each IRLS step is
an ordinary least-squares solve on the working response
z = eta + (y - mu) / mu.

A published reference model ships with the package; see
:func:`paper_model`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Sequence

import numpy as np

__all__ = [
    "TrainingPair",
    "GlmFit",
    "InsufficientDataError",
    "RankDeficientError",
    "irls_gamma_log",
    "fit_gamma_log_glm",
    "predict_sd_pct",
    "sd_upper_bound_pct",
    "save_model",
    "load_model",
    "paper_model",
]

MU_FLOOR = 1e-6
DEVIANCE_RTOL = 1e-8
SCORE_RTOL = 1e-8
MAX_ITERATIONS = 100


class InsufficientDataError(ValueError):
    """Raised when too few observations are supplied to identify the model."""


class RankDeficientError(ValueError):
    """Raised when the design matrix does not have full column rank."""


@dataclass(frozen=True)
class TrainingPair:
    """One (mean DSC, SD) observation on the percentage-point scale."""

    dsc_mean_pct: float
    sd_pct: float


@dataclass(frozen=True)
class GlmFit:
    """Result of an IRLS fit (or a loaded model file).

    ``dispersion`` is the Pearson estimate; it does not influence the
    coefficients. Fields other than the coefficients may be None for
    models loaded from files that do not report them.
    """

    coefficients: tuple[float, float, float]
    dispersion: float | None
    deviance: float | None
    iterations: int
    converged: bool | None
    n_obs: int | None


def _gamma_deviance(y: np.ndarray, mu: np.ndarray) -> float:
    return float(2.0 * np.sum(-np.log(y / mu) + (y - mu) / mu))


def irls_gamma_log(design: np.ndarray, y: np.ndarray) -> GlmFit:
    """Fit a Gamma/log-link GLM for an arbitrary design matrix.

    Starts from mu = max(y, 1e-6) and iterates OLS on the working
    response until the relative deviance change falls below 1e-8 and the
    score equations X' (y - mu)/mu are satisfied to 1e-8 per
    observation, or 100 iterations elapse.
    """
    design = np.asarray(design, dtype=float)
    y = np.asarray(y, dtype=float)
    if design.ndim != 2 or design.shape[0] != y.shape[0]:
        raise ValueError("design must be a 2-D matrix with one row per response")
    n, p = design.shape
    if np.any(y <= 0.0):
        raise ValueError("Gamma responses must be strictly positive")

    mu = np.maximum(y, MU_FLOOR)
    eta = np.log(mu)
    dev_old = _gamma_deviance(y, mu)
    converged = False
    for iterations in range(1, MAX_ITERATIONS + 1):
        z = eta + (y - mu) / mu
        beta, _, rank, _ = np.linalg.lstsq(design, z, rcond=None)
        if rank < p:
            raise RankDeficientError(
                f"design matrix has rank {rank} < {p}; predictor values are degenerate"
            )
        eta = design @ beta
        mu = np.maximum(np.exp(eta), MU_FLOOR)
        dev = _gamma_deviance(y, mu)
        score_sup = float(np.max(np.abs(design.T @ ((y - mu) / mu))))
        if (
            abs(dev - dev_old) / (abs(dev) + 1e-10) < DEVIANCE_RTOL
            and score_sup <= SCORE_RTOL * n
        ):
            converged = True
            break
        dev_old = dev

    pearson = float(np.sum(((y - mu) / mu) ** 2))
    dispersion = pearson / (n - p) if n > p else None
    return GlmFit(
        coefficients=tuple(float(b) for b in beta),  # type: ignore[arg-type]
        dispersion=dispersion,
        deviance=dev,
        iterations=iterations,
        converged=converged,
        n_obs=n,
    )


def fit_gamma_log_glm(data: Sequence[TrainingPair]) -> GlmFit:
    """Fit the quadratic mean-to-SD model on percentage-scale pairs.

    Parameters
    ----------
    data : sequence of TrainingPair
        At least 4 pairs; SDs strictly positive, means within [0, 100].

    Returns
    -------
    GlmFit
        Coefficients (intercept, linear, quadratic), Pearson dispersion
        with n-3 denominator, final deviance and iteration metadata.
    """
    if len(data) < 4:
        raise InsufficientDataError(
            f"need at least 4 training pairs, got {len(data)}"
        )
    x = np.array([pair.dsc_mean_pct for pair in data], dtype=float)
    y = np.array([pair.sd_pct for pair in data], dtype=float)
    if np.any(y <= 0.0):
        raise ValueError("all sd_pct values must be strictly positive")
    if np.any((x < 0.0) | (x > 100.0)):
        raise ValueError("dsc_mean_pct values must lie within [0, 100]")
    design = np.column_stack([np.ones_like(x), x, x * x])
    return irls_gamma_log(design, y)


def sd_upper_bound_pct(dsc_mean_pct: float) -> float:
    """Largest SD a [0, 100]-bounded variable with this mean can have.

    Attained by the two-point distribution concentrated on 0 and 100.
    """
    return math.sqrt(dsc_mean_pct * (100.0 - dsc_mean_pct))


def _coefficients(model: "GlmFit | Sequence[float]") -> tuple[float, float, float]:
    if isinstance(model, GlmFit):
        return model.coefficients
    b0, b1, b2 = (float(c) for c in model)
    return (b0, b1, b2)


def predict_sd_pct(
    model: "GlmFit | Sequence[float]",
    dsc_mean_pct: float,
    clamp: bool = True,
) -> float:
    """Model SD in percentage points at a mean DSC in [0, 100].

    With ``clamp`` enabled (the default) the prediction is capped at the
    two-point-distribution bound sqrt(x * (100 - x)) wherever that bound
    is positive; at the degenerate endpoints x = 0 and x = 100 the raw
    model value is returned.
    """
    if not 0.0 <= dsc_mean_pct <= 100.0:
        raise ValueError(f"mean DSC must lie in [0, 100], got {dsc_mean_pct}")
    b0, b1, b2 = _coefficients(model)
    predicted = math.exp(b0 + b1 * dsc_mean_pct + b2 * dsc_mean_pct * dsc_mean_pct)
    if clamp:
        bound = sd_upper_bound_pct(dsc_mean_pct)
        if bound > 0.0:
            predicted = min(predicted, bound)
    return predicted


_MODEL_SCHEMA_KEYS = {"coefficients", "dispersion", "scale", "n_obs", "converged"}


def save_model(fit: GlmFit, path: "str | Path") -> None:
    """Persist a fit as a JSON model document (percent scale, 6 decimals)."""
    doc = {
        "coefficients": [round(c, 6) for c in fit.coefficients],
        "dispersion": round(fit.dispersion, 6) if fit.dispersion is not None else None,
        "scale": "percent",
        "n_obs": fit.n_obs,
        "converged": fit.converged,
    }
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def _model_from_doc(doc: dict) -> GlmFit:
    coeffs = doc["coefficients"]
    if len(coeffs) != 3:
        raise ValueError(f"model file must carry 3 coefficients, found {len(coeffs)}")
    if doc.get("scale") != "percent":
        raise ValueError(f"unsupported model scale {doc.get('scale')!r}")
    return GlmFit(
        coefficients=tuple(float(c) for c in coeffs),  # type: ignore[arg-type]
        dispersion=doc.get("dispersion"),
        deviance=None,
        iterations=0,
        converged=doc.get("converged"),
        n_obs=doc.get("n_obs"),
    )


def load_model(path: "str | Path") -> GlmFit:
    """Load a JSON model document produced by :func:`save_model`."""
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    unknown = set(doc) - _MODEL_SCHEMA_KEYS
    if unknown:
        raise ValueError(f"unknown model file fields: {sorted(unknown)}")
    return _model_from_doc(doc)


def paper_model() -> GlmFit:
    """The published reference model bundled with the package.

    Coefficients (2.0310, 0.0726, -0.0008) on the percent scale; the
    source did not report a dispersion estimate, so that field is None.
    """
    text = resources.files("segci.data").joinpath("paper_model.json").read_text("utf-8")
    return _model_from_doc(json.loads(text))
