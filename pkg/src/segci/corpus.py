"""Leaderboard analysis: performance gaps versus reconstructed CI widths.

Each paper contributes a comparison table of methods sharing one test
set. The first-ranked method's CI is reconstructed (model SD unless a
reported SD is preferred and present), the gap to the runner-up is
measured, and the corpus summary aggregates widths, gaps, the fraction
of papers whose runner-up mean falls inside the leader's CI, and the
gap-to-width ratios.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .descriptive import SampleSummary, summarize
from .glm import GlmFit
from .intervals import AggregateReport, ConfidenceInterval, approximate_sd, parametric_ci

__all__ = [
    "MethodResult",
    "PaperRecord",
    "PaperAnalysis",
    "CorpusSummary",
    "rank_methods",
    "analyze_paper",
    "analyze_corpus",
    "summarize_analyses",
]


@dataclass(frozen=True)
class MethodResult:
    method_id: str
    mean_dsc: float
    reported_sd: float | None = None

    def __post_init__(self) -> None:
        if not 0.0 <= self.mean_dsc <= 1.0:
            raise ValueError(f"mean_dsc must lie in [0, 1], got {self.mean_dsc}")
        if self.reported_sd is not None and self.reported_sd < 0.0:
            raise ValueError(f"reported_sd must be >= 0, got {self.reported_sd}")


@dataclass(frozen=True)
class PaperRecord:
    """One paper's comparison table: methods evaluated on a shared test set."""

    paper_id: str
    test_n: int
    methods: tuple[MethodResult, ...]

    def __post_init__(self) -> None:
        if self.test_n < 2:
            raise ValueError(f"test_n must be >= 2, got {self.test_n}")
        if not self.methods:
            raise ValueError(f"paper {self.paper_id} carries no methods")


@dataclass(frozen=True)
class PaperAnalysis:
    """Per-paper outcome; runner-up fields are None for single-method papers."""

    paper_id: str
    first: str
    second: str | None
    delta_dsc: float | None
    ci_first: ConfidenceInterval
    second_within_ci: bool | None
    ratio_delta_over_width: float | None
    sd_source: str


@dataclass(frozen=True)
class CorpusSummary:
    n_papers: int
    n_with_runner_up: int
    width: SampleSummary
    delta: SampleSummary | None
    ratio: SampleSummary | None
    overlap_fraction: float | None
    boxplots: dict = field(default_factory=dict)


def rank_methods(paper: PaperRecord) -> list[MethodResult]:
    """Methods in descending mean DSC; ties keep their input order."""
    return sorted(paper.methods, key=lambda m: -m.mean_dsc)


def analyze_paper(
    paper: PaperRecord,
    model: "GlmFit | Sequence[float]",
    alpha: float = 0.05,
    clamp: bool = True,
    prefer_reported_sd: bool = True,
) -> PaperAnalysis:
    """Reconstruct the leader's CI and compare the runner-up against it.

    With ``prefer_reported_sd`` the leader's own reported SD is used when
    present; pass False to force the model approximation throughout (for
    sensitivity analysis).
    """
    ranked = rank_methods(paper)
    first = ranked[0]
    if prefer_reported_sd and first.reported_sd is not None:
        sd = first.reported_sd
        sd_source = "reported"
    else:
        sd = approximate_sd(AggregateReport(first.mean_dsc, paper.test_n), model)
        sd_source = "model"
    ci_first = parametric_ci(first.mean_dsc, sd, paper.test_n, alpha, clamp=clamp)

    second = ranked[1] if len(ranked) > 1 else None
    if second is None:
        delta = None
        within = None
        ratio = None
    else:
        delta = first.mean_dsc - second.mean_dsc
        within = ci_first.contains(second.mean_dsc)
        ratio = delta / ci_first.width if ci_first.width > 0.0 else None
    return PaperAnalysis(
        paper_id=paper.paper_id,
        first=first.method_id,
        second=second.method_id if second is not None else None,
        delta_dsc=delta,
        ci_first=ci_first,
        second_within_ci=within,
        ratio_delta_over_width=ratio,
        sd_source=sd_source,
    )


def summarize_analyses(analyses: Sequence[PaperAnalysis]) -> CorpusSummary:
    """Aggregate per-paper analyses; stable over input order (sorts by paper_id)."""
    if not analyses:
        raise ValueError("corpus summary needs at least one paper")
    ordered = sorted(analyses, key=lambda a: a.paper_id)
    widths = [a.ci_first.width for a in ordered]
    deltas = [a.delta_dsc for a in ordered if a.delta_dsc is not None]
    ratios = [
        a.ratio_delta_over_width for a in ordered if a.ratio_delta_over_width is not None
    ]
    overlaps = [a.second_within_ci for a in ordered if a.second_within_ci is not None]

    width_summary = summarize(widths)
    delta_summary = summarize(deltas) if deltas else None
    ratio_summary = summarize(ratios) if ratios else None
    overlap_fraction = sum(overlaps) / len(overlaps) if overlaps else None

    def five_number(s: SampleSummary) -> dict:
        return {"min": s.min, "q1": s.q1, "median": s.median, "q3": s.q3, "max": s.max}

    boxplots = {"width": five_number(width_summary)}
    if delta_summary is not None:
        boxplots["delta"] = five_number(delta_summary)
    if ratio_summary is not None:
        boxplots["ratio"] = five_number(ratio_summary)

    return CorpusSummary(
        n_papers=len(ordered),
        n_with_runner_up=len(deltas),
        width=width_summary,
        delta=delta_summary,
        ratio=ratio_summary,
        overlap_fraction=overlap_fraction,
        boxplots=boxplots,
    )


def analyze_corpus(
    papers: Sequence[PaperRecord],
    model: "GlmFit | Sequence[float]",
    alpha: float = 0.05,
    clamp: bool = True,
    prefer_reported_sd: bool = True,
) -> CorpusSummary:
    """Analyze every paper and aggregate; see :func:`summarize_analyses`."""
    if not papers:
        raise ValueError("corpus must contain at least one paper")
    analyses = [
        analyze_paper(p, model, alpha=alpha, clamp=clamp, prefer_reported_sd=prefer_reported_sd)
        for p in papers
    ]
    return summarize_analyses(analyses)
