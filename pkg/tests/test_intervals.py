import math

import pytest

from mc_fixtures import beta_sample
from segci import (
    AggregateReport,
    ConfidenceInterval,
    approximate_sd,
    bootstrap_ci,
    compare_cis,
    paper_model,
    parametric_ci,
)

PAPER_COEFFS = (2.0310, 0.0726, -0.0008)


class TestApproximateSd:
    def test_paper_model_at_090(self):
        sd = approximate_sd(AggregateReport(0.90, 100), paper_model())
        assert sd == pytest.approx(0.080447, abs=1e-5)

    def test_paper_model_at_zero(self):
        sd = approximate_sd(AggregateReport(0.0, 100), paper_model())
        assert sd == pytest.approx(0.076224, abs=1e-4)

    def test_constant_model(self):
        sd = approximate_sd(AggregateReport(0.42, 10), (math.log(5.0), 0.0, 0.0))
        assert sd == pytest.approx(0.05, abs=1e-12)

    def test_report_validation(self):
        with pytest.raises(ValueError):
            AggregateReport(1.2, 10)
        with pytest.raises(ValueError):
            AggregateReport(0.5, 0)
        with pytest.raises(ValueError):
            AggregateReport(0.5, 10, sd=-0.1)


class TestParametricCi:
    def test_worked_example_n100(self):
        ci = parametric_ci(0.90, 0.080447, 100)
        assert ci.lower == pytest.approx(0.88404, abs=1e-5)
        assert ci.upper == pytest.approx(0.91596, abs=1e-5)
        assert ci.width == pytest.approx(0.03193, abs=1e-5)
        assert ci.method == "parametric_t"
        assert not ci.clamped

    def test_worked_example_n30(self):
        ci = parametric_ci(0.90, 0.080447, 30)
        assert ci.lower == pytest.approx(0.86996, abs=1e-5)
        assert ci.upper == pytest.approx(0.93004, abs=1e-5)
        assert ci.width == pytest.approx(0.06008, abs=1e-5)

    def test_zero_sd_degenerates(self):
        ci = parametric_ci(0.90, 0.0, 50)
        assert ci.lower == ci.upper == 0.90

    def test_clamping(self):
        clamped = parametric_ci(0.99, 0.2, 4)
        assert clamped.upper == 1.0
        assert clamped.clamped
        free = parametric_ci(0.99, 0.2, 4, clamp=False)
        assert free.upper > 1.0
        assert not free.clamped

    def test_mean_always_inside(self):
        for mean in (0.0, 0.01, 0.5, 0.99, 1.0):
            for n in (2, 10, 1000):
                ci = parametric_ci(mean, 0.3, n)
                assert ci.lower <= mean <= ci.upper

    def test_width_strictly_decreasing_in_n(self):
        widths = [parametric_ci(0.8, 0.1, n, clamp=False).width for n in (2, 5, 20, 100, 1000)]
        assert all(a > b for a, b in zip(widths, widths[1:]))

    def test_width_vanishes_for_huge_n(self):
        # at n = 1e6 and sd = 0.3 the margin of error is t * sd / 1000 ~ 5.9e-4
        ci = parametric_ci(0.5, 0.3, 10**6)
        assert ci.width / 2.0 < 1e-3
        assert parametric_ci(0.5, 0.3, 4 * 10**6).width < 1e-3

    def test_width_linear_in_sd(self):
        base = parametric_ci(0.5, 0.1, 50, clamp=False).width
        tripled = parametric_ci(0.5, 0.3, 50, clamp=False).width
        assert tripled == pytest.approx(3.0 * base, rel=1e-12)

    def test_errors(self):
        with pytest.raises(ValueError):
            parametric_ci(0.5, 0.1, 1)
        with pytest.raises(ValueError):
            parametric_ci(0.5, -0.1, 10)
        with pytest.raises(ValueError):
            parametric_ci(0.5, 0.1, 10, alpha=1.5)


class TestBootstrapCi:
    def test_constant_sample(self):
        ci = bootstrap_ci([0.8] * 25, seed=123, n_resamples=500)
        assert ci.lower == ci.upper == 0.8
        assert ci.method == "bootstrap_percentile"

    def test_two_values(self):
        ci = bootstrap_ci([0.0, 1.0], seed=9, n_resamples=10_000)
        assert 0.0 <= ci.lower <= 0.5 <= ci.upper <= 1.0

    def test_endpoints_within_sample_range(self):
        values = beta_sample(40, 2.0, 5.0, seed=21)
        ci = bootstrap_ci(values, seed=4, n_resamples=2_000)
        assert values.min() <= ci.lower <= ci.upper <= values.max()

    def test_deterministic_and_permutation_invariant(self):
        values = beta_sample(30, 8.0, 2.0, seed=13)
        ci_a = bootstrap_ci(values, seed=77, n_resamples=1_000)
        ci_b = bootstrap_ci(values, seed=77, n_resamples=1_000)
        shuffled = values[::-1].copy()
        ci_c = bootstrap_ci(shuffled, seed=77, n_resamples=1_000)
        assert ci_a == ci_b == ci_c

    def test_workers_do_not_change_result(self):
        values = beta_sample(50, 8.0, 2.0, seed=5)
        sequential = bootstrap_ci(values, seed=11, n_resamples=800, workers=1)
        threaded = bootstrap_ci(values, seed=11, n_resamples=800, workers=4)
        assert sequential == threaded

    def test_agreement_with_parametric(self):
        # The documented cross-check: on a well-behaved sample of 100
        # cases the percentile bootstrap and the t interval nearly agree.
        values = beta_sample(100, 8.0, 2.0, seed=42)
        boot = bootstrap_ci(values, alpha=0.05, n_resamples=10_000, seed=42)
        para = parametric_ci(float(values.mean()), float(values.std(ddof=1)), 100)
        assert abs(boot.lower - para.lower) < 0.01
        assert abs(boot.upper - para.upper) < 0.01

    def test_errors(self):
        with pytest.raises(ValueError):
            bootstrap_ci([], seed=1)
        with pytest.raises(ValueError):
            bootstrap_ci([0.5, 0.6], n_resamples=50, seed=1)


class TestCompareCis:
    def test_identical_all_zero(self):
        a = parametric_ci(0.9, 0.1, 30)
        diff = compare_cis(a, a)
        assert diff.lower_diff == diff.upper_diff == diff.width_diff == 0.0

    def test_width_difference(self):
        a = ConfidenceInterval(0.88, 0.92, 0.05, "parametric_t")
        b = ConfidenceInterval(0.87, 0.93, 0.05, "parametric_t")
        diff = compare_cis(a, b)
        assert diff.width_diff == pytest.approx(-0.02, abs=1e-12)

    def test_bootstrap_vs_parametric_width(self):
        values = beta_sample(100, 8.0, 2.0, seed=42)
        boot = bootstrap_ci(values, alpha=0.05, n_resamples=10_000, seed=42)
        para = parametric_ci(float(values.mean()), float(values.std(ddof=1)), 100)
        assert abs(compare_cis(para, boot).width_diff) < 0.01

    def test_alpha_mismatch(self):
        a = parametric_ci(0.9, 0.1, 30, alpha=0.05)
        b = parametric_ci(0.9, 0.1, 30, alpha=0.10)
        with pytest.raises(ValueError):
            compare_cis(a, b)
