import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special as sp_special
from scipy import stats as sp_stats

from segci import ln_gamma, regularized_incomplete_beta, t_cdf, t_quantile


class TestLnGamma:
    def test_at_one(self):
        assert abs(ln_gamma(1.0) - 0.0) <= 1e-10

    def test_at_half(self):
        # ln Gamma(1/2) = ln sqrt(pi)
        assert abs(ln_gamma(0.5) - 0.5723649429) <= 1e-10

    def test_at_ten(self):
        # Gamma(10) = 9! = 362880
        assert abs(ln_gamma(10.0) - 12.8018274801) <= 1e-10

    @pytest.mark.parametrize("x", [-1.0, 0.0, -0.5])
    def test_domain_error(self, x):
        with pytest.raises(ValueError):
            ln_gamma(x)

    def test_against_stdlib_moderate_range(self):
        # 1e-10 absolute is attainable while |ln Gamma| stays small enough
        # that a double has spacing below that tolerance.
        for i in range(2000):
            x = 0.1 + i * (1000.0 - 0.1) / 1999
            assert abs(ln_gamma(x) - math.lgamma(x)) <= 1e-10

    def test_against_stdlib_large_range(self):
        # Above ~1e5 the magnitude of ln Gamma makes 1e-10 absolute finer
        # than one ulp; check a tight relative tolerance instead.
        x = 50.0
        while x <= 1e6:
            assert math.isclose(ln_gamma(x), math.lgamma(x), rel_tol=1e-14, abs_tol=1e-10)
            x *= 1.7


class TestRegularizedIncompleteBeta:
    def test_uniform_cdf(self):
        assert regularized_incomplete_beta(1.0, 1.0, 0.3) == pytest.approx(0.3, abs=1e-12)

    def test_symmetric_midpoint(self):
        assert regularized_incomplete_beta(2.0, 2.0, 0.5) == pytest.approx(0.5, abs=1e-12)

    def test_one_two_half(self):
        # closed form 1 - (1 - x)^2
        assert regularized_incomplete_beta(1.0, 2.0, 0.5) == pytest.approx(0.75, abs=1e-12)

    def test_endpoints(self):
        assert regularized_incomplete_beta(3.0, 4.0, 0.0) == 0.0
        assert regularized_incomplete_beta(3.0, 4.0, 1.0) == 1.0

    @pytest.mark.parametrize(
        "a,b,x", [(0.0, 1.0, 0.5), (1.0, -2.0, 0.5), (1.0, 1.0, -0.1), (1.0, 1.0, 1.5)]
    )
    def test_domain_error(self, a, b, x):
        with pytest.raises(ValueError):
            regularized_incomplete_beta(a, b, x)

    @settings(max_examples=200, deadline=None)
    @given(
        a=st.floats(0.05, 50.0),
        b=st.floats(0.05, 50.0),
        # keep x away from the edges so 1 - x is exactly representable
        x=st.floats(1e-6, 1.0 - 1e-6),
    )
    def test_complement_identity(self, a, b, x):
        left = regularized_incomplete_beta(a, b, x)
        right = regularized_incomplete_beta(b, a, 1.0 - x)
        assert abs(left + right - 1.0) <= 1e-10

    @settings(max_examples=100, deadline=None)
    @given(a=st.floats(0.1, 30.0), b=st.floats(0.1, 30.0), x=st.floats(0.0, 1.0))
    def test_matches_scipy(self, a, b, x):
        ours = regularized_incomplete_beta(a, b, x)
        ref = float(sp_special.betainc(a, b, x))
        assert ours == pytest.approx(ref, rel=1e-10, abs=1e-12)

    def test_nondecreasing_in_x(self):
        for a, b in [(0.5, 0.5), (2.0, 5.0), (10.0, 3.0)]:
            previous = 0.0
            for i in range(101):
                value = regularized_incomplete_beta(a, b, i / 100.0)
                assert value >= previous - 1e-15
                previous = value


class TestTQuantile:
    def test_median_is_zero(self):
        assert t_quantile(0.5, 7.0) == 0.0

    @pytest.mark.parametrize(
        "df,expected",
        [(1.0, 12.706205), (29.0, 2.045230), (99.0, 1.984217)],
    )
    def test_reference_values(self, df, expected):
        assert t_quantile(0.975, df) == pytest.approx(expected, abs=1e-6)

    def test_symmetry(self):
        assert t_quantile(0.025, 10.0) == pytest.approx(-t_quantile(0.975, 10.0), abs=1e-12)

    def test_strictly_decreasing_in_df_with_normal_limit(self):
        previous = math.inf
        for df in (1, 2, 5, 10, 30, 100, 1000, 1e6):
            value = t_quantile(0.975, df)
            assert value < previous
            previous = value
        assert t_quantile(0.975, 1e6) == pytest.approx(1.959964, abs=1e-3)

    @pytest.mark.parametrize("p,df", [(0.0, 5.0), (1.0, 5.0), (-0.1, 5.0), (0.5, 0.5)])
    def test_domain_error(self, p, df):
        with pytest.raises(ValueError):
            t_quantile(p, df)

    def test_matches_scipy_over_grid(self):
        for df in (1.0, 2.5, 7.0, 42.0, 350.0):
            for p in (0.005, 0.05, 0.33, 0.77, 0.95, 0.995):
                assert t_quantile(p, df) == pytest.approx(
                    float(sp_stats.t.ppf(p, df)), abs=1e-6
                )

    def test_cdf_quantile_roundtrip(self):
        for p in (0.1, 0.6, 0.975):
            for df in (1.0, 9.0, 120.0):
                assert t_cdf(t_quantile(p, df), df) == pytest.approx(p, abs=1e-10)
