"""Special functions for Student's t distribution.

Self-contained double-precision routines: log-gamma (Lanczos series),
the regularized incomplete beta function (modified Lentz continued
fraction), and the t CDF / quantile built on top of them. No external
dependency beyond the math stdlib; accuracy is cross-checked against
scipy in the test suite.
"""

from __future__ import annotations

import math

__all__ = [
    "ln_gamma",
    "regularized_incomplete_beta",
    "t_cdf",
    "t_pdf",
    "t_quantile",
]

# Lanczos approximation, g = 7, 9 coefficients. Relative error of the
# reconstructed Gamma is ~1e-15 over the positive reals.
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_LN_SQRT_TWO_PI = 0.9189385332046727

_CF_MAX_TERMS = 500
_CF_EPS = 1e-15

# Inversion budget shared by bracketing, bisection and Newton steps.
_INV_MAX_ITER = 200
_INV_P_TOL = 1e-12
_INV_BISECT_STEPS = 12


def ln_gamma(x: float) -> float:
    """Natural log of the gamma function for x > 0.

    Parameters
    ----------
    x : float
        Argument, must be strictly positive.

    Returns
    -------
    float
        ln of gamma(x). Absolute error is below 1e-10 for moderate
        arguments; for very large x (where |ln gamma| exceeds ~1e5) the
        error is limited by the spacing of doubles at that magnitude.
    """
    if not x > 0.0:
        raise ValueError(f"ln_gamma requires x > 0, got {x}")
    if x < 0.5:
        # Reflection keeps the series argument at 0.5 or above.
        return math.log(math.pi / math.sin(math.pi * x)) - ln_gamma(1.0 - x)
    z = x - 1.0
    acc = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        acc += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _LN_SQRT_TWO_PI + (z + 0.5) * math.log(t) - t + math.log(acc)


def _beta_cf(a: float, b: float, x: float) -> float:
    # Modified Lentz evaluation of the continued fraction for the
    # incomplete beta integral. Only called with x below the symmetry
    # switch point (a+1)/(a+b+2), where convergence is fast.
    tiny = 1e-300
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, _CF_MAX_TERMS + 1):
        m2 = 2 * m
        # even step
        coeff = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + coeff * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + coeff / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        # odd step
        coeff = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + coeff * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + coeff / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            return h
    raise ArithmeticError(
        f"incomplete beta continued fraction did not converge (a={a}, b={b}, x={x})"
    )


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta function I_x(a, b).

    Parameters
    ----------
    a, b : float
        Shape parameters, both strictly positive.
    x : float
        Integration limit in [0, 1].

    Returns
    -------
    float
        I_x(a, b) in [0, 1], relative error around 1e-13.
    """
    if not (a > 0.0 and b > 0.0):
        raise ValueError(f"shape parameters must be positive, got a={a}, b={b}")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    ln_front = (
        ln_gamma(a + b)
        - ln_gamma(a)
        - ln_gamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_cf(a, b, x) / a
    # Use the symmetry I_x(a,b) = 1 - I_{1-x}(b,a) where the continued
    # fraction for the complement converges faster.
    return 1.0 - front * _beta_cf(b, a, 1.0 - x) / b


def t_cdf(t: float, df: float) -> float:
    """Cumulative distribution function of Student's t with df degrees of freedom."""
    if df < 1.0:
        raise ValueError(f"degrees of freedom must be >= 1, got {df}")
    if t == 0.0:
        return 0.5
    x = df / (df + t * t)
    tail = 0.5 * regularized_incomplete_beta(0.5 * df, 0.5, x)
    return 1.0 - tail if t > 0.0 else tail


def t_pdf(t: float, df: float) -> float:
    """Density of Student's t with df degrees of freedom."""
    if df < 1.0:
        raise ValueError(f"degrees of freedom must be >= 1, got {df}")
    ln_f = (
        ln_gamma(0.5 * (df + 1.0))
        - ln_gamma(0.5 * df)
        - 0.5 * math.log(df * math.pi)
        - 0.5 * (df + 1.0) * math.log1p(t * t / df)
    )
    return math.exp(ln_f)


def t_quantile(p: float, df: float) -> float:
    """p-quantile of Student's t with df degrees of freedom.

    Numeric inversion of ``t_cdf``: the root is bracketed by doubling,
    narrowed by a fixed number of bisection steps, then polished with
    safeguarded Newton iterations. Terminates when the CDF residual
    drops below 1e-12 or after 200 CDF evaluations.

    Parameters
    ----------
    p : float
        Probability level, strictly inside (0, 1).
    df : float
        Degrees of freedom, at least 1.

    Returns
    -------
    float
        The quantile, with absolute error well below 1e-6 over the
        probability range used for confidence intervals.
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must lie strictly inside (0, 1), got {p}")
    if df < 1.0:
        raise ValueError(f"degrees of freedom must be >= 1, got {df}")
    if p == 0.5:
        return 0.0
    if p < 0.5:
        return -t_quantile(1.0 - p, df)

    used = 0
    hi = 1.0
    while t_cdf(hi, df) < p and used < _INV_MAX_ITER:
        hi *= 2.0
        used += 1
    lo = 0.0 if hi == 1.0 else hi / 2.0

    t = 0.5 * (lo + hi)
    for _ in range(_INV_BISECT_STEPS):
        if used >= _INV_MAX_ITER:
            break
        t = 0.5 * (lo + hi)
        f = t_cdf(t, df) - p
        used += 1
        if abs(f) < _INV_P_TOL:
            return t
        if f < 0.0:
            lo = t
        else:
            hi = t

    t = 0.5 * (lo + hi)
    while used < _INV_MAX_ITER:
        f = t_cdf(t, df) - p
        used += 1
        if abs(f) < _INV_P_TOL:
            return t
        if f < 0.0:
            lo = max(lo, t)
        else:
            hi = min(hi, t)
        density = t_pdf(t, df)
        t_next = t - f / density if density > 0.0 else 0.5 * (lo + hi)
        if not lo < t_next < hi:
            t_next = 0.5 * (lo + hi)
        if t_next == t:
            return t
        t = t_next
    return t
