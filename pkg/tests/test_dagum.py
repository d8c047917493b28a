import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate, stats

from dagumci.dagum import (
    DagumParams,
    RatioSpec,
    cdf,
    pdf,
    quantile,
    ratio_of_quantiles,
    sample,
    v_from_ratio,
)
from dagumci.errors import DomainError

GRID = [
    DagumParams(a, v, lam)
    for a in (0.1, 0.5, 1.0, 3.0)
    for v in (0.8, 2.0, 5.0)
    for lam in (0.5, 2.0)
]


def test_params_validated():
    with pytest.raises(DomainError):
        DagumParams(0.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        DagumParams(1.0, -1.0, 1.0)
    with pytest.raises(DomainError):
        DagumParams(1.0, 1.0, math.inf)


@pytest.mark.parametrize("alpha, beta", [(0.8, 0.2), (0.0, 0.5), (0.5, 1.0), (0.3, 0.3)])
def test_ratio_spec_validated(alpha, beta):
    with pytest.raises(DomainError):
        RatioSpec(alpha, beta)


def test_cdf_examples():
    p = DagumParams(1, 1, 1)
    assert cdf(p, 1.0) == pytest.approx(0.5, abs=1e-15)
    assert cdf(p, 3.0) == pytest.approx(0.75, abs=1e-15)
    assert cdf(DagumParams(0.5, 2, 2), 2.0) == pytest.approx(1 / math.sqrt(2), abs=1e-15)
    assert cdf(p, 0.0) == 0.0


def test_cdf_rejects_negative():
    with pytest.raises(DomainError):
        cdf(DagumParams(1, 1, 1), -1.0)


def test_cdf_matches_burr_type_iii():
    x = np.logspace(-3, 3, 50)
    for p in GRID:
        ref = stats.burr(c=p.v, d=p.a, scale=p.lam)
        np.testing.assert_allclose(cdf(p, x), ref.cdf(x), rtol=1e-12, atol=1e-300)
        np.testing.assert_allclose(pdf(p, x), ref.pdf(x), rtol=1e-10, atol=1e-300)


def test_cdf_nondecreasing_and_below_one():
    x = np.logspace(-5, 5, 500)
    for p in GRID:
        f = cdf(p, x)
        assert np.all(np.diff(f) >= 0)
        assert np.all((f >= 0) & (f <= 1))


def test_pdf_examples():
    assert pdf(DagumParams(1, 1, 1), 1.0) == pytest.approx(0.25, abs=1e-15)
    assert pdf(DagumParams(1, 2, 1), 1.0) == pytest.approx(0.5, abs=1e-15)


@pytest.mark.parametrize("x", [0.0, -2.0])
def test_pdf_domain(x):
    with pytest.raises(DomainError):
        pdf(DagumParams(1, 1, 1), x)


@pytest.mark.parametrize("x", [0.5, 1.0, 5.0])
def test_pdf_is_derivative_of_cdf(x):
    for p in GRID:
        h = 1e-5 * x
        numeric = (cdf(p, x + h) - cdf(p, x - h)) / (2 * h)
        assert pdf(p, x) == pytest.approx(numeric, rel=1e-6, abs=1e-12)


def test_pdf_normalization():
    for p in GRID:
        upper = quantile(p, 1 - 1e-9)
        # integrate in log x, where the integrand x f(x) is smooth
        total, _ = integrate.quad(
            lambda t: math.exp(t) * pdf(p, math.exp(t)),
            math.log(quantile(p, 1e-12)),
            math.log(upper),
            limit=400,
            epsabs=1e-12,
            epsrel=1e-12,
        )
        assert total == pytest.approx(1.0, abs=1e-6)


def test_quantile_examples():
    p = DagumParams(1, 1, 1)
    assert quantile(p, 0.5) == pytest.approx(1.0, rel=1e-15)
    assert quantile(p, 0.8) == pytest.approx(4.0, rel=1e-15)
    # hand evaluation of 10 * (0.3**-0.5 - 1)**(-1/3)
    expected = 10.0 * (0.3 ** -0.5 - 1.0) ** (-1.0 / 3.0)
    assert expected == pytest.approx(10.659051647682922, rel=1e-14)
    assert quantile(DagumParams(2, 3, 10), 0.3) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("q", [0.0, 1.0, -0.5, 2.0])
def test_quantile_domain(q):
    with pytest.raises(DomainError):
        quantile(DagumParams(1, 1, 1), q)


def test_cdf_quantile_round_trip():
    qs = np.concatenate([[1e-6], np.arange(1, 100) / 100.0, [1 - 1e-6]])
    for p in GRID:
        np.testing.assert_allclose(cdf(p, quantile(p, qs)), qs, rtol=0, atol=1e-12)


def test_quantile_strictly_increasing():
    qs = np.linspace(0, 1, 2001)[1:-1]
    for p in GRID:
        assert np.all(np.diff(quantile(p, qs)) > 0)


@pytest.mark.parametrize("c", [1e-3, 1.0, 1e6])
def test_quantile_scale_equivariance(c):
    qs = np.linspace(0.01, 0.99, 99)
    for p in GRID:
        base = quantile(DagumParams(p.a, p.v, 1.0), qs)
        np.testing.assert_allclose(quantile(DagumParams(p.a, p.v, c), qs), c * base, rtol=1e-15)


def test_small_shape_stays_finite():
    p = DagumParams(0.01, 3.0, 1.0)
    x = quantile(p, np.array([1e-6, 0.1, 0.5, 0.9]))
    assert np.all(np.isfinite(x) & (x > 0))
    np.testing.assert_allclose(cdf(p, x), [1e-6, 0.1, 0.5, 0.9], atol=1e-12)


def test_sample_reproducible_and_positive():
    p = DagumParams(0.5, 2.0, 1.0)
    first = sample(p, 5, seed=2024)
    assert first.shape == (5,)
    assert np.all(first > 0)
    np.testing.assert_array_equal(first, sample(p, 5, seed=2024))
    assert not np.array_equal(first, sample(p, 5, seed=2025))
    assert not np.array_equal(first, sample(p, 5, seed=2024, stream=1))


def test_sample_is_quantile_of_uniforms():
    from dagumci.dagum import replicate_rng

    p = DagumParams(0.7, 3.0, 2.0)
    u = replicate_rng(11, 4).random(100)
    np.testing.assert_array_equal(sample(p, 100, seed=11, stream=4), quantile(p, u))


@pytest.mark.parametrize("count", [0, -3, 2.5])
def test_sample_count_validated(count):
    with pytest.raises(DomainError):
        sample(DagumParams(1, 1, 1), count, seed=1)


def test_sample_ks_statistic():
    p = DagumParams(0.5, 2.0, 1.0)
    x = sample(p, 100_000, seed=7)
    d = stats.kstest(x, lambda t: cdf(p, t)).statistic
    assert d < 0.006


def test_ratio_examples():
    spec = RatioSpec(0.2, 0.8)
    assert ratio_of_quantiles(DagumParams(1, 1, 1), spec) == pytest.approx(16.0, rel=1e-14)
    assert ratio_of_quantiles(DagumParams(1, 1, 7), spec) == pytest.approx(16.0, rel=1e-14)
    # ((0.9**-2 - 1) / (0.1**-2 - 1))**(-1/4)
    expected = ((0.9 ** -2 - 1) / (0.1 ** -2 - 1)) ** -0.25
    assert expected == pytest.approx(4.532540080001767, rel=1e-14)
    assert ratio_of_quantiles(DagumParams(0.5, 4, 1), RatioSpec(0.1, 0.9)) == pytest.approx(
        expected, rel=1e-14
    )


def test_ratio_is_quantile_quotient():
    spec = RatioSpec(0.1, 0.9)
    for p in GRID:
        direct = quantile(p, spec.beta) / quantile(p, spec.alpha)
        assert ratio_of_quantiles(p, spec) == pytest.approx(direct, rel=1e-13)
        assert ratio_of_quantiles(p, spec) > 1


def test_v_from_ratio_examples():
    spec = RatioSpec(0.2, 0.8)
    assert v_from_ratio(1.0, spec, 16.0) == pytest.approx(1.0, rel=1e-15)
    assert v_from_ratio(1.0, spec, 4.0) == pytest.approx(2.0, rel=1e-15)


@pytest.mark.parametrize("r", [1.0, 0.5, -2.0])
def test_v_from_ratio_needs_ratio_above_one(r):
    with pytest.raises(DomainError):
        v_from_ratio(1.0, RatioSpec(), r)


@settings(max_examples=200)
@given(
    a=st.floats(0.05, 20.0),
    v=st.floats(0.2, 20.0),
    alpha=st.floats(0.01, 0.45),
    width=st.floats(0.05, 0.5),
)
def test_v_from_ratio_inverts_ratio(a, v, alpha, width):
    spec = RatioSpec(alpha, alpha + width)
    r = ratio_of_quantiles(DagumParams(a, v, 1.0), spec)
    if r - 1.0 < 1e-6:
        return
    assert v_from_ratio(a, spec, r) == pytest.approx(v, rel=1e-10)
    v_hat = v_from_ratio(a, spec, r)
    assert ratio_of_quantiles(DagumParams(a, v_hat, 1.0), spec) == pytest.approx(r, rel=1e-10)
