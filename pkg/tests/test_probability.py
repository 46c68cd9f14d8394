import numpy as np
import pytest

from tempodisc.errors import DomainError
from tempodisc.probability import (
    Degenerate,
    UniformDelay,
    cumulative_prob,
    first_period_prob,
    frequency_ratio,
    relative_frequency,
)


def test_uniform_reaches_one_at_horizon():
    assert cumulative_prob(UniformDelay(20, alpha=1), 20) == 1.0


def test_degenerate_step():
    d = Degenerate(5)
    assert cumulative_prob(d, 4.999) == 0.0
    assert cumulative_prob(d, 5) == 1.0


def test_uniform_with_delay():
    assert cumulative_prob(UniformDelay(20, alpha=2), 1) == pytest.approx(0.025, rel=1e-15)
    assert cumulative_prob(UniformDelay(20, alpha=2), 40) == 1.0
    assert cumulative_prob(UniformDelay(20, alpha=2), 30) == pytest.approx(0.75)


@pytest.mark.parametrize(
    "dist, expected",
    [(UniformDelay(20, 1), 0.05), (UniformDelay(20, 2), 0.025), (Degenerate(1), 1.0)],
)
def test_first_period_prob(dist, expected):
    assert first_period_prob(dist) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("horizon, alpha", [(20, 1), (20, 2.5), (7, 1.3), (1, 1)])
def test_first_period_is_one_over_alpha_n(horizon, alpha):
    assert first_period_prob(UniformDelay(horizon, alpha)) == pytest.approx(
        1 / (alpha * horizon), rel=1e-15
    )


@pytest.mark.parametrize(
    "dist", [UniformDelay(20, 1), UniformDelay(20, 3), UniformDelay(0.5, 1), Degenerate(5)]
)
def test_cdf_monotone_and_bounded(dist):
    t = np.linspace(0, 100, 10001)
    p = cumulative_prob(dist, t)
    assert np.all((p >= 0) & (p <= 1))
    assert np.all(np.diff(p) >= 0)
    assert p[0] == (1.0 if isinstance(dist, Degenerate) and dist.pay_time == 0 else 0.0)
    assert p[-1] == 1.0


def test_entropy_ordering():
    probs = [first_period_prob(UniformDelay(20, a)) for a in (1, 1.5, 2, 4, 10)]
    assert all(b < a for a, b in zip(probs, probs[1:]))


def test_invalid_distributions():
    with pytest.raises(DomainError):
        UniformDelay(20, alpha=0.5)
    with pytest.raises(DomainError):
        UniformDelay(0)
    with pytest.raises(DomainError):
        Degenerate(-1)
    with pytest.raises(DomainError):
        cumulative_prob(UniformDelay(20), -1)


@pytest.mark.parametrize("q, n, expected", [(2, 10, 0.1), (2, 1, 1.0), (1.5, 4, 0.5)])
def test_relative_frequency(q, n, expected):
    assert relative_frequency(q, n) == pytest.approx(expected, rel=1e-15)


def test_relative_frequency_errors():
    with pytest.raises(DomainError):
        relative_frequency(1, 10)
    with pytest.raises(DomainError):
        relative_frequency(2, 0.5)


def test_relative_frequency_cap():
    assert frequency_ratio(1.5, 1) == (1.0, True)
    assert frequency_ratio(2, 4) == (0.25, False)
    assert relative_frequency(1.1, 5) == 1.0


def test_hyperbolic_frequency_times_n():
    n = np.arange(1, 10**6 + 1, dtype=float)
    ratios = np.array([relative_frequency(2, k) for k in n[:2000]])
    # 1/n is correctly rounded; the product can sit one ulp below 1 (n = 49)
    assert np.all(np.abs(ratios * n[:2000] - 1) <= np.spacing(1.0))
    vec = 1.0 / (n * (2.0 - 1.0))
    assert relative_frequency(2, 10**6) == vec[-1]
    assert np.all(np.abs(vec * n - 1) <= np.spacing(1.0))
