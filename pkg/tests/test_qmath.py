import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tempodisc.errors import DomainError
from tempodisc.qmath import check_q, log_q_exp, pow1p, q_exp, q_log


def direct_q_exp(q, x):
    # textbook formula, no log-space tricks
    if q == 1:
        return math.exp(x)
    return (1 + (1 - q) * x) ** (1 / (1 - q))


@pytest.mark.parametrize(
    "q, x, expected",
    [(2.0, -1.0, 0.5), (1.0, 0.0, 1.0), (1.5, -2.0, 0.25)],
)
def test_q_exp_examples(q, x, expected):
    assert q_exp(q, x) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize(
    "q, y, expected",
    [(2.0, 0.5, -1.0), (1.0, 1.0, 0.0), (3.0, 2.0, 0.375)],
)
def test_q_log_examples(q, y, expected):
    assert q_log(q, y) == pytest.approx(expected, rel=1e-15, abs=1e-300)


def test_q_exp_matches_direct_formula():
    for q in (1.25, 1.5, 2.0, 3.0, 4.5):
        for x in (-0.01, -0.5, -3.0, -40.0):
            assert q_exp(q, x) == pytest.approx(direct_q_exp(q, x), rel=1e-13)


def test_q_exp_vectorised():
    x = np.array([0.0, -1.0, -3.0])
    np.testing.assert_allclose(q_exp(2.0, x), 1 / (1 - x), rtol=1e-15)
    assert isinstance(q_exp(2.0, -1.0), float)


def test_domain_errors():
    with pytest.raises(DomainError):
        q_exp(2.0, 1.0)  # 1 + (1 - q) x = 0
    with pytest.raises(DomainError):
        q_exp(3.0, np.array([0.1, 0.6]))
    with pytest.raises(DomainError):
        q_log(2.0, 0.0)
    with pytest.raises(DomainError):
        q_log(2.0, -1.0)
    with pytest.raises(DomainError):
        pow1p(-1.0, 2.0)
    with pytest.raises(DomainError):
        q_exp(0.5, -1.0)
    with pytest.raises(DomainError):
        check_q(float("nan"))


def test_q_exp_positive_argument_inside_domain():
    # q > 1 with small positive x is still defined
    assert q_exp(2.0, 0.5) == pytest.approx(2.0, rel=1e-15)


@pytest.mark.parametrize(
    "x, p, expected, rel",
    [
        (0.0, 7.0, 1.0, 0.0),
        (1.0, 0.5, math.sqrt(2.0), 1e-15),
        # series oracle: exp(p * (x - x**2/2)) = exp(1e-6 - 5e-19)
        (1e-12, 1e6, math.exp(1e-6), 1e-12),
    ],
)
def test_pow1p_examples(x, p, expected, rel):
    assert pow1p(x, p) == pytest.approx(expected, rel=rel, abs=0)


def test_pow1p_beats_naive_power():
    x, p = 3e-14, 1e9
    oracle = math.exp(p * (x - x * x / 2))
    assert abs(pow1p(x, p) - oracle) / oracle < 1e-14
    assert abs((1 + x) ** p - oracle) / oracle > 1e-9  # naive form loses digits


def test_limit_continuity():
    eps = 1e-9
    rho = np.linspace(0, 1, 21)[:, None]
    n = np.linspace(0, 100, 41)[None, :]
    x = -rho * n
    near = q_exp(1 + eps, x)
    exact = np.exp(x)
    assert np.all(np.abs(near - exact) <= 1e-6 * exact)


def test_limit_continuity_outside_switch():
    # just above the exponential-branch switch the closed form is used
    q = 1 + 2e-8
    x = np.linspace(-10, 0, 101)
    # leading-order gap between q-exp and exp is (q - 1) x**2 / 2
    gap = np.abs(q_exp(q, x) - np.exp(x)) / np.exp(x)
    assert np.all(gap <= 1.01 * (q - 1) * x**2 / 2 + 1e-15)


@settings(max_examples=300, deadline=None)
@given(
    q=st.floats(1.0, 5.0),
    x=st.floats(-10.0, 0.0),
)
def test_round_trip(q, x):
    assert q_log(q, q_exp(q, x)) == pytest.approx(x, abs=1e-12)


@settings(max_examples=200, deadline=None)
@given(
    q=st.floats(1.0, 5.0),
    rho=st.floats(1e-6, 1.0),
    n1=st.floats(0.0, 100.0),
    dn=st.floats(1e-3, 50.0),
)
def test_strictly_decreasing_in_n(q, rho, n1, dn):
    assert q_exp(q, -rho * (n1 + dn)) < q_exp(q, -rho * n1)


@settings(max_examples=200, deadline=None)
@given(
    q=st.floats(1.0, 5.0),
    rho1=st.floats(0.0, 1.0),
    drho=st.floats(0.0, 1.0),
    n=st.floats(0.0, 100.0),
)
def test_non_increasing_in_rho(q, rho1, drho, n):
    assert q_exp(q, -(rho1 + drho) * n) <= q_exp(q, -rho1 * n)


@settings(max_examples=300, deadline=None)
@given(
    q1=st.floats(1.0, 5.0),
    dq=st.floats(0.0, 3.0),
    x=st.floats(1e-6, 100.0),
)
def test_fat_tail_ordering(q1, dq, x):
    assert q_exp(q1 + dq, -x) >= q_exp(q1, -x)


def test_decay_values_in_unit_interval():
    x = -np.linspace(0, 200, 401)
    for q in (1.0, 1.3, 2.0, 4.0):
        y = q_exp(q, x)
        assert np.all((y > 0) & (y <= 1))
        assert np.all(np.isfinite(log_q_exp(q, x)))
