r"""Indifference schedules, q-exponential discount factors and rate extraction.

A discounter with wealth ``w0`` who already holds ``m0`` and asks for ``m``
after one period is indifferent, under additive growth, to

.. math::

    M(n) = m_0 + (m - m_0) n

after ``n`` periods. The corresponding per-period rate is
``rho = (m - m0) / (w0 + m0)`` and the discount factor is

.. math::

    \frac{w_0 + m_0}{\tilde M + w_0} = \left[e_q^{-\rho n}\right]^{p_m},

which is hyperbolic at ``q = 2`` and exponential as ``q -> 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .choice import check_wealth
from .errors import DomainError
from .qmath import Q_LIMIT_TOL, check_q, log_q_exp, q_log_of_log

__all__ = [
    "DiscountModel",
    "IndifferenceSchedule",
    "amount_for_factor",
    "expected_amount",
    "expected_amount_from_rate",
    "hyperbolic_factor",
    "increment_for_rate",
    "indifference_schedule",
    "linear_amount",
    "per_period_rate",
    "q_discount_factor",
    "q_rate",
]


def _out(value):
    value = np.asarray(value, dtype=float)
    return float(value) if value.ndim == 0 else value


def _periods(n):
    n = np.asarray(n, dtype=float)
    if np.any(~(n >= 0)) or not np.all(np.isfinite(n)):
        raise DomainError("period counts must be finite and >= 0")
    return n


@dataclass(frozen=True)
class DiscountModel:
    """Parameters of the q-exponential discount function.

    Parameters
    ----------
    q : float
        Entropic index; 1 is exponential, 2 is hyperbolic.
    rho : float
        Per-period discount rate.
    p_m : float
        Probability of the early payment in the first period.
    w0 : float
        Personal wealth.
    m0 : float
        Amount already received at the present instant.
    """

    q: float = 2.0
    rho: float = 0.0
    p_m: float = 1.0
    w0: float = 1.0
    m0: float = 0.0

    def __post_init__(self):
        check_q(self.q)
        if not (math.isfinite(self.rho) and self.rho >= 0):
            raise DomainError(f"rho must be finite and >= 0, got {self.rho}")
        if not 0 < self.p_m <= 1:
            raise DomainError(f"p_m must lie in (0, 1], got {self.p_m}")
        check_wealth(self.w0)
        if not (math.isfinite(self.m0) and self.m0 >= 0):
            raise DomainError(f"m0 must be finite and >= 0, got {self.m0}")


def _check_increment(model: DiscountModel, m: float) -> float:
    m = float(m)
    if not (math.isfinite(m) and m >= model.m0):
        raise DomainError(f"first-period amount m={m} must be >= m0={model.m0}")
    return m


def linear_amount(model: DiscountModel, m: float, n):
    """Indifference amount ``m0 + (m - m0) n`` under additive growth."""
    m = _check_increment(model, m)
    return _out(model.m0 + (m - model.m0) * _periods(n))


def per_period_rate(model: DiscountModel, m: float) -> float:
    """Discount rate ``(m - m0) / (w0 + m0)`` implied by the first-period amount."""
    m = _check_increment(model, m)
    return (m - model.m0) / (model.w0 + model.m0)


def increment_for_rate(rho: float, w0: float, m0: float = 0.0) -> float:
    """First-period increment ``m - m0`` that produces per-period rate `rho`."""
    if not (math.isfinite(rho) and rho >= 0):
        raise DomainError(f"rho must be finite and >= 0, got {rho}")
    return rho * (check_wealth(w0) + m0)


def hyperbolic_factor(model: DiscountModel, n):
    """Hyperbolic discount factor ``1 / (1 + rho n)``."""
    return _out(1.0 / (1.0 + model.rho * _periods(n)))


def q_discount_factor(model: DiscountModel, n):
    """Discount factor ``[e_q^{-rho n}] ** p_m``; equals 1 at ``n = 0``."""
    n = _periods(n)
    return _out(np.exp(model.p_m * log_q_exp(model.q, -model.rho * n)))


def amount_for_factor(factor, w0: float, m0: float = 0.0):
    """Amount ``M`` with ``(w0 + m0) / (w0 + M)`` equal to `factor`."""
    factor = np.asarray(factor, dtype=float)
    if np.any(~((factor > 0) & (factor <= 1))):
        raise DomainError("discount factors must lie in (0, 1]")
    return _out((check_wealth(w0) + m0) / factor - w0)


def expected_amount_from_rate(model: DiscountModel, n):
    """Expected late amount after `n` periods implied by the model's rate."""
    return amount_for_factor(q_discount_factor(model, n), model.w0, model.m0)


def expected_amount(model: DiscountModel, x_m: float, n):
    """Expected amount ``M~`` after `n` periods given early growth rate `x_m`.

    Solves ``1 + M~/w0 = [1 + (q - 1) x_m n] ** (p_m / (q - 1))``, with the
    exponential ``exp(p_m x_m n)`` in the ``q -> 1`` limit. The amount
    already held, ``m0``, is not included.

    >>> expected_amount(DiscountModel(q=2, w0=100000), 0.05, 10)
    50000.0
    """
    if not (math.isfinite(x_m) and x_m >= 0):
        raise DomainError(f"growth rate must be finite and >= 0, got {x_m}")
    n = _periods(n)
    qm1 = model.q - 1.0
    if abs(qm1) < Q_LIMIT_TOL:
        log_growth = model.p_m * x_m * n
    else:
        log_growth = model.p_m * np.log1p(qm1 * x_m * n) / qm1
    return _out(model.w0 * np.expm1(log_growth))


def q_rate(q: float, p_m: float, w0: float, m0: float, m_tilde, n):
    """Per-period rate recovered from an observed indifference amount.

    Inverts the discount factor:
    ``rho = -(1/n) ln_q(((w0 + m0) / (w0 + m_tilde)) ** (1 / p_m))``.

    Raises
    ------
    DomainError
        For ``n <= 0`` or ``m_tilde < m0``.
    """
    check_q(q)
    if not 0 < p_m <= 1:
        raise DomainError(f"p_m must lie in (0, 1], got {p_m}")
    w0 = check_wealth(w0)
    n = np.asarray(n, dtype=float)
    if np.any(~(n > 0)):
        raise DomainError("q_rate requires n > 0")
    m_tilde = np.asarray(m_tilde, dtype=float)
    if np.any(~(m_tilde >= m0)):
        raise DomainError("expected amount must be >= m0")
    # log of (w0 + m0) / (w0 + m_tilde), kept accurate for small increments
    log_factor = -np.log1p((m_tilde - m0) / (w0 + m0)) / p_m
    return _out(-q_log_of_log(q, log_factor) / n)


@dataclass(frozen=True)
class IndifferenceSchedule:
    """Indifference amounts at increasing delays; ``amount[0]`` is held now."""

    n: np.ndarray
    amount: np.ndarray

    def __post_init__(self):
        n = np.asarray(self.n, dtype=float)
        amount = np.asarray(self.amount, dtype=float)
        if n.shape != amount.shape or n.ndim != 1:
            raise ValueError("n and amount must be 1-d arrays of equal length")
        if np.any(np.diff(n) <= 0):
            raise ValueError("n must be strictly increasing")
        if np.any(np.diff(amount) < 0):
            raise ValueError("amounts must be non-decreasing in n")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "amount", amount)

    def ratio(self):
        """``amount(n) / amount(1)``, the late-to-early payment multiple."""
        base = np.interp(1.0, self.n, self.amount)
        return self.amount / base


def indifference_schedule(model: DiscountModel, m: float, n) -> IndifferenceSchedule:
    """Linear indifference schedule starting from ``m0`` at ``n = 0``."""
    n = np.unique(np.concatenate([[0.0], np.atleast_1d(_periods(n))]))
    return IndifferenceSchedule(n, np.atleast_1d(linear_amount(model, m, n)))
