"""Cumulative payment-probability laws and the early/late frequency ratio.

Time is measured in short periods since the present instant, so ``t = 1`` is
the end of the first period.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DomainError
from .qmath import check_q

logger = logging.getLogger(__name__)

__all__ = [
    "Degenerate",
    "UniformDelay",
    "PaymentDistribution",
    "check_probability",
    "cumulative_prob",
    "first_period_prob",
    "frequency_ratio",
    "relative_frequency",
]


def check_probability(p: float, name: str = "p") -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"{name} must lie in [0, 1], got {p}")
    return p


@dataclass(frozen=True)
class Degenerate:
    """Deterministic payment at `pay_time` periods."""

    pay_time: float

    def __post_init__(self):
        if not (math.isfinite(self.pay_time) and self.pay_time >= 0):
            raise DomainError(f"pay_time must be finite and >= 0, got {self.pay_time}")

    def cdf(self, t):
        t = np.asarray(t, dtype=float)
        return np.where(t >= self.pay_time, 1.0, 0.0)


@dataclass(frozen=True)
class UniformDelay:
    """Maximum-entropy uniform payment law over ``alpha * horizon`` periods.

    With ``alpha = 1`` the payment is certain by the scheduled horizon; larger
    `alpha` stretches the window so that probability 1 is reached later.
    """

    horizon: float
    alpha: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.horizon) and self.horizon > 0):
            raise DomainError(f"horizon must be finite and > 0, got {self.horizon}")
        if not (math.isfinite(self.alpha) and self.alpha >= 1):
            raise DomainError(f"alpha must be finite and >= 1, got {self.alpha}")

    def cdf(self, t):
        t = np.asarray(t, dtype=float)
        return np.clip(t / (self.alpha * self.horizon), 0.0, 1.0)


PaymentDistribution = Union[Degenerate, UniformDelay]


def cumulative_prob(dist: PaymentDistribution, t):
    """Probability that the payment has arrived by `t` periods.

    Examples
    --------
    >>> cumulative_prob(UniformDelay(20, alpha=2), 1)
    0.025
    """
    t_arr = np.asarray(t, dtype=float)
    if np.any(~(t_arr >= 0)):
        raise DomainError("t must be >= 0")
    out = dist.cdf(t_arr)
    return float(out) if out.ndim == 0 else out


def first_period_prob(dist: PaymentDistribution) -> float:
    """Cumulative probability at the end of the first period."""
    return cumulative_prob(dist, 1.0)


def frequency_ratio(q: float, n: float) -> tuple[float, bool]:
    """Late/early payment frequency ``1 / (n (q - 1))`` and a capping flag.

    The ratio is capped at 1 when ``n (q - 1) < 1``; the second element of
    the result reports whether that happened.
    """
    q = check_q(q)
    n = float(n)
    if q == 1.0:
        raise DomainError("relative frequency is undefined for q = 1")
    if not (math.isfinite(n) and n >= 1):
        raise DomainError(f"n must be >= 1, got {n}")
    denom = n * (q - 1.0)
    if denom < 1.0:
        logger.debug("frequency ratio capped at 1 (n=%g, q=%g)", n, q)
        return 1.0, True
    return 1.0 / denom, False


def relative_frequency(q: float, n: float) -> float:
    """Ratio ``p_M / p_m`` of late to early payment frequency.

    >>> relative_frequency(2, 10)
    0.1
    """
    return frequency_ratio(q, n)[0]
