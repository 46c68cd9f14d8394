"""Growth rates, time averages and the maximum-time-average decision rule.

A payment of ``amount`` multiplies personal wealth ``w0`` by the impact factor
``1 + amount / w0``. When the payment arrives with stationary frequency
``p`` the per-period growth factor (its time average) is
``(1 + amount / w0) ** p``. Between two payment hypotheses the decision maker
takes the one with the larger time average at the end of the first period.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .probability import check_probability
from .qmath import pow1p

__all__ = [
    "DEFAULT_THRESHOLD_DB",
    "ChoiceProblem",
    "Preference",
    "Side",
    "check_wealth",
    "decide",
    "growth_rate",
    "time_average",
]

#: Default indifference band in decibels.
DEFAULT_THRESHOLD_DB = 0.65

_DB_PER_NEPER = 20.0 / math.log(10.0)


def check_wealth(w0: float) -> float:
    w0 = float(w0)
    if not (math.isfinite(w0) and w0 > 0):
        raise DomainError(f"wealth must be finite and > 0, got {w0}")
    return w0


def growth_rate(amount, wealth: float):
    """Impact of a payment on wealth, ``amount / wealth``.

    >>> growth_rate(5000, 100000)
    0.05
    """
    wealth = check_wealth(wealth)
    amount = np.asarray(amount, dtype=float)
    if np.any(~(amount >= 0)):
        raise DomainError("payment amounts must be >= 0")
    out = amount / wealth
    return float(out) if out.ndim == 0 else out


def time_average(x, p):
    """Per-period growth factor ``(1 + x) ** p`` of a payment with frequency `p`."""
    x = np.asarray(x, dtype=float)
    if np.any(~(x >= 0)):
        raise DomainError("growth rate must be >= 0")
    p = np.asarray(p, dtype=float)
    if np.any(~((p >= 0) & (p <= 1))):
        raise DomainError("probability must lie in [0, 1]")
    return pow1p(x, p)


class Side(enum.Enum):
    EARLY = "Early"
    LATE = "Late"
    INDIFFERENT = "Indifferent"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ChoiceProblem:
    """Receive `m` early with probability `p_m`, or `big_m` later with `p_big_m`."""

    wealth: float
    m: float
    big_m: float
    p_m: float = 1.0
    p_big_m: float = 1.0

    def __post_init__(self):
        check_wealth(self.wealth)
        if not (math.isfinite(self.m) and self.m >= 0):
            raise DomainError(f"early amount must be finite and >= 0, got {self.m}")
        if not (math.isfinite(self.big_m) and self.big_m >= self.m):
            raise DomainError(
                f"late amount must be finite and >= early amount, got {self.big_m}"
            )
        check_probability(self.p_m, "p_m")
        check_probability(self.p_big_m, "p_big_m")


@dataclass(frozen=True)
class Preference:
    """Outcome of :func:`decide`.

    Attributes
    ----------
    side : Side
        Preferred hypothesis.
    d_c : float
        The larger of the two time averages.
    g_early, g_late : float
        Time averages of the early and late hypotheses.
    contrast_db : float
        ``|20 log10(g_late / g_early)|``.
    """

    side: Side
    d_c: float
    g_early: float
    g_late: float
    contrast_db: float


def decide(
    problem: ChoiceProblem, indiff_threshold_db: float = DEFAULT_THRESHOLD_DB
) -> Preference:
    """Pick the hypothesis with the larger first-period time average.

    The two time averages are declared indistinguishable, and the result
    ``Indifferent``, when their contrast does not exceed
    `indiff_threshold_db`. Exact ties are always ``Indifferent``.

    Examples
    --------
    >>> decide(ChoiceProblem(wealth=1, m=1, big_m=2, p_m=1, p_big_m=0.5)).side
    <Side.EARLY: 'Early'>
    """
    if not indiff_threshold_db >= 0:
        raise DomainError("indifference threshold must be >= 0 dB")
    x_early = problem.m / problem.wealth
    x_late = problem.big_m / problem.wealth
    log_early = problem.p_m * math.log1p(x_early)
    log_late = problem.p_big_m * math.log1p(x_late)
    g_early = time_average(x_early, problem.p_m)
    g_late = time_average(x_late, problem.p_big_m)
    contrast = abs(log_late - log_early) * _DB_PER_NEPER

    if log_late == log_early or contrast <= indiff_threshold_db:
        side = Side.INDIFFERENT
    elif log_late > log_early:
        side = Side.LATE
    else:
        side = Side.EARLY
    return Preference(side, max(g_early, g_late), g_early, g_late, contrast)
