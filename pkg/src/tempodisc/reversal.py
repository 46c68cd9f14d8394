r"""Preference reversal between ``M`` after ``n`` periods and ``kM`` after ``n + lag``.

With ``a = M / w0`` the two time averages are

.. math::

    A(n) = (1 + a)^{1/n}, \qquad B(n) = (1 + k a)^{1/(n + L)}

The smaller payment wins at short delays; as ``(n + L) / n -> 1`` the
frequencies equalise and the larger payment takes over. The crossing is the
real root

.. math::

    n^* = \frac{L \ln(1 + a)}{\ln(1 + k a) - \ln(1 + a)}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .qmath import pow1p
from .series import CurveSeries

__all__ = ["ReversalScenario", "crossing_point", "reversal_curves"]


@dataclass(frozen=True)
class ReversalScenario:
    """Payment family ``M`` vs ``k M`` delayed by `lag` periods.

    Parameters
    ----------
    rate : float
        ``a = M / w0``, strictly positive.
    horizon : int
        Largest ``n`` to tabulate, at least 2.
    multiple : float
        ``k``, the size of the late payment in units of ``M``.
    lag : float
        Extra periods waited for the larger payment.
    """

    rate: float
    horizon: int = 10
    multiple: float = 2.0
    lag: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.rate) and self.rate > 0):
            raise DomainError(f"rate must be finite and > 0, got {self.rate}")
        if int(self.horizon) != self.horizon or self.horizon < 2:
            raise DomainError(f"horizon must be an integer >= 2, got {self.horizon}")
        if not self.multiple > 1:
            raise DomainError(f"multiple must be > 1, got {self.multiple}")
        if not self.lag > 0:
            raise DomainError(f"lag must be > 0, got {self.lag}")


def reversal_curves(scenario: ReversalScenario) -> tuple[CurveSeries, CurveSeries]:
    """Time averages of the early and late hypotheses at ``n = 1 .. horizon``."""
    n = np.arange(1, int(scenario.horizon) + 1, dtype=float)
    a = scenario.rate
    early = pow1p(a, 1.0 / n)
    late = pow1p(scenario.multiple * a, 1.0 / (n + scenario.lag))
    k = f"{scenario.multiple:g}"
    return (
        CurveSeries(n, early, label="M"),
        CurveSeries(n, late, label=f"{k}M"),
    )


def crossing_point(a: float, multiple: float = 2.0, lag: float = 1.0) -> float:
    """Real delay ``n*`` after which the larger, later payment is preferred.

    >>> round(crossing_point(2.0), 5)
    2.15066
    """
    a = float(a)
    if not (math.isfinite(a) and a > 0):
        raise DomainError(f"rate must be finite and > 0, got {a}")
    if not multiple > 1:
        raise DomainError(f"multiple must be > 1, got {multiple}")
    small = math.log1p(a)
    return lag * small / (math.log1p(multiple * a) - small)
