r"""Decibel contrast between early and late time averages.

Under the q-adjusted frequency rule the late payment grows as
``X_M = (q - 1) n X_m`` with frequency ``p_m / ((q - 1) n)``, so the contrast
between the two first-period time averages is

.. math::

    CR_{dB} = -20\, p_m \log_{10}
        \frac{[1 + (q - 1) n X_m]^{1 / ((q - 1) n)}}{1 + X_m}.

The value depends on ``q`` and ``n`` only through ``(q - 1) n``; it is zero
at ``(q - 1) n = 1``, positive beyond and non-decreasing in ``n``. In the
``q -> 1`` limit the late average tends to ``exp(X_m)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .qmath import Q_LIMIT_TOL, check_q
from .series import CurveSeries

__all__ = [
    "UNBOUNDED",
    "ContrastQuery",
    "contrast_curve",
    "contrast_db",
    "distinguishability_horizon",
]

#: Returned by :func:`distinguishability_horizon` when the threshold is never exceeded.
UNBOUNDED = math.inf

_DB_PER_NEPER = 20.0 / math.log(10.0)
_SCAN_CHUNK = 65536


def contrast_db(x_m, n, q: float = 2.0, p_m: float = 1.0):
    """Contrast in dB between early and late time averages after `n` periods.

    Parameters
    ----------
    x_m : float or array_like
        Early payment relative to wealth, ``>= 0``.
    n : float or array_like
        Number of periods, ``>= 1``.
    q : float
        Entropic index, ``>= 1``.
    p_m : float
        Early payment probability.
    """
    q = check_q(q)
    x_m = np.asarray(x_m, dtype=float)
    n = np.asarray(n, dtype=float)
    if np.any(~(x_m >= 0)):
        raise DomainError("x_m must be >= 0")
    if np.any(~(n >= 1)):
        raise DomainError("n must be >= 1")
    if not 0 <= p_m <= 1:
        raise DomainError(f"p_m must lie in [0, 1], got {p_m}")
    if abs(q - 1.0) < Q_LIMIT_TOL:
        late = np.broadcast_to(x_m, np.broadcast(x_m, n).shape)
    else:
        scale = (q - 1.0) * n
        late = np.log1p(scale * x_m) / scale
    out = _DB_PER_NEPER * p_m * (np.log1p(x_m) - late)
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class ContrastQuery:
    x_m: float
    q: float = 2.0
    p_m: float = 1.0
    n: float = 1.0

    def __post_init__(self):
        check_q(self.q)
        if not self.x_m >= 0:
            raise DomainError(f"x_m must be >= 0, got {self.x_m}")
        if not 0 <= self.p_m <= 1:
            raise DomainError(f"p_m must lie in [0, 1], got {self.p_m}")
        if not self.n >= 1:
            raise DomainError(f"n must be >= 1, got {self.n}")

    @property
    def db(self) -> float:
        return contrast_db(self.x_m, self.n, self.q, self.p_m)


def contrast_curve(x_m: float, n_max: int, q: float = 2.0, p_m: float = 1.0):
    """Contrast at ``n = 1 .. n_max`` as a :class:`~tempodisc.series.CurveSeries`."""
    n = np.arange(1, int(n_max) + 1, dtype=float)
    return CurveSeries(n, contrast_db(x_m, n, q, p_m), label=f"x_m={x_m:g}")


def distinguishability_horizon(
    x_m: float,
    q: float = 2.0,
    p_m: float = 1.0,
    threshold_db: float = 0.65,
    cap: int = 10**6,
) -> float:
    """Largest integer period count whose contrast stays within `threshold_db`.

    Scans ``n = 1, 2, ...`` and stops at the first exceedance. Returns 0 if
    the threshold is already exceeded at ``n = 1`` and :data:`UNBOUNDED` if
    it is not exceeded up to `cap`.
    """
    if not threshold_db > 0:
        raise DomainError("threshold_db must be > 0")
    start = 1
    while start <= cap:
        stop = min(start + _SCAN_CHUNK, cap + 1)
        n = np.arange(start, stop, dtype=float)
        over = np.flatnonzero(contrast_db(x_m, n, q, p_m) > threshold_db)
        if over.size:
            return float(start + over[0] - 1)
        start = stop
    return UNBOUNDED
