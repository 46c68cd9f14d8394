r"""Kernels for the q-exponential, q-logarithm and compounded powers.

The q-exponential is

.. math::

    e_q^x = [1 + (1 - q) x]^{1 / (1 - q)}

with the ordinary exponential recovered as :math:`q \to 1`. Every kernel is
evaluated in log space through ``log1p``/``expm1`` so that arguments of the
order of 1e-6 (payments that are tiny relative to wealth) do not cancel.

All functions accept scalars or numpy arrays and return the same shape;
scalar inputs give Python floats.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

__all__ = [
    "Q_LIMIT_TOL",
    "check_q",
    "log_q_exp",
    "q_exp",
    "q_log",
    "q_log_of_log",
    "pow1p",
]

#: Below this distance from 1 the exponential/natural-log limits are used.
Q_LIMIT_TOL = 1e-8


def _out(value):
    value = np.asarray(value, dtype=float)
    return float(value) if value.ndim == 0 else value


def check_q(q: float) -> float:
    """Validate an entropic index and return it as a float.

    Raises
    ------
    DomainError
        If `q` is NaN, infinite or smaller than 1.
    """
    q = float(q)
    if not math.isfinite(q):
        raise DomainError(f"q must be finite, got {q}")
    if q < 1.0:
        raise DomainError(f"q must be >= 1, got {q}")
    return q


def _is_limit(q: float) -> bool:
    return abs(q - 1.0) < Q_LIMIT_TOL


def log_q_exp(q: float, x):
    """Natural logarithm of the q-exponential, ``log(e_q^x)``.

    Parameters
    ----------
    q : float
        Entropic index, ``q >= 1``.
    x : float or array_like
        Exponent argument.

    Returns
    -------
    float or ndarray
        ``log1p((1 - q) x) / (1 - q)``, or `x` itself in the ``q -> 1`` limit.

    Raises
    ------
    DomainError
        If ``1 + (1 - q) x <= 0`` for any element.
    """
    q = check_q(q)
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise DomainError("q-exponential argument must be finite")
    if _is_limit(q):
        return _out(x)
    a = (1.0 - q) * x
    if np.any(a <= -1.0):
        raise DomainError(f"1 + (1 - q) x must be positive (q={q})")
    return _out(np.log1p(a) / (1.0 - q))


def q_exp(q: float, x):
    """q-exponential ``e_q^x``.

    >>> q_exp(2.0, -1.0)
    0.5
    >>> q_exp(1.0, 0.0)
    1.0
    """
    return _out(np.exp(log_q_exp(q, x)))


def q_log_of_log(q: float, log_y):
    """q-logarithm of ``y`` given ``log(y)``.

    Useful when ``y`` is itself a ratio close to one whose logarithm is known
    more accurately than ``y``.
    """
    q = check_q(q)
    log_y = np.asarray(log_y, dtype=float)
    if _is_limit(q):
        return _out(log_y)
    return _out(np.expm1((1.0 - q) * log_y) / (1.0 - q))


def q_log(q: float, y):
    """q-logarithm ``ln_q(y) = (y**(1 - q) - 1) / (1 - q)``.

    Exact inverse of :func:`q_exp` on its range.

    Raises
    ------
    DomainError
        If any ``y <= 0``.
    """
    y = np.asarray(y, dtype=float)
    if np.any(~(y > 0)):
        raise DomainError("q-logarithm requires y > 0")
    return q_log_of_log(q, np.log(y))


def pow1p(x, p):
    """Compute ``(1 + x)**p`` as ``exp(p * log1p(x))``.

    Parameters
    ----------
    x : float or array_like
        Base offset, ``x > -1``.
    p : float or array_like
        Exponent.

    Raises
    ------
    DomainError
        If any ``x <= -1``.
    """
    x = np.asarray(x, dtype=float)
    if np.any(~(x > -1.0)):
        raise DomainError("pow1p requires x > -1")
    return _out(np.exp(np.asarray(p, dtype=float) * np.log1p(x)))
