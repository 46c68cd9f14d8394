"""Simulated discounters in Thaler-style prize experiments and wealth dispersion.

A lottery winner holding a prize ``m0`` is asked how much they would need
after each delay to be indifferent. The simulated discounter answers with the
linear schedule ``m0 + (m - m0) n``; rates are then recovered with
:func:`tempodisc.discounting.q_rate`. With ``q = 2`` and ``p_m = 1`` the
recovered rate is the same at every horizon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

import numpy as np

from .choice import check_wealth
from .discounting import DiscountModel, increment_for_rate, linear_amount, q_rate
from .errors import DomainError

__all__ = [
    "DispersionSummary",
    "MagnitudeReport",
    "ParetoWealth",
    "ThalerRow",
    "ThalerScenario",
    "first_period_amounts_for_rates",
    "magnitude_effect",
    "population_dispersion",
    "prize_rates",
    "rates_for_wealth",
    "sample_wealth",
    "simulate_discounter",
]


@dataclass(frozen=True)
class ThalerScenario:
    """Prizes and delays of a prize-waiting experiment.

    Parameters
    ----------
    w0 : float
        Personal wealth of the simulated discounter.
    q, p_m : float
        Discount-model shape used when recovering rates.
    prizes : sequence of float
        Amounts won now (``m0`` for each sub-experiment).
    horizons : sequence of (str, float)
        Labelled delays in periods, strictly increasing.
    responses : mapping, optional
        Observed median answers keyed by ``(prize, horizon_label)``; used only
        for comparison columns.
    """

    w0: float
    prizes: Sequence[float]
    horizons: Sequence[tuple[str, float]]
    q: float = 2.0
    p_m: float = 1.0
    responses: Optional[Mapping[tuple[float, str], float]] = None

    def __post_init__(self):
        check_wealth(self.w0)
        if not self.prizes or any(not p > 0 for p in self.prizes):
            raise DomainError("prizes must be positive")
        ns = [float(n) for _, n in self.horizons]
        if not ns or any(b <= a for a, b in zip(ns, ns[1:])) or ns[0] <= 0:
            raise DomainError("horizons must be positive and strictly increasing")


@dataclass(frozen=True)
class ThalerRow:
    prize: float
    horizon_label: str
    n: float
    amount: float
    rate: float
    observed: Optional[float] = None
    observed_rate: Optional[float] = None


def first_period_amounts_for_rates(
    scenario: ThalerScenario, rates: Sequence[float]
) -> list[float]:
    """First-period amounts ``m`` that give each prize the requested rate."""
    if len(rates) != len(scenario.prizes):
        raise ValueError("one rate per prize is required")
    return [
        m0 + increment_for_rate(rho, scenario.w0, m0)
        for m0, rho in zip(scenario.prizes, rates)
    ]


def simulate_discounter(
    scenario: ThalerScenario, first_period_amounts: Sequence[float]
) -> list[ThalerRow]:
    """Tabulate amount and recovered rate for every prize and horizon.

    When observed responses are supplied, each row also carries the
    continuously compounded rate ``ln(observed / prize) / n`` for comparison.
    """
    if len(first_period_amounts) != len(scenario.prizes):
        raise ValueError("one first-period amount per prize is required")
    rows = []
    for m0, m in zip(scenario.prizes, first_period_amounts):
        model = DiscountModel(q=scenario.q, p_m=scenario.p_m, w0=scenario.w0, m0=m0)
        for label, n in scenario.horizons:
            amount = linear_amount(model, m, n)
            rate = q_rate(scenario.q, scenario.p_m, scenario.w0, m0, amount, n)
            observed = observed_rate = None
            if scenario.responses and (m0, label) in scenario.responses:
                observed = float(scenario.responses[(m0, label)])
                observed_rate = math.log(observed / m0) / n
            rows.append(
                ThalerRow(float(m0), label, float(n), amount, rate, observed, observed_rate)
            )
    return rows


def prize_rates(rows: Sequence[ThalerRow]) -> dict[float, float]:
    """Rate per prize, taken from the first horizon of each prize."""
    out: dict[float, float] = {}
    for row in rows:
        out.setdefault(row.prize, row.rate)
    return out


@dataclass(frozen=True)
class MagnitudeReport:
    ordering: str
    prizes: tuple
    rates: tuple

    def __str__(self):
        return self.ordering


def magnitude_effect(rates_by_prize: Mapping[float, float]) -> MagnitudeReport:
    """Classify how discount rates move with the prize size.

    Orderings are ``"reversed: increasing"`` (rates grow with the prize),
    ``"classical magnitude effect"`` (rates fall), ``"flat"`` and
    ``"non-monotone"``.
    """
    if len(rates_by_prize) < 2:
        raise ValueError("magnitude effect needs at least two prizes")
    prizes = tuple(sorted(rates_by_prize))
    rates = tuple(rates_by_prize[p] for p in prizes)
    diffs = np.diff(rates)
    if np.all(diffs == 0):
        ordering = "flat"
    elif np.all(diffs > 0):
        ordering = "reversed: increasing"
    elif np.all(diffs < 0):
        ordering = "classical magnitude effect"
    else:
        ordering = "non-monotone"
    return MagnitudeReport(ordering, prizes, rates)


@dataclass(frozen=True)
class ParetoWealth:
    """Pareto wealth law ``P(W > w) = (w_min / w) ** exponent`` for ``w >= w_min``.

    ``exponent = inf`` is accepted as the limit in which every draw equals
    `w_min`.
    """

    exponent: float
    w_min: float
    sample_size: int
    seed: int = 0

    def __post_init__(self):
        if not self.exponent > 1:
            raise DomainError(f"exponent must be > 1, got {self.exponent}")
        check_wealth(self.w_min)
        if int(self.sample_size) != self.sample_size or self.sample_size < 1:
            raise DomainError(f"sample_size must be a positive integer, got {self.sample_size}")


def sample_wealth(wealth: ParetoWealth) -> np.ndarray:
    """Inverse-CDF Pareto draws from ``numpy.random.default_rng(seed)`` (PCG64)."""
    rng = np.random.default_rng(wealth.seed)
    u = 1.0 - rng.random(int(wealth.sample_size))  # in (0, 1]
    return wealth.w_min * u ** (-1.0 / wealth.exponent)


def rates_for_wealth(w, m0: float, m: float):
    """Per-period rate ``(m - m0) / (w + m0)`` for each wealth level."""
    if not m >= m0:
        raise DomainError(f"m={m} must be >= m0={m0}")
    return (m - m0) / (np.asarray(w, dtype=float) + m0)


@dataclass(frozen=True)
class DispersionSummary:
    mean: float
    median: float
    quantiles: dict = field(default_factory=dict)
    iqr: float = 0.0
    std: float = 0.0
    mean_wealth_rate: float = 0.0


QUANTILES = (0.05, 0.25, 0.5, 0.75, 0.95)


def population_dispersion(wealth: ParetoWealth, m0: float, m: float) -> DispersionSummary:
    """Spread of discount rates across a Pareto-distributed population.

    ``mean_wealth_rate`` is the rate of a discounter holding the sample mean
    wealth. Quantiles use linear interpolation.
    """
    w = sample_wealth(wealth)
    rho = rates_for_wealth(w, m0, m)
    qs = np.quantile(rho, QUANTILES)
    return DispersionSummary(
        mean=float(rho.mean()),
        median=float(np.median(rho)),
        quantiles={q: float(v) for q, v in zip(QUANTILES, qs)},
        iqr=float(qs[3] - qs[1]),
        std=float(rho.std()),
        mean_wealth_rate=float(rates_for_wealth(w.mean(), m0, m)),
    )
