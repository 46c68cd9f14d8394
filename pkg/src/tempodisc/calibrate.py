"""Least-squares calibration of q-exponential discount models.

The model factor at delay ``n`` is ``[e_q^{-rho n}] ** p_m``. Fitting runs in
two deterministic stages: an exhaustive grid over the parameter box, then a
bounded Nelder-Mead refinement started from the best grid point. A free-q
fit is also refined from the optima of the exponential (``q = 1``) and
hyperbolic (``q = 2``) fits, so its loss can never exceed theirs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import minimize

from .errors import DataError, DegenerateDataError, DomainError, InsufficientDataError
from .qmath import Q_LIMIT_TOL, check_q

__all__ = [
    "FAMILIES",
    "Bounds",
    "FitResult",
    "ModelRanking",
    "ObservationSet",
    "compare_models",
    "fit",
    "model_factor",
    "synthetic_factors",
]

FAMILIES = {"exponential": 1.0, "hyperbolic": 2.0, "q-exponential": None}


@dataclass(frozen=True)
class ObservationSet:
    """Indifference observations at distinct delays.

    `value` holds discount factors in (0, 1] when ``kind == "factor"``, or
    indifference amounts when ``kind == "amount"``; amounts are converted to
    factors with ``(w0 + m0) / (w0 + amount)`` and need `w0`.
    """

    n: np.ndarray
    value: np.ndarray
    kind: str = "factor"
    w0: Optional[float] = None
    m0: float = 0.0

    def __post_init__(self):
        n = np.atleast_1d(np.asarray(self.n, dtype=float))
        value = np.atleast_1d(np.asarray(self.value, dtype=float))
        if n.ndim != 1 or n.shape != value.shape:
            raise DataError("n and value must be 1-d and of equal length")
        if not (np.all(np.isfinite(n)) and np.all(n >= 0)):
            raise DataError("delays must be finite and >= 0")
        if not np.all(np.isfinite(value)):
            raise DataError("observed values must be finite")
        distinct = np.unique(n).size
        if distinct < 3:
            raise InsufficientDataError(
                f"need at least 3 distinct delays, got {distinct}"
            )
        if distinct != n.size:
            raise DataError("delays must be distinct")
        if self.kind not in ("factor", "amount"):
            raise DataError(f"kind must be 'factor' or 'amount', got {self.kind!r}")
        if self.kind == "amount":
            if self.w0 is None or not self.w0 > 0:
                raise DataError("amount observations require a positive w0")
            if np.any(value < self.m0):
                raise DataError("indifference amounts must be >= m0")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "value", value)
        factors = self.factors()
        if np.any(~((factors > 0) & (factors <= 1))):
            raise DataError("discount factors must lie in (0, 1]")

    def __len__(self):
        return self.n.size

    def factors(self) -> np.ndarray:
        if self.kind == "factor":
            return self.value
        return (self.w0 + self.m0) / (self.w0 + self.value)


@dataclass(frozen=True)
class Bounds:
    """Parameter box searched by :func:`fit`. Lower ends of rho and p_m are open."""

    q: tuple[float, float] = (1.0, 5.0)
    rho: tuple[float, float] = (0.0, 2.0)
    p_m: tuple[float, float] = (0.0, 1.0)

    def __post_init__(self):
        check_q(self.q[0])
        for name in ("q", "rho", "p_m"):
            lo, hi = getattr(self, name)
            if not lo < hi:
                raise DomainError(f"empty {name} bounds {lo, hi}")
        if self.rho[0] < 0 or self.p_m[0] < 0 or self.p_m[1] > 1:
            raise DomainError("rho must be >= 0 and p_m within [0, 1]")


@dataclass(frozen=True)
class FitResult:
    q: float
    rho: float
    p_m: float
    sse: float
    residuals: np.ndarray = field(repr=False)
    converged: bool
    loss: str = "squared"
    evaluations: int = 0


@dataclass(frozen=True)
class ModelRanking:
    family: str
    rank: int
    sse: float
    fit: FitResult


def _log_factor(q, rho, p_m, n):
    # broadcasting version of p_m * log(e_q^{-rho n})
    q = np.asarray(q, dtype=float)
    x = np.asarray(rho, dtype=float) * n
    qm1 = q - 1.0
    limit = np.abs(qm1) < Q_LIMIT_TOL
    safe = np.where(limit, 1.0, qm1)
    log_e = np.where(limit, -x, -np.log1p(safe * x) / safe)
    return p_m * log_e


def model_factor(q: float, rho: float, p_m: float, n):
    """Discount factor ``[e_q^{-rho n}] ** p_m`` for parameter scalars."""
    out = np.exp(_log_factor(q, rho, p_m, np.asarray(n, dtype=float)))
    return float(out) if out.ndim == 0 else out


def _residuals(q, rho, p_m, n, target, loss):
    log_model = _log_factor(q, rho, p_m, n)
    if loss == "log":
        return target - log_model
    return target - np.exp(log_model)


def _grid_axes(bounds: Bounds, points: int, fit_p_m: bool, p_m: float, pin_q):
    if pin_q is None:
        qs = np.linspace(bounds.q[0], bounds.q[1], points)
    else:
        qs = np.array([pin_q])
    lo, hi = bounds.rho
    # geometric spacing: empirical per-period rates span several decades
    rhos = np.geomspace(max(lo, hi * 1e-4), hi, points)
    if fit_p_m:
        lo, hi = bounds.p_m
        pms = np.linspace(lo, hi, points + 1)[1:]
    else:
        pms = np.array([p_m])
    return qs, rhos, pms


def _grid_search(n, target, loss, qs, rhos, pms):
    best = None
    # loop over p_m keeps memory at len(qs) * len(rhos) * len(n)
    for p in pms:
        r = _residuals(qs[:, None, None], rhos[None, :, None], p, n, target, loss)
        sse = np.einsum("ijk,ijk->ij", r, r)
        # argmin returns the first minimum: lowest q, then lowest rho
        i, j = np.unravel_index(np.argmin(sse), sse.shape)
        if best is None or sse[i, j] < best[0]:
            best = (sse[i, j], qs[i], rhos[j], p)
    return best[1:]


def _refine(x0, names, fixed, bounds: Bounds, n, target, loss, steps):
    box = [getattr(bounds, k) for k in names]

    def unpack(x):
        params = dict(fixed)
        params.update(zip(names, x))
        return params["q"], params["rho"], params["p_m"]

    def objective(x):
        for v, (lo, hi) in zip(x, box):
            if v < lo or v > hi:
                return math.inf
        q, rho, p = unpack(x)
        if rho <= 0 or p <= 0:
            return math.inf
        r = _residuals(q, rho, p, n, target, loss)
        return float(r @ r)

    x0 = np.asarray(x0, dtype=float)
    simplex = [x0]
    for i, h in enumerate(steps):
        vertex = x0.copy()
        lo, hi = box[i]
        vertex[i] = x0[i] + h if x0[i] + h <= hi else x0[i] - h
        simplex.append(vertex)
    res = minimize(
        objective,
        x0,
        method="Nelder-Mead",
        options={
            "initial_simplex": np.array(simplex),
            "xatol": 1e-10,
            "fatol": 1e-16,
            "maxiter": 20000,
            "maxfev": 40000,
        },
    )
    q, rho, p = unpack(res.x)
    return q, rho, p, bool(res.success), int(res.nfev)


def _better(a, b):
    # deterministic tie-break: lower sse, then lower q, then lower rho
    return (a.sse, a.q, a.rho) < (b.sse, b.q, b.rho)


def fit(
    data: ObservationSet,
    fit_p_m: bool = False,
    bounds: Optional[Bounds] = None,
    *,
    pin_q: Optional[float] = None,
    p_m: float = 1.0,
    loss: str = "squared",
    grid_points: int = 64,
) -> FitResult:
    """Fit ``(q, rho[, p_m])`` to observed discount factors.

    Parameters
    ----------
    data : ObservationSet
        Observations at three or more distinct delays.
    fit_p_m : bool
        Free the early-payment probability; otherwise it is held at `p_m`.
    bounds : Bounds, optional
        Parameter box; defaults to q in [1, 5], rho in (0, 2], p_m in (0, 1].
    pin_q : float, optional
        Hold q fixed (1 for exponential, 2 for hyperbolic discounting).
    loss : {"squared", "log"}
        Squared error on factors, or on log-factors.
    grid_points : int
        Grid resolution per free axis.

    Raises
    ------
    DegenerateDataError
        If every observed factor equals 1.
    """
    if loss not in ("squared", "log"):
        raise ValueError(f"unknown loss {loss!r}")
    bounds = bounds or Bounds()
    if pin_q is not None:
        pin_q = check_q(pin_q)
    if not 0 < p_m <= 1:
        raise DomainError(f"p_m must lie in (0, 1], got {p_m}")
    factors = data.factors()
    if np.all(factors == 1.0):
        raise DegenerateDataError("all observed factors equal 1; nothing to fit")
    n = data.n
    target = np.log(factors) if loss == "log" else factors

    candidates = []
    qs, rhos, pms = _grid_axes(bounds, grid_points, fit_p_m, p_m, pin_q)
    starts = [_grid_search(n, target, loss, qs, rhos, pms)]
    if pin_q is None:
        for anchor in (1.0, 2.0):
            if bounds.q[0] <= anchor <= bounds.q[1]:
                pinned = fit(
                    data, fit_p_m, bounds, pin_q=anchor, p_m=p_m, loss=loss,
                    grid_points=grid_points,
                )
                candidates.append(pinned)
                starts.append((pinned.q, pinned.rho, pinned.p_m))

    names = (["q"] if pin_q is None else []) + ["rho"] + (["p_m"] if fit_p_m else [])
    q_step = (bounds.q[1] - bounds.q[0]) / max(grid_points - 1, 1)
    evaluations = 0
    for q0, rho0, p0 in starts:
        start = {"q": q0, "rho": rho0, "p_m": p0}
        fixed = {k: v for k, v in start.items() if k not in names}
        steps = {"q": q_step, "rho": 0.1 * rho0, "p_m": 1.0 / grid_points}
        q, rho, p, ok, nfev = _refine(
            [start[k] for k in names], names, fixed, bounds, n, target, loss,
            [steps[k] for k in names],
        )
        evaluations += nfev
        r = _residuals(q, rho, p, n, target, loss)
        candidates.append(
            FitResult(float(q), float(rho), float(p), float(r @ r), r, ok, loss)
        )

    best = candidates[0]
    for c in candidates[1:]:
        if _better(c, best):
            best = c
    return FitResult(
        best.q, best.rho, best.p_m, best.sse, best.residuals, best.converged,
        loss, evaluations,
    )


def compare_models(
    data: ObservationSet,
    fit_p_m: bool = False,
    bounds: Optional[Bounds] = None,
    *,
    loss: str = "squared",
    tie_tol: float = 1e-12,
) -> list[ModelRanking]:
    """Fit exponential, hyperbolic and free-q models and rank them by loss.

    Families whose losses differ by at most `tie_tol` share a rank.
    """
    fits = {
        family: fit(data, fit_p_m, bounds, pin_q=q, loss=loss)
        for family, q in FAMILIES.items()
    }
    order = sorted(fits, key=lambda k: (fits[k].sse, list(FAMILIES).index(k)))
    ranked = []
    rank = 0
    leader = None
    for family in order:
        sse = fits[family].sse
        if leader is None or sse - leader > tie_tol:
            rank += 1
            leader = sse
        ranked.append(ModelRanking(family, rank, sse, fits[family]))
    return ranked


def synthetic_factors(
    q: float, rho: float, n: Sequence[float], p_m: float = 1.0,
    noise: float = 0.0, seed: Optional[int] = None,
) -> ObservationSet:
    """Generate factors from a known model with optional multiplicative noise.

    Noise is uniform on ``[-noise, +noise]`` relative, drawn from
    ``numpy.random.default_rng(seed)``; noisy factors are clipped to at most 1.
    """
    n = np.asarray(n, dtype=float)
    factors = model_factor(q, rho, p_m, n)
    if noise:
        rng = np.random.default_rng(seed)
        factors = np.minimum(factors * (1 + rng.uniform(-noise, noise, n.size)), 1.0)
    return ObservationSet(n, factors)
