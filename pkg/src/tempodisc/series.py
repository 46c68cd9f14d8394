"""Ordered ``(n, value)`` samples used for discount, time-average and contrast curves."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class CurveSeries:
    """A labelled curve sampled at strictly increasing period counts."""

    n: np.ndarray
    values: np.ndarray
    label: str = ""
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        n = np.asarray(self.n, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if n.ndim != 1 or n.shape != values.shape:
            raise ValueError("n and values must be 1-d arrays of equal length")
        if n.size > 1 and np.any(np.diff(n) <= 0):
            raise ValueError("n must be strictly increasing")
        if not np.all(np.isfinite(values)):
            raise ValueError("curve values must be finite")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "values", values)

    def __len__(self):
        return self.n.size

    @property
    def points(self) -> list[tuple[float, float]]:
        return list(zip(self.n.tolist(), self.values.tolist()))
