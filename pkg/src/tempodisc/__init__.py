"""Time-average theory of intertemporal choice and q-exponential discounting."""

__version__ = "0.1.0"

from .errors import DataError, DegenerateDataError, DomainError, InsufficientDataError
from .qmath import log_q_exp, pow1p, q_exp, q_log
from .probability import (
    Degenerate,
    UniformDelay,
    cumulative_prob,
    first_period_prob,
    relative_frequency,
)
from .choice import ChoiceProblem, Preference, Side, decide, growth_rate, time_average
from .series import CurveSeries
from .reversal import ReversalScenario, crossing_point, reversal_curves
from .discounting import (
    DiscountModel,
    IndifferenceSchedule,
    expected_amount,
    expected_amount_from_rate,
    hyperbolic_factor,
    linear_amount,
    per_period_rate,
    q_discount_factor,
    q_rate,
)
from .contrast import ContrastQuery, contrast_db, distinguishability_horizon
from .calibrate import Bounds, FitResult, ObservationSet, compare_models, fit
from .experiments import (
    ParetoWealth,
    ThalerScenario,
    magnitude_effect,
    population_dispersion,
    simulate_discounter,
)
