"""Exception types raised by tempodisc."""


class DomainError(ValueError):
    """An argument lies outside the domain where a formula is defined."""


class DataError(ValueError):
    """Observed data cannot support the requested analysis."""


class InsufficientDataError(DataError):
    """Too few distinct observations to identify the model parameters."""


class DegenerateDataError(DataError):
    """Observations carry no discounting information (all factors equal 1)."""
