"""Exception types shared across the package."""


class PisaError(Exception):
    """Base class for all package-specific errors."""


class SchemaError(PisaError):
    """A dataset file or configuration does not match the declared schema."""


class DataError(PisaError):
    """A data value is unparseable or violates a dataset invariant."""


class StratificationError(PisaError):
    """A split or resample cannot honour its event-stratification contract."""


class ExpressionError(PisaError):
    """An expression is malformed or references an unknown covariate."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class FitError(PisaError):
    """A model fit diverged or was handed degenerate data."""


class EvaluationError(PisaError):
    """A statistic is undefined on the given inputs."""
