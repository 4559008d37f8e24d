"""Exception types raised across the package."""


class DomainError(ValueError):
    """An input is outside the range the model is defined on."""


class ConfigError(ValueError):
    """A scenario configuration is invalid.

    ``field`` names the offending entry using dotted/indexed paths, e.g.
    ``levers.per_plant[3].cp``.
    """

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class AttributionError(ValueError):
    """An overrun total cannot be split consistently across stakeholders."""


class RateSolverError(RuntimeError):
    """The financing-rate back-calculation could not bracket a solution."""


class CalibrationError(RuntimeError):
    """The overrun-model calibration did not converge to the anchors.

    ``residuals`` carries the final (first-plant, tenth-plant) anchor
    mismatches for diagnosis.
    """

    def __init__(self, message: str, residuals=None):
        self.residuals = residuals
        if residuals is not None:
            message = f"{message} (residuals: {residuals})"
        super().__init__(message)
