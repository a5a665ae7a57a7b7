"""Exception and warning types shared across the package."""


class LevyDriftError(Exception):
    """Base class for all package errors."""


class DomainError(LevyDriftError, ValueError):
    """Input outside the mathematical domain of an operation (e.g. x = 0)."""


class ParameterError(LevyDriftError, ValueError):
    """Parameter combination violates a precondition."""


class ConeValidityError(ParameterError):
    """Cone angles outside the admissible ranges for the given exponent."""


class UnsupportedFamilyError(LevyDriftError):
    """Kernel family not supported by the requested operation."""


class EmptyConeError(LevyDriftError):
    """A direction cone is numerically empty at the evaluation point."""


class QuadratureError(LevyDriftError, RuntimeError):
    """Cubature failed to converge; carries diagnostics for the report."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class IntegrabilityError(LevyDriftError):
    """Richardson trend indicates a divergent kernel integral."""


class StatisticalPowerWarning(UserWarning):
    """Monte Carlo standard error too large relative to the tested bound."""


class BinStarvationWarning(UserWarning):
    """Histogram bins too sparsely populated for a reliable TV estimate."""


class DiffusionDominanceWarning(UserWarning):
    """The diffusion term is not negligible against the jump/drift scales."""


class DriftCorrectionWarning(UserWarning):
    """The truncation-convention drift correction is not negligible."""
