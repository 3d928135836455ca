"""Exception types shared across the package."""


class DiracSpectraError(Exception):
    """Base class for all package errors."""


class MaxOrderExceeded(DiracSpectraError):
    """A derivative order or expansion index exceeds the configured n_max."""


class MissingDerivative(DiracSpectraError):
    """evaluate() was not given a derivative value it needs."""


class StepFailure(DiracSpectraError):
    """The adaptive integrator could not meet the tolerance above the minimum step."""

    def __init__(self, message, lam=None):
        super().__init__(message)
        self.lam = lam


class NoConvergence(DiracSpectraError):
    """Extrapolated estimates of an asymptotic coefficient do not settle."""


class BoundaryZero(DiracSpectraError):
    """A zero of the determinant sits on (or too close to) a contour."""


class NewtonStall(DiracSpectraError):
    """Newton refinement failed to converge inside its cell."""


class InvalidConfig(DiracSpectraError):
    """A problem configuration failed validation."""
