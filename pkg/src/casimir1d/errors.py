"""Exception hierarchy shared by all casimir1d modules."""


class Casimir1DError(Exception):
    """Base class for every error raised by the package."""


class InvalidParameter(Casimir1DError, ValueError):
    """An argument falls outside the domain of the requested quantity."""


class DegenerateCutoff(Casimir1DError, ValueError):
    """The cutoff weight underflows for every mode (Lambda*pi/L too large)."""


class NoConvergence(Casimir1DError, RuntimeError):
    """A convergent mode sum failed to meet its truncation criterion."""


class IllConditionedLadder(Casimir1DError, RuntimeError):
    """Successive Richardson extrapolants move apart instead of settling."""


class ConsistencyViolation(Casimir1DError, RuntimeError):
    """A thermodynamic identity checked before returning a result failed."""
