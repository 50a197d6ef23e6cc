"""Exception types shared across the package."""


class UnboundStateError(ValueError):
    """Raised when a requested level has no normalizable bound state.

    ``delta_c`` carries the critical screening of the level, when known.
    """

    def __init__(self, message, delta_c=None):
        super().__init__(message)
        self.delta_c = delta_c


class ThresholdStateError(UnboundStateError):
    """The level sits exactly at the continuum threshold (E = 0)."""


class NumericalError(RuntimeError):
    """A numerical procedure failed to converge or overflowed."""
