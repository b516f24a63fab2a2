"""Exception types raised across the package."""


class TxPolicyError(Exception):
    """Base class for all package errors."""


class RowSumError(TxPolicyError):
    """A transition-matrix row does not sum to 1 within tolerance."""


class NegativeEntryError(TxPolicyError):
    """A probability or cost entry is negative (or probability > 1)."""


class NotIrreducibleError(TxPolicyError):
    """The source chain has more than one communicating class."""


class ConvergenceFailure(TxPolicyError):
    """A fixed-point computation finished with residual above tolerance."""


class MaxItersExceeded(TxPolicyError):
    """An iterative solver hit its safety cap before converging."""


class BracketFailure(TxPolicyError):
    """The multiplier upper bracket could not be made feasible."""


class MultipleRecurrentClasses(TxPolicyError):
    """Evaluation from the given start reaches more than one closed class.

    Carries the per-class evaluation so callers can decide how to proceed:
    ``classes`` is a list of state-index lists, ``reports`` the matching
    per-class evaluation reports (may be None if not computed).
    """

    def __init__(self, message, classes, reports=None):
        super().__init__(message)
        self.classes = classes
        self.reports = reports


class TooLargeError(TxPolicyError):
    """State space exceeds the exhaustive-enumeration cap."""
