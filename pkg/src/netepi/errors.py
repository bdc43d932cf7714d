"""Exception hierarchy shared across the package.

The CLI maps these onto distinct exit codes, so analysis code should raise
the most specific class that applies.
"""


class NetEpiError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(NetEpiError):
    """Malformed graph input: bad edge line, bad weight, bad index, duplicate edge."""


class EmptyInputError(GraphFormatError):
    """Graph input contained no edges."""


class ReducibleMatrixError(NetEpiError):
    """The graph is not strongly connected / the matrix is reducible."""


class BelowThresholdError(NetEpiError):
    """An above-threshold precondition (reproduction number > 1) does not hold."""


class NonConvergenceError(NetEpiError):
    """An iterative method exhausted its iteration budget."""


class InvariantViolationError(NetEpiError):
    """An integrated state left its invariant set by more than roundoff allows."""
