"""Exception hierarchy.

Everything derives from EntmonoError so callers can catch the whole family;
the concrete classes also subclass the matching builtin (ValueError or
RuntimeError) to stay friendly to generic error handling.
"""


class EntmonoError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(EntmonoError, ValueError):
    """Amplitude vector length does not match the declared qubit count."""


class DegenerateStateError(EntmonoError, ValueError):
    """State vector (or a tensor factor) has zero norm."""


class UnsupportedStateError(EntmonoError, ValueError):
    """Requested named state is not in the catalog."""


class NoMinorsError(EntmonoError, ValueError):
    """Bipartition matrix with a single column has no 2x2 minors."""


class NoBipartitionError(EntmonoError, ValueError):
    """Single-qubit states admit no qubit-versus-rest bipartition."""


class UnsupportedFormatError(EntmonoError, ValueError):
    """Operation is defined only for a fixed tensor format (e.g. three qubits)."""


class ConventionError(EntmonoError, RuntimeError):
    """No candidate pairing constant reproduces the polynomial hyperdeterminant."""


class SamplingError(EntmonoError, RuntimeError):
    """Rejection sampling exhausted its redraw budget."""
