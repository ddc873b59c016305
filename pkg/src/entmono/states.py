"""Pure multi-qubit states: construction, indexing, partial trace.

Index convention
----------------
Amplitudes are stored flat in C order with qubit 1 as the most significant
digit: the multi-index (k_1, ..., k_m) with k_j in {1, 2} lives at flat
position sum_j (k_j - 1) * 2**(m - j). Internally the {1, 2} digits map to
bits {0, 1}; every public argument and label stays 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DegenerateStateError, DimensionError, UnsupportedStateError
from .rng import complex_normal, stream
from .tolerances import NORMALIZATION_ATOL


@dataclass(frozen=True)
class PureState:
    """Pure state of ``num_qubits`` qubits as a flat complex amplitude vector."""

    num_qubits: int
    amplitudes: np.ndarray
    normalized: bool

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return 1 << self.num_qubits

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def tensor(self) -> np.ndarray:
        """Amplitudes reshaped to one axis per qubit (read-only view)."""
        return self.amplitudes.reshape((2,) * self.num_qubits)


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian positive semidefinite matrix, typically a reduced state."""

    dim: int
    entries: np.ndarray

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=np.complex128)
        if entries.shape != (self.dim, self.dim):
            raise DimensionError(
                f"entries have shape {entries.shape}, expected ({self.dim}, {self.dim})"
            )
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    def trace(self) -> float:
        return float(np.trace(self.entries).real)

    def determinant(self) -> float:
        return float(np.linalg.det(self.entries).real)

    def validate(self, hermitian_atol: float = 1e-12, psd_floor: float = -1e-10,
                 unit_trace_atol: float | None = None) -> None:
        """Raise ValueError unless Hermitian, PSD and (optionally) unit trace."""
        dev = np.max(np.abs(self.entries - self.entries.conj().T))
        if dev > hermitian_atol:
            raise ValueError(f"not Hermitian: max deviation {dev:.3e}")
        lam = np.linalg.eigvalsh((self.entries + self.entries.conj().T) / 2.0)
        if lam.min() < psd_floor:
            raise ValueError(f"not positive semidefinite: min eigenvalue {lam.min():.3e}")
        if unit_trace_atol is not None and abs(self.trace() - 1.0) > unit_trace_atol:
            raise ValueError(f"trace {self.trace()!r} is not 1")


def flat_index(multi_index: Sequence[int]) -> int:
    """Flat position of a 1-based multi-index, qubit 1 most significant."""
    idx = 0
    for k in multi_index:
        if k not in (1, 2):
            raise IndexError(f"multi-index digit {k!r} is not 1 or 2")
        idx = (idx << 1) | (k - 1)
    return idx


def make_state(num_qubits: int, amplitudes: Sequence[complex]) -> PureState:
    """Build a PureState from a flat amplitude sequence.

    Parameters
    ----------
    num_qubits : int
        Number of qubits m >= 1.
    amplitudes : sequence of complex
        Exactly 2**m entries in the flat-index order documented above.

    The normalized flag is set by testing the squared norm against 1 within
    1e-12; unnormalized vectors are accepted (local filtering operations
    produce them) and all monotone operations handle them homogeneously.
    """
    if num_qubits < 1:
        raise DimensionError(f"num_qubits must be >= 1, got {num_qubits}")
    amps = np.asarray(amplitudes, dtype=np.complex128)
    if amps.ndim != 1 or amps.size != (1 << num_qubits):
        raise DimensionError(
            f"expected {1 << num_qubits} amplitudes for {num_qubits} qubits, got {amps.size}"
        )
    norm_sq = float(np.sum(np.abs(amps) ** 2))
    if norm_sq == 0.0:
        raise DegenerateStateError("all-zero amplitude vector")
    return PureState(num_qubits, amps, abs(norm_sq - 1.0) <= NORMALIZATION_ATOL)


def amplitude(state: PureState, multi_index: Sequence[int]) -> complex:
    """Amplitude at a 1-based multi-index (k_1, ..., k_m), each k_j in {1, 2}."""
    if len(multi_index) != state.num_qubits:
        raise IndexError(
            f"multi-index length {len(multi_index)} != num_qubits {state.num_qubits}"
        )
    return complex(state.amplitudes[flat_index(multi_index)])


def product_state(factors: Sequence[Sequence[complex]]) -> PureState:
    """Normalized tensor product of single-qubit factors, qubit 1 first."""
    if not factors:
        raise DimensionError("need at least one factor")
    amps = np.ones(1, dtype=np.complex128)
    for i, factor in enumerate(factors):
        f = np.asarray(factor, dtype=np.complex128)
        if f.shape != (2,):
            raise DimensionError(f"factor {i + 1} must have exactly 2 components")
        if not np.any(f):
            raise DegenerateStateError(f"factor {i + 1} is the zero vector")
        amps = np.kron(amps, f)
    amps = amps / np.linalg.norm(amps)
    return make_state(len(factors), amps)


def named_state(name: str, num_qubits: int) -> PureState:
    """Catalog states: GHZ = (|1..1> + |2..2>)/sqrt(2), W = equal superposition
    of the m single-excitation basis states. Requires num_qubits >= 2."""
    if num_qubits < 2:
        raise ValueError(f"named states need num_qubits >= 2, got {num_qubits}")
    dim = 1 << num_qubits
    amps = np.zeros(dim, dtype=np.complex128)
    key = name.strip().upper()
    if key == "GHZ":
        amps[0] = amps[dim - 1] = 1.0 / np.sqrt(2.0)
    elif key == "W":
        for j in range(num_qubits):
            amps[1 << j] = 1.0 / np.sqrt(num_qubits)
    else:
        raise UnsupportedStateError(f"unknown named state {name!r} (known: GHZ, W)")
    return make_state(num_qubits, amps)


def haar_random_state(num_qubits: int, seed: int) -> PureState:
    """Haar-random pure state from the stream addressed by ``seed``.

    Draws 2**m i.i.d. standard complex Gaussians and normalizes; identical
    (num_qubits, seed) pairs reproduce the state bit for bit.
    """
    if num_qubits < 1:
        raise DimensionError(f"num_qubits must be >= 1, got {num_qubits}")
    rng = stream(seed)
    amps = complex_normal(rng, 1 << num_qubits)
    amps /= np.linalg.norm(amps)
    return make_state(num_qubits, amps)


def reduced_density(state: PureState, keep: Iterable[int]) -> DensityMatrix:
    """Reduced density matrix on the qubits in ``keep`` (1-based labels).

    Traces out every qubit not in ``keep``; the kept qubits appear in
    ascending label order. ``keep`` must be a nonempty proper subset of
    {1, ..., m}.
    """
    m = state.num_qubits
    kept = sorted(set(int(q) for q in keep))
    if not kept:
        raise ValueError("keep must be nonempty")
    if any(q < 1 or q > m for q in kept):
        raise ValueError(f"keep labels must lie in 1..{m}, got {kept}")
    if len(kept) == m:
        raise ValueError("keep must be a proper subset (nothing left to trace out)")
    traced = [q - 1 for q in range(1, m + 1) if q not in kept]
    psi = state.tensor()
    rho = np.tensordot(psi, psi.conj(), axes=(traced, traced))
    d = 1 << len(kept)
    return DensityMatrix(d, rho.reshape(d, d))
