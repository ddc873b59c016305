"""Bipartition matrices, Plucker coordinates, and the entanglement monotone.

For qubit j of an m-qubit state, the 2 x 2**(m-1) bipartition matrix holds
the amplitudes with k_j as the row index and the remaining multi-index,
ordered lexicographically, as the column index. Its 2x2 minors are the
Plucker coordinates of the qubit-j-versus-rest split; they vanish exactly
when qubit j is separable from the rest, satisfy the quadratic
Grassmann-Plucker relations identically, and their squared moduli sum to
det(rho_j) by Cauchy-Binet. The total monotone is
sqrt(normalization * sum_j E_j) with E_j that per-qubit sum.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

import numpy as np

from .errors import NoBipartitionError, NoMinorsError
from .states import PureState


@dataclass(frozen=True)
class BipartitionMatrix:
    """2 x d amplitude matrix splitting one qubit against the rest."""

    qubit_index: int
    entries: np.ndarray

    def __post_init__(self):
        entries = np.ascontiguousarray(self.entries, dtype=np.complex128)
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def d(self) -> int:
        return self.entries.shape[1]


@dataclass(frozen=True)
class PluckerSet:
    """All 2x2 minors of one bipartition matrix.

    ``matrix`` is the dense antisymmetric d x d array with
    matrix[a, b] = P_{a+1, b+1} for 0-based a, b; ``coords`` exposes the
    d(d-1)/2 distinct coordinates keyed by 1-based column pairs (c1 < c2).
    """

    qubit_index: int
    d: int
    matrix: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=np.complex128)
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)

    def coord(self, c1: int, c2: int) -> complex:
        """P_{c1,c2} with the antisymmetric convention, 1-based columns."""
        if not (1 <= c1 <= self.d and 1 <= c2 <= self.d):
            raise ValueError(f"column labels must lie in 1..{self.d}")
        return complex(self.matrix[c1 - 1, c2 - 1])

    @property
    def coords(self) -> Dict[Tuple[int, int], complex]:
        return {
            (c1 + 1, c2 + 1): complex(self.matrix[c1, c2])
            for c1 in range(self.d)
            for c2 in range(c1 + 1, self.d)
        }


@dataclass(frozen=True)
class MonotoneReport:
    """Per-qubit partial monotones, the normalization used, and the total."""

    per_qubit: Tuple[float, ...]
    normalization: float
    total: float


def bipartition_matrix(state: PureState, qubit: int) -> BipartitionMatrix:
    """Matrix splitting ``qubit`` (1-based) against the remaining qubits.

    Row r holds the amplitudes with k_qubit = r + 1; columns run over the
    remaining multi-indices in lexicographic order, leftmost remaining qubit
    most significant.
    """
    m = state.num_qubits
    if not 1 <= qubit <= m:
        raise ValueError(f"qubit index {qubit} out of range 1..{m}")
    mat = np.moveaxis(state.tensor(), qubit - 1, 0).reshape(2, -1)
    return BipartitionMatrix(qubit, mat)


def plucker_coordinates(mat: BipartitionMatrix) -> PluckerSet:
    """All 2x2 minors P_{c1,c2} = M[1,c1] M[2,c2] - M[1,c2] M[2,c1]."""
    if mat.d < 2:
        raise NoMinorsError("a single-column bipartition matrix has no 2x2 minors")
    top, bottom = mat.entries
    outer = np.outer(top, bottom)
    return PluckerSet(mat.qubit_index, mat.d, outer - outer.T)


@lru_cache(maxsize=None)
def _column_triples(d: int) -> np.ndarray:
    return np.array(list(itertools.combinations(range(d), 3)), dtype=np.intp)


def relation_residuals_dense(matrix: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Three-term quadratic relation residuals for stacked coordinate matrices.

    ``matrix`` has shape (..., d, d), antisymmetric in the last two axes.
    Returns (residuals, triples): residuals[..., i, t] is
    -P[i,a] P[b,c] + P[i,b] P[a,c] - P[i,c] P[a,b] for triples[t] = (a, b, c),
    with i running over all d rows (degenerate choices are included; they
    vanish identically through the antisymmetric convention).
    """
    d = matrix.shape[-1]
    if d < 4:
        empty = np.zeros(matrix.shape[:-2] + (d, 0), dtype=np.complex128)
        return empty, np.zeros((0, 3), dtype=np.intp)
    triples = _column_triples(d)
    a, b, c = triples[:, 0], triples[:, 1], triples[:, 2]
    residuals = (
        -matrix[..., :, a] * matrix[..., b, c][..., None, :]
        + matrix[..., :, b] * matrix[..., a, c][..., None, :]
        - matrix[..., :, c] * matrix[..., a, b][..., None, :]
    )
    return residuals, triples


def plucker_relation_residuals(pset: PluckerSet):
    """All quadratic relation residuals as (I, J, residual) tuples.

    I = (i1,) and J = (j1, j2, j3) are 1-based column labels with J strictly
    increasing and i1 unrestricted; empty for d < 4. Coordinates coming from
    actual minors make every residual vanish.
    """
    residuals, triples = relation_residuals_dense(pset.matrix)
    out = []
    for t, (a, b, c) in enumerate(triples):
        jlabel = (int(a) + 1, int(b) + 1, int(c) + 1)
        for i in range(pset.d):
            out.append(((i + 1,), jlabel, complex(residuals[i, t])))
    return out


def max_relation_residual(pset: PluckerSet) -> float:
    """Largest |residual| over all quadratic relations (0.0 when d < 4)."""
    residuals, _ = relation_residuals_dense(pset.matrix)
    return float(np.abs(residuals).max()) if residuals.size else 0.0


def partial_monotone(pset: PluckerSet) -> float:
    """E_j = sum over distinct column pairs of |P_{c1,c2}|^2.

    Each pair is counted exactly once; by Cauchy-Binet this equals
    det(Mat_j Mat_j^dagger), i.e. det(rho_j) for normalized states.
    """
    # the dense matrix stores each coordinate twice (antisymmetry), hence /2
    return float(np.sum(np.abs(pset.matrix) ** 2)) / 2.0


def total_monotone(state: PureState, normalization: float = 1.0) -> MonotoneReport:
    """Total monotone sqrt(normalization * sum_j E_j) with all E_j attached.

    Accepts unnormalized states; the result then scales with the squared
    norm (degree-2 homogeneity). Requires at least two qubits.
    """
    if state.num_qubits < 2:
        raise NoBipartitionError("total monotone needs at least two qubits")
    if normalization <= 0.0:
        raise ValueError(f"normalization must be positive, got {normalization}")
    per_qubit = tuple(
        partial_monotone(plucker_coordinates(bipartition_matrix(state, j)))
        for j in range(1, state.num_qubits + 1)
    )
    total = float(np.sqrt(normalization * sum(per_qubit)))
    return MonotoneReport(per_qubit, float(normalization), total)


def separability_witness(state: PureState, qubit: int, tol: float = 1e-10) -> bool:
    """True iff qubit ``qubit`` is separable from the rest at tolerance ``tol``
    (all its bipartition minors vanish, E_j < tol). Requires a normalized state."""
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    if not 1 <= qubit <= state.num_qubits:
        raise ValueError(f"qubit index {qubit} out of range 1..{state.num_qubits}")
    if not state.normalized:
        raise ValueError("separability witness requires a normalized state")
    if state.num_qubits == 1:
        return True
    ej = partial_monotone(plucker_coordinates(bipartition_matrix(state, qubit)))
    return ej < tol
