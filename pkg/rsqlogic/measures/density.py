from dataclasses import dataclass
from typing import List

import numpy as np

from ..config import get_effective_tolerances as TOL
from ..errors import HermiticityError
from ..errors import NormalizationError
from ..hilbert import hermitian_eigenvalues
from ..hilbert import Operator
from ..hilbert import outer_product
from ..hilbert import StateVector

# Maximum deviation of the trace from 1
TRACE_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, positive semi-definite, unit-trace operator describing a (mixed) state.

    :param matrix: The underlying operator, validated on construction.
    """

    matrix: Operator

    def __post_init__(self) -> None:
        if not self.matrix.is_hermitian():
            raise HermiticityError("A density matrix must be Hermitian.")
        hermitian_eigenvalues(self.matrix, psd=True)
        trace = self.matrix.trace().real
        if abs(trace - 1) > max(TRACE_TOLERANCE, 2 * TOL().norm):
            raise NormalizationError(f"A density matrix must have unit trace, got {trace:.12g}.")

    @property
    def dim(self) -> int:
        return self.matrix.dim

    @property
    def entries(self) -> np.ndarray:
        return self.matrix.entries

    @staticmethod
    def from_state(state: StateVector) -> "DensityMatrix":
        """:returns: The pure-state density matrix `|ψ⟩⟨ψ|`."""
        if state.is_zero:
            raise NormalizationError("The zero state has no density matrix.")
        return DensityMatrix(outer_product(state, state))

    def eigenvalues(self) -> List[float]:
        """:returns: Eigenvalues in descending order, clamped to be non-negative."""
        return hermitian_eigenvalues(self.matrix, psd=True)

    def purity(self) -> float:
        """:returns: `Tr[ρ²]`, equal to 1 for pure states."""
        return float(np.real(np.trace(self.entries @ self.entries)))
