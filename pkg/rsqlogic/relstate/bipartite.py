from dataclasses import dataclass
from typing import Any
from typing import Dict
from typing import Sequence

import numpy as np

from ..config import get_effective_tolerances as TOL
from ..errors import DimensionError
from ..errors import NormalizationError
from ..hilbert import basis_matrix
from ..hilbert import StateVector
from ..hilbert import tensor_product


@dataclass(frozen=True, eq=False)
class BipartiteState:
    """Normalized state of a system and its environment, stored as the amplitude matrix
    `a_ij = ⟨φ_i E_j|Ψ⟩` (system index outer, environment index inner).

    :param amps: Complex matrix of shape `(dim_s, dim_e)`, copied and frozen on construction.
    """

    amps: np.ndarray

    def __post_init__(self) -> None:
        amps = np.array(self.amps, dtype=complex)
        if amps.ndim != 2 or amps.size == 0:
            raise DimensionError(f"Bipartite amplitudes must be a non-empty matrix, got shape {amps.shape}.")
        if not np.all(np.isfinite(amps)):
            raise NormalizationError("Bipartite amplitudes must be finite.")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1) > TOL().norm:
            raise NormalizationError(f"Bipartite state must be normalized, got norm {norm:.12g}.")
        amps.flags.writeable = False
        object.__setattr__(self, "amps", amps)

    @property
    def dim_s(self) -> int:
        return int(self.amps.shape[0])

    @property
    def dim_e(self) -> int:
        return int(self.amps.shape[1])

    @property
    def joint_dim(self) -> int:
        return self.dim_s * self.dim_e

    def to_vector(self) -> StateVector:
        """:returns: The joint-space state, flattened row-major."""
        return StateVector(self.amps.reshape(-1))

    @staticmethod
    def from_vector(state: StateVector, dim_s: int, dim_e: int) -> "BipartiteState":
        if state.dim != dim_s * dim_e:
            raise DimensionError(f"Cannot split a {state.dim}-dim state into {dim_s}×{dim_e}.")
        return BipartiteState(state.amps.reshape(dim_s, dim_e))

    @staticmethod
    def product(system: StateVector, environment: StateVector) -> "BipartiteState":
        """:returns: The product state `|s⟩ ⊗ |e⟩`."""
        return BipartiteState.from_vector(tensor_product(system, environment), system.dim, environment.dim)

    def coefficients(self, basis_s: Sequence[StateVector]) -> np.ndarray:
        """:returns: The amplitude matrix with the system index expressed in `basis_s`."""
        if any(v.dim != self.dim_s for v in basis_s):
            raise DimensionError(f"System basis vectors must have dimension {self.dim_s}.")
        return np.asarray(basis_matrix(basis_s).conj().T @ self.amps)

    def to_dict(self) -> Dict[str, Any]:
        return {"re": self.amps.real.tolist(), "im": self.amps.imag.tolist()}

    def __repr__(self) -> str:
        return f"BipartiteState({self.dim_s}×{self.dim_e})"
