from dataclasses import dataclass
from typing import Any
from typing import Dict
from typing import Iterable
from typing import List

import numpy as np

from ..config import get_effective_tolerances as TOL
from ..errors import DimensionError
from ..errors import NormalizationError


@dataclass(frozen=True, eq=False)
class StateVector:
    """Normalized complex amplitudes over a finite orthonormal basis.

    The all-zero vector is the only non-normalized value accepted. It is produced by
    `StateVector.zero` and is only meaningful where an operation documents it.

    :param amps: One-dimensional array of complex amplitudes, copied and frozen on construction.
    """

    amps: np.ndarray

    def __post_init__(self) -> None:
        amps = np.array(self.amps, dtype=complex)
        if amps.ndim != 1 or amps.size == 0:
            raise DimensionError(f"A state vector must be a non-empty 1D array, got shape {amps.shape}.")
        if not np.all(np.isfinite(amps)):
            raise NormalizationError("State amplitudes must be finite.")
        norm = float(np.linalg.norm(amps))
        if np.any(amps != 0) and abs(norm - 1) > TOL().norm:
            raise NormalizationError(f"State must be normalized, got norm {norm:.12g}.")
        amps.flags.writeable = False
        object.__setattr__(self, "amps", amps)

    @property
    def dim(self) -> int:
        return int(self.amps.size)

    @property
    def is_zero(self) -> bool:
        """:returns: True for the distinguished zero state."""
        return not np.any(self.amps != 0)

    @staticmethod
    def basis(dim: int, index: int) -> "StateVector":
        """:returns: The standard basis vector `e_index` of dimension `dim`."""
        if not 0 <= index < dim:
            raise DimensionError(f"Basis index {index} out of range for dimension {dim}.")
        amps = np.zeros(dim, dtype=complex)
        amps[index] = 1
        return StateVector(amps)

    @staticmethod
    def zero(dim: int) -> "StateVector":
        return StateVector(np.zeros(dim, dtype=complex))

    @staticmethod
    def from_list(values: Iterable[complex]) -> "StateVector":
        """Normalize and wrap a list of (possibly unnormalized) amplitudes."""
        return normalize(np.array(list(values), dtype=complex))

    def to_dict(self) -> Dict[str, Any]:
        return {"re": self.amps.real.tolist(), "im": self.amps.imag.tolist()}

    @staticmethod
    def from_dict(dict: Dict[str, List[float]]) -> "StateVector":
        return StateVector(np.array(dict["re"]) + 1j * np.array(dict["im"]))

    def __repr__(self) -> str:
        return f"StateVector({np.array2string(self.amps, precision=5)})"


def normalize(amplitudes: np.ndarray) -> StateVector:
    """:returns: The normalized state along `amplitudes`.
    :raises NormalizationError: If the amplitudes are numerically zero."""
    amps = np.asarray(amplitudes, dtype=complex)
    norm = float(np.linalg.norm(amps))
    if norm**2 < TOL().zero:
        raise NormalizationError("Cannot normalize a zero vector.")
    return StateVector(amps / norm)
