from dataclasses import dataclass
from typing import Optional
from typing import Union

import numpy as np

from ..config import get_effective_tolerances as TOL
from ..errors import DimensionError
from ..errors import HermiticityError
from .vectors import StateVector


@dataclass(frozen=True, eq=False)
class Operator:
    """Dense complex matrix acting on a finite-dimensional Hilbert space.

    :param entries: Two-dimensional array, copied and frozen on construction.
    """

    entries: np.ndarray

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=complex)
        if entries.ndim != 2 or entries.size == 0:
            raise DimensionError(f"An operator must be a non-empty 2D array, got shape {entries.shape}.")
        if not np.all(np.isfinite(entries)):
            raise ValueError("Operator entries must be finite.")
        entries.flags.writeable = False
        object.__setattr__(self, "entries", entries)

    @property
    def rows(self) -> int:
        return int(self.entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self.entries.shape[1])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def dim(self) -> int:
        """:returns: The dimension of the space a square operator acts on."""
        self._require_square()
        return self.rows

    @staticmethod
    def identity(dim: int) -> "Operator":
        return Operator(np.eye(dim, dtype=complex))

    @staticmethod
    def zero(rows: int, cols: Optional[int] = None) -> "Operator":
        return Operator(np.zeros((rows, cols if cols else rows), dtype=complex))

    @property
    def dagger(self) -> "Operator":
        return Operator(self.entries.conj().T)

    def __matmul__(self, other: "Operator") -> "Operator":
        if self.cols != other.rows:
            raise DimensionError(f"Cannot multiply {self.entries.shape} by {other.entries.shape}.")
        return Operator(self.entries @ other.entries)

    def __add__(self, other: "Operator") -> "Operator":
        self._require_same_shape(other)
        return Operator(self.entries + other.entries)

    def __sub__(self, other: "Operator") -> "Operator":
        self._require_same_shape(other)
        return Operator(self.entries - other.entries)

    def __mul__(self, scalar: Union[complex, float]) -> "Operator":
        return Operator(self.entries * scalar)

    __rmul__ = __mul__

    def apply(self, state: Union[StateVector, np.ndarray]) -> np.ndarray:
        """:returns: The (unnormalized) amplitudes of this operator applied to `state`."""
        amps = state.amps if isinstance(state, StateVector) else np.asarray(state, dtype=complex)
        if amps.shape != (self.cols,):
            raise DimensionError(f"Cannot apply a {self.entries.shape} operator to a vector of size {amps.size}.")
        return np.asarray(self.entries @ amps)

    def kron(self, other: "Operator") -> "Operator":
        """:returns: The tensor product `self ⊗ other` (self is the outer index)."""
        return Operator(np.kron(self.entries, other.entries))

    def trace(self) -> complex:
        self._require_square()
        return complex(np.trace(self.entries))

    def distance(self, other: "Operator") -> float:
        """:returns: The sup-norm `max |A_kl - B_kl|` between two operators of the same shape."""
        self._require_same_shape(other)
        return float(np.max(np.abs(self.entries - other.entries)))

    def hermiticity_defect(self) -> float:
        """:returns: `max |M - M†|` over all entries."""
        self._require_square()
        return float(np.max(np.abs(self.entries - self.entries.conj().T)))

    def is_hermitian(self, tolerance: Optional[float] = None) -> bool:
        tol = TOL().herm if tolerance is None else tolerance
        return self.is_square and self.hermiticity_defect() <= tol

    def is_unitary(self, tolerance: Optional[float] = None) -> bool:
        """:returns: True if `U†U = I` within the idempotency tolerance."""
        tol = TOL().idem if tolerance is None else tolerance
        if not self.is_square:
            return False
        return bool(np.max(np.abs(self.entries.conj().T @ self.entries - np.eye(self.rows))) <= tol)

    def commutes_with(self, other: "Operator", tolerance: Optional[float] = None) -> bool:
        tol = TOL().idem if tolerance is None else tolerance
        return (self @ other).distance(other @ self) <= tol

    def hermitian_part(self) -> np.ndarray:
        """:returns: `(M + M†) / 2` after checking that `M` is Hermitian within tolerance."""
        if not self.is_hermitian():
            raise HermiticityError(f"Operator is not Hermitian (defect {self.hermiticity_defect():.3g}).")
        return np.asarray((self.entries + self.entries.conj().T) / 2)

    def _require_square(self) -> None:
        if not self.is_square:
            raise DimensionError(f"Operator must be square, got shape {self.entries.shape}.")

    def _require_same_shape(self, other: "Operator") -> None:
        if self.entries.shape != other.entries.shape:
            raise DimensionError(f"Shape mismatch: {self.entries.shape} vs {other.entries.shape}.")

    def __repr__(self) -> str:
        return f"Operator({np.array2string(self.entries, precision=4)})"
