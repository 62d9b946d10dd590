from dataclasses import dataclass
from typing import Any
from typing import Dict
from typing import Sequence
from typing import Union

import numpy as np

from ..config import get_effective_tolerances as TOL
from ..errors import DimensionError
from ..errors import HermiticityError
from ..errors import NormalizationError
from ..errors import ProbabilityError
from ..hilbert import basis_matrix
from ..hilbert import gram_matrix
from ..hilbert import hermitian_eigenvalues
from ..hilbert import invert_gram
from ..hilbert import Operator
from ..hilbert import StateVector
from .density import DensityMatrix

# Imaginary parts of Born expectations above this indicate a bug rather than rounding
IMAGINARY_TOLERANCE = 1e-9


def _check_effect(element: Operator) -> None:
    """Require `0 ≤ element ≤ I` within the Hermiticity tolerance."""
    spectrum = hermitian_eigenvalues(element)
    if spectrum[-1] < -TOL().herm or spectrum[0] > 1 + TOL().herm:
        raise HermiticityError(f"Measurement element spectrum [{spectrum[-1]:.3g}, {spectrum[0]:.3g}] not in [0, 1].")


def born_probability(state: Union[StateVector, DensityMatrix], element: Operator) -> float:
    """Probability of the outcome associated with `element`.

    :param state: Pure state `|Ψ⟩` (gives `⟨Ψ|E|Ψ⟩`) or density matrix `ρ` (gives `Tr[ρE]`).
    :param element: Hermitian operator with spectrum in [0, 1].
    :returns: The real part of the expectation, clamped to [0, 1].
    """
    if state.dim != element.rows or not element.is_square:
        raise DimensionError(f"State of dimension {state.dim} with a {element.entries.shape} element.")
    _check_effect(element)

    if isinstance(state, DensityMatrix):
        value = complex(np.trace(state.entries @ element.entries))
    else:
        value = complex(np.vdot(state.amps, element.entries @ state.amps))

    if abs(value.imag) > IMAGINARY_TOLERANCE:
        raise ProbabilityError(f"Born expectation has an imaginary residue {value.imag:.3g}.")
    return float(np.clip(value.real, 0, 1))


def matrix_element(xi: StateVector, element: Operator, eta: StateVector) -> complex:
    """:returns: The raw matrix element `⟨ξ|Π|η⟩` for an arbitrary pair of states."""
    if not xi.dim == eta.dim == element.rows == element.cols:
        raise DimensionError("Matrix element between states and operator of different dimensions.")
    return complex(np.vdot(xi.amps, element.entries @ eta.amps))


def general_projector(vectors: Sequence[StateVector]) -> Operator:
    """Orthogonal projector onto the span of possibly non-orthogonal vectors.

    Builds `P = Σ_ij |φ_i⟩ (A⁻¹)_ij ⟨φ_j|` with `A_ij = ⟨φ_i|φ_j⟩`. A rank-deficient Gram
    matrix is replaced by its spectral pseudo-inverse, which still gives the projector onto
    the span (for identical vectors, the rank-1 projector onto that vector).
    """
    if not vectors:
        raise NormalizationError("The generalized projector needs at least one vector.")
    if any(v.is_zero for v in vectors):
        raise NormalizationError("The generalized projector is undefined for zero vectors.")
    if len({v.dim for v in vectors}) != 1:
        raise DimensionError("All vectors of a generalized projector must share a dimension.")

    phi = basis_matrix(vectors)
    inverse = invert_gram(gram_matrix(vectors)).entries
    projector = phi @ inverse @ phi.conj().T
    return Operator((projector + projector.conj().T) / 2)


@dataclass(frozen=True)
class ProjectorDiagnostics:
    """Result of `check_projector`: how far an operator is from being an orthogonal projector."""

    self_adjoint: bool
    idempotent: bool
    hermiticity_defect: float
    idempotency_defect: float

    @property
    def is_projector(self) -> bool:
        return self.self_adjoint and self.idempotent

    def to_dict(self) -> Dict[str, Any]:
        return {
            "self_adjoint": self.self_adjoint,
            "idempotent": self.idempotent,
            "hermiticity_defect": self.hermiticity_defect,
            "idempotency_defect": self.idempotency_defect,
        }


def check_projector(m: Operator) -> ProjectorDiagnostics:
    """Measure `‖m − m†‖∞` and `‖m² − m‖∞` and compare them to the active tolerances."""
    hermiticity_defect = m.hermiticity_defect()
    idempotency_defect = (m @ m).distance(m)
    return ProjectorDiagnostics(
        self_adjoint=hermiticity_defect <= TOL().herm,
        idempotent=idempotency_defect <= TOL().idem,
        hermiticity_defect=hermiticity_defect,
        idempotency_defect=idempotency_defect,
    )
