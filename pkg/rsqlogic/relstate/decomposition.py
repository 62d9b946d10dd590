from dataclasses import dataclass
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

import numpy as np

from ..config import get_effective_tolerances as TOL
from ..errors import DimensionError
from ..errors import LabelError
from ..errors import NormalizationError
from ..errors import UnitarityError
from ..hilbert import check_orthonormal
from ..hilbert import inner_product
from ..hilbert import Operator
from ..hilbert import StateVector
from .bipartite import BipartiteState


@dataclass(frozen=True, eq=False)
class RelativeStateDecomposition:
    """Expansion `Ψ = Σ_i a_i |φ_i⟩|R_i⟩` of a bipartite state in a system basis.

    The phase of each `a_i` is folded into `R_i`, so `weights` holds `|a_i|`. Relative
    states of components with `a_i = 0` are undefined and stored as `None`.

    :param basis: The system basis `{φ_i}` used for the expansion.
    :param weights: `|a_i|` for every basis vector.
    :param rel_states: The normalized relative states `R_i`, or `None` where undefined.
    :param dim_e: Dimension of the environment.
    """

    basis: Tuple[StateVector, ...]
    weights: np.ndarray
    rel_states: Tuple[Optional[StateVector], ...]
    dim_e: int

    def __post_init__(self) -> None:
        weights = np.array(self.weights, dtype=float)
        weights.flags.writeable = False
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "basis", tuple(self.basis))
        object.__setattr__(self, "rel_states", tuple(self.rel_states))

        if not len(self.basis) == len(weights) == len(self.rel_states):
            raise DimensionError("Basis, weights and relative states must have one entry per component.")
        if any(r is not None and r.dim != self.dim_e for r in self.rel_states):
            raise DimensionError(f"Relative states must live in the {self.dim_e}-dim environment.")
        if abs(float(np.sum(weights**2)) - 1) > 2 * TOL().norm:
            raise NormalizationError("Squared weights of a relative-state decomposition must sum to 1.")

    @property
    def dim_s(self) -> int:
        return len(self.basis)

    @property
    def defined_mask(self) -> np.ndarray:
        """:returns: A boolean array, false where the relative state is undefined (`a_i = 0`)."""
        return np.array([r is not None for r in self.rel_states])

    @property
    def amplitudes(self) -> np.ndarray:
        """:returns: The expansion coefficients `a_i` (real, phases live in the relative states)."""
        return np.asarray(self.weights, dtype=complex)

    def rel_state(self, index: int) -> StateVector:
        """:raises LabelError: If `index` is out of range or its relative state is undefined."""
        if not 0 <= index < self.dim_s:
            raise LabelError(f"Component index {index} out of range for {self.dim_s} components.")
        state = self.rel_states[index]
        if state is None:
            raise LabelError(f"Relative state {index} is undefined (its amplitude is zero).")
        return state

    def overlap(self, i: int, k: int) -> complex:
        """:returns: `⟨R_i|R_k⟩` for two defined relative states."""
        return inner_product(self.rel_state(i), self.rel_state(k))

    def reassemble(self) -> BipartiteState:
        """:returns: `Σ_i a_i |φ_i⟩ ⊗ |R_i⟩`."""
        amps = np.zeros((self.dim_s, self.dim_e), dtype=complex)
        for phi, weight, rel_state in zip(self.basis, self.weights, self.rel_states):
            if rel_state is not None:
                amps += weight * np.outer(phi.amps, rel_state.amps)
        return BipartiteState(amps)


def decompose(state: BipartiteState, basis_s: Sequence[StateVector]) -> RelativeStateDecomposition:
    """Compute `a_i` and `R_i = Σ_j (a_ij / a_i) |E_j⟩` in the system basis `basis_s`.

    :raises UnitarityError: If `basis_s` is not an orthonormal basis of the system space.
    """
    check_orthonormal(basis_s)
    if len(basis_s) != state.dim_s:
        raise UnitarityError(f"Expected a complete basis of {state.dim_s} vectors, got {len(basis_s)}.")

    rows = state.coefficients(basis_s)
    weights = np.linalg.norm(rows, axis=1)
    rel_states: List[Optional[StateVector]] = [
        StateVector(row / weight) if weight >= TOL().zero else None for row, weight in zip(rows, weights)
    ]
    return RelativeStateDecomposition(tuple(basis_s), weights, tuple(rel_states), state.dim_e)


@dataclass(frozen=True, eq=False)
class PartialRelativeFamily:
    """Environment records `R_ji` left by a measurement in basis `φ` followed by one in basis `χ`.

    :param rel_states: `rel_states[j][i]` is the partial relative state `R_ji`.
    :param transition: `transition[j, i] = ⟨χ_j|φ_i⟩`, a unitary change of basis.
    :param initial: `initial[i] = ⟨φ_i|ψ₀⟩`.
    """

    rel_states: Tuple[Tuple[StateVector, ...], ...]
    transition: np.ndarray
    initial: np.ndarray

    def __post_init__(self) -> None:
        rel_states = tuple(tuple(row) for row in self.rel_states)
        transition = np.array(self.transition, dtype=complex)
        initial = np.array(self.initial, dtype=complex)
        for array in (transition, initial):
            array.flags.writeable = False
        object.__setattr__(self, "rel_states", rel_states)
        object.__setattr__(self, "transition", transition)
        object.__setattr__(self, "initial", initial)

        if not rel_states or len({len(row) for row in rel_states}) != 1:
            raise DimensionError("Partial relative states must form a rectangular [j][i] table.")
        if transition.shape != (self.dim_x, self.dim_s) or initial.shape != (self.dim_s,):
            raise DimensionError("Transition and initial amplitudes do not match the relative-state table.")
        if not Operator(transition).is_unitary(tolerance=TOL().norm):
            raise UnitarityError("The transition matrix ⟨χ_j|φ_i⟩ must be unitary.")
        if abs(float(np.linalg.norm(initial)) - 1) > TOL().norm:
            raise NormalizationError("Initial amplitudes ⟨φ_i|ψ₀⟩ must be normalized.")
        if len({r.dim for row in rel_states for r in row}) != 1 or any(r.is_zero for row in rel_states for r in row):
            raise DimensionError("Partial relative states must be normalized and share one environment.")

    @property
    def dim_x(self) -> int:
        return len(self.rel_states)

    @property
    def dim_s(self) -> int:
        return len(self.rel_states[0])

    @property
    def dim_e(self) -> int:
        return self.rel_states[0][0].dim

    @staticmethod
    def from_bases(
        basis_f: Sequence[StateVector],
        basis_x: Sequence[StateVector],
        psi0: StateVector,
        rel_states: Sequence[Sequence[StateVector]],
    ) -> "PartialRelativeFamily":
        """Compute the transition and initial amplitudes from the two bases and the initial state."""
        transition = np.array([[inner_product(chi, phi) for phi in basis_f] for chi in basis_x])
        initial = np.array([inner_product(phi, psi0) for phi in basis_f])
        return PartialRelativeFamily(tuple(tuple(row) for row in rel_states), transition, initial)

    def overlaps(self) -> Operator:
        """:returns: The Gram matrix `⟨R_j'i'|R_ji⟩` indexed by the flat index `j · dim_s + i`."""
        flat = [r.amps for row in self.rel_states for r in row]
        columns = np.column_stack(flat)
        return Operator(columns.conj().T @ columns)


def two_stage_state(family: PartialRelativeFamily, basis_x: Sequence[StateVector]) -> BipartiteState:
    """Assemble `Ψ(t₂) = Σ_ij |χ_j⟩|R_ji⟩ ⟨χ_j|φ_i⟩⟨φ_i|ψ₀⟩` (system factor first).

    :raises NormalizationError: If the family does not describe a normalized joint state.
    """
    check_orthonormal(basis_x)
    if len(basis_x) != family.dim_x or basis_x[0].dim != family.dim_s:
        raise DimensionError(f"Expected {family.dim_x} second-stage vectors of dimension {family.dim_s}.")

    amps = np.zeros((family.dim_s, family.dim_e), dtype=complex)
    for j, chi in enumerate(basis_x):
        for i in range(family.dim_s):
            coefficient = family.transition[j, i] * family.initial[i]
            amps += coefficient * np.outer(chi.amps, family.rel_states[j][i].amps)

    norm = float(np.linalg.norm(amps))
    if abs(norm - 1) > TOL().norm:
        raise NormalizationError(f"Partial relative states yield a joint state of norm {norm:.12g}.")
    return BipartiteState(amps)
