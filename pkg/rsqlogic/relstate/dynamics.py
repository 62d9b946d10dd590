"""
Premeasurement dynamics. Unitaries are supplied directly; nothing here integrates a Hamiltonian.
"""
from typing import Sequence

from ..errors import DimensionError
from ..errors import UnitarityError
from ..hilbert import check_orthonormal
from ..hilbert import Operator
from ..hilbert import StateVector
from ..hilbert import tensor_product
from ..hilbert import unitary_completion
from .bipartite import BipartiteState


def premeasurement_unitary(
    basis_s: Sequence[StateVector],
    targets: Sequence[StateVector],
    ready: StateVector,
) -> Operator:
    """Joint unitary with `U (|φ_i⟩ ⊗ |R₀⟩) = |φ_i⟩ ⊗ |R_i⟩` for every basis vector.

    Targets need not be orthogonal: the images stay orthonormal through the system factor.
    Both the input and output families are completed with `unitary_completion`, so the
    action on the orthogonal complement is deterministic and `U = I` when every target
    equals the ready state.
    """
    check_orthonormal(basis_s)
    if len(targets) != len(basis_s):
        raise DimensionError(f"Expected one target per basis vector ({len(basis_s)}), got {len(targets)}.")
    if any(t.dim != ready.dim for t in targets):
        raise DimensionError(f"Targets must live in the {ready.dim}-dim environment.")

    inputs = unitary_completion([tensor_product(phi, ready) for phi in basis_s])
    outputs = unitary_completion([tensor_product(phi, target) for phi, target in zip(basis_s, targets)])
    unitary = outputs @ inputs.dagger
    if not unitary.is_unitary():
        raise UnitarityError("Premeasurement completion lost unitarity.")
    return unitary


def evolve(initial_s: StateVector, ready: StateVector, unitary: Operator) -> BipartiteState:
    """:returns: `Ψ(t) = U |ψ₀⟩|R₀⟩` as a bipartite state."""
    joint_dim = initial_s.dim * ready.dim
    if unitary.rows != joint_dim or not unitary.is_square:
        raise DimensionError(f"Unitary of shape {unitary.entries.shape} on a {joint_dim}-dim joint space.")
    if not unitary.is_unitary():
        raise UnitarityError("Evolution requires a unitary operator.")
    amps = unitary.apply(tensor_product(initial_s, ready))
    return BipartiteState(amps.reshape(initial_s.dim, ready.dim))
