"""
Naimark compression of a PVM on the joint system⊗environment space to a POVM on the system,
and the relative-state form of joint-space probabilities.
"""
from typing import TYPE_CHECKING

import numpy as np

from ..errors import DimensionError
from ..errors import UnitarityError
from ..hilbert import Operator
from ..hilbert import StateVector
from .povm import Povm
from .pvm import Pvm

if TYPE_CHECKING:
    from ..relstate import RelativeStateDecomposition


def isometry(unitary: Operator, ready: StateVector, dim_s: int) -> Operator:
    """:returns: `V = U (I_S ⊗ |R₀⟩)`, mapping the system space into the joint space."""
    embed = np.kron(np.eye(dim_s), ready.amps.reshape(-1, 1))
    return unitary @ Operator(embed)


def naimark_compress(pvm_joint: Pvm, unitary: Operator, ready: StateVector, dim_s: int) -> Povm:
    """Compress a joint-space PVM to the system space through `F_X = V† Π_X V`.

    :param pvm_joint: PVM acting on `dim_s · ready.dim` dimensions.
    :param unitary: Joint-space dynamics `U`, applied to `|ψ₀⟩|R₀⟩`.
    :param ready: Initial ("ready") environment state `|R₀⟩`.
    :param dim_s: Dimension of the system space.
    :returns: One POVM element per cell of `pvm_joint`, in the same order.
    """
    joint_dim = dim_s * ready.dim
    if pvm_joint.dim != joint_dim or unitary.rows != joint_dim:
        raise DimensionError(f"Joint operators must act on {dim_s}·{ready.dim} = {joint_dim} dimensions.")
    if not unitary.is_unitary():
        raise UnitarityError("Naimark compression needs a unitary joint evolution.")

    v = isometry(unitary, ready, dim_s)
    return Povm(tuple(v.dagger @ projector @ v for projector in pvm_joint.projectors))


def relative_state_probability(decomp: "RelativeStateDecomposition", env_element: Operator) -> float:
    """:returns: `Σ_i |a_i|² ⟨R_i|Π^E|R_i⟩`, the probability of `I_S ⊗ Π^E` written with relative states."""
    if env_element.rows != decomp.dim_e or not env_element.is_square:
        raise DimensionError(f"Environment element of shape {env_element.entries.shape}, expected {decomp.dim_e}.")

    total = 0.0
    for weight, rel_state in zip(decomp.weights, decomp.rel_states):
        if rel_state is None:
            continue
        total += weight**2 * float(np.vdot(rel_state.amps, env_element.entries @ rel_state.amps).real)
    return float(np.clip(total, 0, 1))
