"""
Failure of the distributive law `(φ₁ ∨ φ₂) ∧ χ_j = (φ₁ ∧ χ_j) ∨ (φ₂ ∧ χ_j)` for two
conjugate qubit bases, quantified by an interference term that scales with the overlap
`s = ⟨R₁|R₂⟩` of the environment records left by the `φ` measurement.
"""
from dataclasses import dataclass
from typing import Any
from typing import Dict
from typing import Tuple

import numpy as np

from ..errors import DimensionError
from ..hilbert import Operator
from ..hilbert import outer_product
from ..hilbert import StateVector
from ..measures import born_probability
from ..measures import pvm_from_basis
from ..relstate import BipartiteState
from .conditional import conditional_state
from .conditional import ZeroSignal
from .conjunction import conjunction_probability
from .conjunction import ConjugatePair
from .conjunction import Order


@dataclass(frozen=True)
class DistributiveReport:
    """Both sides of the distributive law and the term separating them.

    :param lhs: `P([φ₁ ∨ φ₂] ∧ χ_j)`, computed on the joint state.
    :param rhs_sum: `P(φ₁ ∧ χ_j) + P(φ₂ ∧ χ_j)`.
    :param interference: `2 |Z| cos θ · s`.
    :param z_modulus: `|Z|`.
    :param z_phase: `θ`, the argument of `Z`.
    :param overlap: The record overlap `s` used.
    """

    lhs: float
    rhs_sum: float
    interference: float
    z_modulus: float
    z_phase: float
    overlap: float

    @property
    def residual(self) -> float:
        return self.lhs - self.rhs_sum - self.interference

    def to_dict(self) -> Dict[str, Any]:
        return {
            "overlap": self.overlap,
            "lhs": self.lhs,
            "rhs_sum": self.rhs_sum,
            "interference": self.interference,
            "z_modulus": self.z_modulus,
            "z_phase": self.z_phase,
        }


def environment_pair(overlap: float) -> Tuple[StateVector, StateVector]:
    """:returns: `R₁ = e₁` and `R₂ = s e₁ + √(1 − s²) e₂`, two unit records with `⟨R₁|R₂⟩ = s`."""
    if not np.isfinite(overlap) or not 0 <= overlap <= 1:
        raise ValueError(f"Record overlap must be in [0, 1], got {overlap}.")
    r1 = StateVector.basis(2, 0)
    r2 = StateVector(np.array([overlap, np.sqrt(max(0.0, 1 - overlap**2))]))
    return r1, r2


def distributive_analysis(psi0: StateVector, pair: ConjugatePair, j: int, overlap: float) -> DistributiveReport:
    """Evaluate both sides of the distributive law on explicitly constructed states.

    The joint state `Ψ = Σ_i ⟨φ_i|ψ₀⟩ |φ_i⟩|R_i⟩` is conditioned on `φ₁ ∨ φ₂`, then the
    probability of `χ_j` in the conditioned state is weighted by `P(φ₁ ∨ φ₂)`.
    """
    if pair.dim != 2:
        raise DimensionError(f"The distributive analysis needs a qubit pair, got dimension {pair.dim}.")
    pair.check_indices(0, j)
    records = environment_pair(overlap)

    amplitudes = [complex(np.vdot(phi.amps, psi0.amps)) for phi in pair.basis_f]
    joint = BipartiteState(sum(c * np.outer(phi.amps, r.amps) for c, phi, r in zip(amplitudes, pair.basis_f, records)))
    identity_e = Operator.identity(2)

    either = pvm_from_basis(pair.basis_f, [{0, 1}]).element({0, 1}).kron(identity_e)
    p_either = born_probability(joint.to_vector(), either)
    conditioned = conditional_state(joint, either)
    if isinstance(conditioned, ZeroSignal):
        lhs = 0.0
    else:
        chi = pair.basis_x[j]
        lhs = born_probability(conditioned.to_vector(), outer_product(chi, chi).kron(identity_e)) * p_either

    rhs_sum = sum(conjunction_probability(psi0, pair, i, j, Order.F_FIRST) for i in range(2))

    t = pair.transition
    z = amplitudes[0].conjugate() * t[j, 0].conjugate() * t[j, 1] * amplitudes[1]
    return DistributiveReport(
        lhs=float(lhs),
        rhs_sum=float(rhs_sum),
        interference=float(2 * abs(z) * np.cos(np.angle(z)) * overlap),
        z_modulus=float(abs(z)),
        z_phase=float(np.angle(z)),
        overlap=float(overlap),
    )
