"""
Conditional states and probabilities on the joint space, without collapse: conditioning
on `X` projects the joint state with `Π_X` and renormalizes, and a vanishing projection is
reported as a `ZeroSignal` instead of a state.
"""
from dataclasses import dataclass
from typing import Union

import numpy as np

from ..config import get_effective_tolerances as TOL
from ..errors import DimensionError
from ..errors import HermiticityError
from ..errors import LabelError
from ..errors import NonCommutingError
from ..errors import ProbabilityError
from ..hilbert import Operator
from ..hilbert import StateVector
from ..measures import born_probability
from ..measures import check_projector
from ..relstate import BipartiteState
from ..relstate import RelativeStateDecomposition
from .truth import TernaryValue
from .truth import truth_value

# Maximum entry of the difference between a decomposition and the state it claims to expand
RECONSTRUCTION_TOLERANCE = 1e-10

AnyState = Union[StateVector, BipartiteState]


@dataclass(frozen=True)
class ZeroSignal:
    """The conditioning projector annihilates the state, no conditional state exists.

    :param weight: `‖Π_X Ψ‖²`, at most the `zero` tolerance.
    """

    weight: float


def _as_vector(state: AnyState) -> StateVector:
    return state.to_vector() if isinstance(state, BipartiteState) else state


def _check_projector(projector: Operator, dim: int) -> None:
    if projector.entries.shape != (dim, dim):
        raise DimensionError(f"Projector of shape {projector.entries.shape} on a {dim}-dim state.")
    if not check_projector(projector).is_projector:
        raise HermiticityError("Conditioning requires an orthogonal projector.")


def project(state: StateVector, projector: Operator) -> Union[StateVector, ZeroSignal]:
    """:returns: `Π Ψ / ‖Π Ψ‖`, or a `ZeroSignal` if the projection vanishes."""
    _check_projector(projector, state.dim)
    projected = projector.apply(state)
    weight = float(np.vdot(projected, projected).real)
    if weight <= TOL().zero:
        return ZeroSignal(weight)
    return StateVector(projected / np.sqrt(weight))


def conditional_state(joint: BipartiteState, projector: Operator) -> Union[BipartiteState, ZeroSignal]:
    """Joint state conditioned on the proposition of `projector` (a joint-space projector)."""
    projected = project(joint.to_vector(), projector)
    if isinstance(projected, ZeroSignal):
        return projected
    return BipartiteState.from_vector(projected, joint.dim_s, joint.dim_e)


def conditional_probability(state: AnyState, px: Operator, py: Operator) -> float:
    """`P(X|Y)`: probability of `px` in the state conditioned on `py`, 0 when `P(Y) = 0`."""
    conditioned = project(_as_vector(state), py)
    if isinstance(conditioned, ZeroSignal):
        return 0.0
    return born_probability(conditioned, px)


def system_given_environment(joint: BipartiteState, decomp: RelativeStateDecomposition, k: int, i: int) -> float:
    """Probability of the system proposition `φ_k` given that the environment is found in `R_i`.

    :returns: `|a_k|² |⟨R_i|R_k⟩|² / Σ_i' |a_i'|² |⟨R_i|R_i'⟩|²`. Components with an undefined
    relative state contribute nothing.
    :raises LabelError: If `R_i` is undefined or `k` is out of range.
    """
    if (joint.dim_s, joint.dim_e) != (decomp.dim_s, decomp.dim_e):
        raise DimensionError("Decomposition and joint state have different dimensions.")
    if float(np.max(np.abs(decomp.reassemble().amps - joint.amps))) > RECONSTRUCTION_TOLERANCE:
        raise ValueError("Decomposition does not describe the joint state.")
    if not 0 <= k < decomp.dim_s:
        raise LabelError(f"Component index {k} out of range for {decomp.dim_s} components.")

    record = decomp.rel_state(i)
    weights = np.array(
        [
            w**2 * abs(np.vdot(record.amps, r.amps)) ** 2 if r is not None else 0.0
            for w, r in zip(decomp.weights, decomp.rel_states)
        ]
    )
    return float(np.clip(weights[k] / np.sum(weights), 0, 1))


def joint_probability(state: AnyState, px: Operator, py: Operator) -> float:
    """Probability that both `X` and `Y` hold, `⟨Ψ|Π_X Π_Y|Ψ⟩`.

    :raises NonCommutingError: If the projectors do not commute, the product then depending on
    the order (see the ordered conjunction instead).
    """
    vector = _as_vector(state)
    _check_projector(px, vector.dim)
    _check_projector(py, vector.dim)
    if not px.commutes_with(py, TOL().idem):
        raise NonCommutingError("A symmetric joint probability needs commuting projectors.")
    product = px @ py
    return born_probability(vector, Operator((product.entries + product.dagger.entries) / 2))


def regularized_conditional(p_xy: float, p_x: float) -> float:
    """:returns: `P(X∧Y) / P(X)`, defined as 0 when `P(X)` vanishes."""
    for p in (p_xy, p_x):
        if not np.isfinite(p) or not 0 <= p <= 1:
            raise ProbabilityError(f"Probability must be in [0, 1], got {p}.")
    if p_x <= TOL().zero:
        return 0.0
    return float(np.clip(p_xy / p_x, 0, 1))


def implication_truth(state: AnyState, px: Operator, py: Operator) -> TernaryValue:
    """Truth value of `X ⟹ Y`, read as the truth of `Y` in the state conditioned on `X`.

    The conditional probability is `⟨Ψ|Π_X Π_Y Π_X|Ψ⟩ / P(X)`, regularized so that an
    impossible premise gives `F`.
    """
    vector = _as_vector(state)
    _check_projector(px, vector.dim)
    _check_projector(py, vector.dim)
    sandwich = px @ py @ px
    p_xy = born_probability(vector, Operator(sandwich.hermitian_part()))
    return truth_value(regularized_conditional(p_xy, born_probability(vector, px)))
