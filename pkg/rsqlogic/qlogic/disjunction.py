from typing import Iterable
from typing import List

from ..errors import DimensionError
from ..errors import LabelError
from ..hilbert import Operator
from ..hilbert import operator_tensor
from ..hilbert import StateVector
from ..measures import general_projector
from ..measures import relative_state_probability
from ..relstate import RelativeStateDecomposition


def disjunction_projector(rel_states: List[StateVector], dim_s: int) -> Operator:
    """Joint-space element `I_S ⊗ P_X` of the disjunction `∨_{i∈X} φ_i`.

    `P_X` projects onto the span of the relative states `R_i`, `i ∈ X`. They need not be
    orthogonal: the projector comes from the inverse of their Gram matrix.
    """
    if dim_s < 1:
        raise DimensionError(f"System dimension must be positive, got {dim_s}.")
    return operator_tensor(Operator.identity(dim_s), general_projector(rel_states))


def disjunction_probability(decomp: RelativeStateDecomposition, members: Iterable[int]) -> float:
    """Probability of `∨_{i∈X} φ_i` on the decomposed joint state.

    Components of `X` contribute their full weight `|a_i|²`. Components outside `X` still
    contribute `|a_i|² ⟨R_i|P_X|R_i⟩` whenever `R_i` overlaps the span of the members.
    Members with an undefined relative state (zero amplitude) are ignored.

    :raises LabelError: If a member is out of range or no member has a defined relative state.
    """
    members = sorted(set(members))
    if any(not 0 <= i < decomp.dim_s for i in members):
        raise LabelError(f"Disjunction members {members} out of range for {decomp.dim_s} components.")

    rel_states = [decomp.rel_states[i] for i in members]
    defined = [r for r in rel_states if r is not None]
    if not defined:
        raise LabelError(f"No member of {members} has a defined relative state.")
    return relative_state_probability(decomp, general_projector(defined))
