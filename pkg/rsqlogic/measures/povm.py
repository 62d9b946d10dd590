from dataclasses import dataclass
from typing import List
from typing import Tuple
from typing import Union

from ..errors import DimensionError
from ..errors import UnitarityError
from ..hilbert import hermitian_eigenvalues
from ..hilbert import Operator
from ..hilbert import StateVector
from .born import born_probability
from .density import DensityMatrix

# Maximum deviation of the summed elements from the identity
COMPLETENESS_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class Povm:
    """Positive operator-valued measure: PSD elements summing to the identity.

    :param elements: The measurement elements `F_k`, validated on construction.
    """

    elements: Tuple[Operator, ...]

    def __post_init__(self) -> None:
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        if not elements:
            raise DimensionError("A POVM needs at least one element.")
        if len({e.entries.shape for e in elements}) != 1 or not elements[0].is_square:
            raise DimensionError("POVM elements must be square and share one dimension.")

        for element in elements:
            hermitian_eigenvalues(element, psd=True)
        if self.completeness_defect() > COMPLETENESS_TOLERANCE:
            raise UnitarityError(f"POVM elements do not sum to the identity (defect {self.completeness_defect():.3g}).")

    @property
    def dim(self) -> int:
        return self.elements[0].dim

    def completeness_defect(self) -> float:
        """:returns: `‖Σ F_k − I‖∞`."""
        total = sum(self.elements[1:], self.elements[0])
        return total.distance(Operator.identity(self.dim))

    def probabilities(self, state: Union[StateVector, DensityMatrix]) -> List[float]:
        return [born_probability(state, e) for e in self.elements]
