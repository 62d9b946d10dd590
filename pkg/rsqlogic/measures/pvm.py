from dataclasses import dataclass
from typing import AbstractSet
from typing import FrozenSet
from typing import Iterable
from typing import List
from typing import Sequence
from typing import Tuple
from typing import Union

from ..config import get_effective_tolerances as TOL
from ..errors import DimensionError
from ..errors import HermiticityError
from ..errors import LabelError
from ..errors import UnitarityError
from ..hilbert import check_orthonormal
from ..hilbert import Operator
from ..hilbert import outer_product
from ..hilbert import StateVector
from .born import born_probability
from .born import check_projector
from .density import DensityMatrix

Label = FrozenSet[int]


@dataclass(frozen=True, eq=False)
class Pvm:
    """Projection valued measure generated by a partition of the index set `Λ`.

    Each cell of the partition carries an orthogonal projector. Any union of cells is a valid
    label, with element equal to the sum of its cells' projectors; the empty label gives the
    zero operator and `Λ` gives the identity.

    :param cells: Disjoint, non-empty subsets of `Λ` covering it.
    :param projectors: One projector per cell, in the same order.
    """

    cells: Tuple[Label, ...]
    projectors: Tuple[Operator, ...]

    def __post_init__(self) -> None:
        cells = tuple(frozenset(c) for c in self.cells)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "projectors", tuple(self.projectors))

        if not cells or len(cells) != len(self.projectors):
            raise LabelError("A PVM needs one projector per cell and at least one cell.")
        if any(not c for c in cells) or sum(len(c) for c in cells) != len(frozenset().union(*cells)):
            raise LabelError("PVM cells must be non-empty and pairwise disjoint.")
        if len({p.entries.shape for p in self.projectors}) != 1 or not self.projectors[0].is_square:
            raise DimensionError("PVM projectors must be square and share one dimension.")

        for projector in self.projectors:
            if not check_projector(projector).is_projector:
                raise HermiticityError("Every PVM element must be self-adjoint and idempotent.")
        for a in range(len(self.projectors)):
            for b in range(a + 1, len(self.projectors)):
                if (self.projectors[a] @ self.projectors[b]).distance(Operator.zero(self.dim)) > TOL().idem:
                    raise UnitarityError(f"PVM elements for cells {a} and {b} are not orthogonal.")

        total = sum(self.projectors[1:], self.projectors[0])
        if total.distance(Operator.identity(self.dim)) > TOL().idem:
            raise UnitarityError("PVM elements must sum to the identity.")

    @property
    def dim(self) -> int:
        return self.projectors[0].dim

    @property
    def index_set(self) -> Label:
        """:returns: `Λ`, the union of every cell."""
        return frozenset().union(*self.cells)

    def element(self, label: Iterable[int]) -> Operator:
        """:returns: `Π_X` for a label `X` that is a union of cells.
        :raises LabelError: If `X` is not a subset of `Λ` or splits a cell."""
        x = frozenset(label)
        if not x <= self.index_set:
            raise LabelError(f"Label {sorted(x)} is not a subset of the index set {sorted(self.index_set)}.")

        result = Operator.zero(self.dim)
        for cell, projector in zip(self.cells, self.projectors):
            if cell <= x:
                result = result + projector
            elif cell & x:
                raise LabelError(f"Label {sorted(x)} splits the cell {sorted(cell)}.")
        return result

    def probabilities(self, state: Union[StateVector, DensityMatrix]) -> List[float]:
        """:returns: The Born probability of each cell, in order."""
        return [born_probability(state, p) for p in self.projectors]

    @staticmethod
    def from_projectors(projectors: Sequence[Operator]) -> "Pvm":
        """:returns: A PVM whose cell `{k}` carries the `k`-th projector."""
        return Pvm(tuple(frozenset({k}) for k in range(len(projectors))), tuple(projectors))

    @staticmethod
    def binary(projector: Operator) -> "Pvm":
        """:returns: The complementary pair `{Π, I − Π}` with cells `{0}` and `{1}`."""
        return Pvm.from_projectors([projector, Operator.identity(projector.dim) - projector])


def pvm_from_basis(basis: Sequence[StateVector], partition: Sequence[AbstractSet[int]]) -> Pvm:
    """Build `Π_X = Σ_{i∈X} |φ_i⟩⟨φ_i|` for every cell `X` of a partition of the basis indices.

    :raises UnitarityError: If the basis is not orthonormal and complete.
    :raises LabelError: If the partition does not cover `Λ = {0, ..., n-1}` disjointly.
    """
    check_orthonormal(basis)
    dim = basis[0].dim if basis else 0
    if len(basis) != dim:
        raise UnitarityError(f"Basis of {len(basis)} vectors is not complete in dimension {dim}.")

    cells = [frozenset(c) for c in partition]
    if sum(len(c) for c in cells) != dim or frozenset().union(*cells) != frozenset(range(dim)):
        raise LabelError(f"Partition {[sorted(c) for c in cells]} does not cover {{0..{dim - 1}}} disjointly.")

    projectors = []
    for cell in cells:
        element = Operator.zero(dim)
        for i in sorted(cell):
            element = element + outer_product(basis[i], basis[i])
        projectors.append(element)
    return Pvm(tuple(cells), tuple(projectors))


def element_product(pvm: Pvm, x: Iterable[int], y: Iterable[int]) -> Operator:
    """Product rule `Π_X Π_Y = Π_{X∩Y}` (which also shows that PVM elements commute)."""
    x, y = frozenset(x), frozenset(y)
    for label in (x, y):
        pvm.element(label)  # raises on unknown labels
    return pvm.element(x & y)


def element_union(pvm: Pvm, x: Iterable[int], y: Iterable[int]) -> Operator:
    """Union rule `Π_X + Π_Y − Π_{X∩Y} = Π_{X∪Y}`."""
    x, y = frozenset(x), frozenset(y)
    return pvm.element(x) + pvm.element(y) - pvm.element(x & y)


def element_complement(pvm: Pvm, x: Iterable[int]) -> Operator:
    """:returns: `I − Π_X`, the element of the complementary label `Λ \\ X`."""
    return Operator.identity(pvm.dim) - pvm.element(x)
