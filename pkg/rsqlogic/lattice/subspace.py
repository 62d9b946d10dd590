from dataclasses import dataclass
from typing import Any
from typing import Dict
from typing import Sequence

import numpy as np

from ..config import get_effective_tolerances as TOL
from ..errors import DimensionError
from ..errors import UnitarityError
from ..hilbert import hermitian_eigh
from ..hilbert import Operator
from ..hilbert import StateVector

# Two subspaces are equal when their projectors agree within this sup-norm distance
EQUALITY_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class Subspace:
    """Closed subspace of `C^ambient_dim` stored through an orthonormal basis.

    :param ambient_dim: Dimension of the surrounding Hilbert space.
    :param basis: Matrix whose columns are the orthonormal basis vectors (may have zero columns).
    """

    ambient_dim: int
    basis: np.ndarray

    def __post_init__(self) -> None:
        basis = np.array(self.basis, dtype=complex)
        if basis.ndim != 2 or basis.shape[0] != self.ambient_dim:
            raise DimensionError(f"Basis of shape {basis.shape} in a {self.ambient_dim}-dim space.")
        rank = basis.shape[1]
        if rank > self.ambient_dim:
            raise DimensionError(f"Rank {rank} exceeds ambient dimension {self.ambient_dim}.")
        if rank and np.max(np.abs(basis.conj().T @ basis - np.eye(rank))) > TOL().norm:
            raise UnitarityError("Subspace basis vectors must be orthonormal.")
        basis.flags.writeable = False
        object.__setattr__(self, "basis", basis)

    @property
    def rank(self) -> int:
        return int(self.basis.shape[1])

    @property
    def is_null(self) -> bool:
        return self.rank == 0

    @property
    def is_full(self) -> bool:
        return self.rank == self.ambient_dim

    @property
    def projector(self) -> Operator:
        """:returns: The orthogonal projector `Σ |b_k⟩⟨b_k|` onto this subspace."""
        return Operator(self.basis @ self.basis.conj().T)

    def probability(self, state: StateVector) -> float:
        """:returns: `⟨ψ|P|ψ⟩`, the probability that `state` answers yes to this subspace."""
        if state.dim != self.ambient_dim:
            raise DimensionError(f"State of dimension {state.dim} in a {self.ambient_dim}-dim lattice.")
        return float(np.sum(np.abs(self.basis.conj().T @ state.amps) ** 2))

    def equals(self, other: "Subspace", tolerance: float = EQUALITY_TOLERANCE) -> bool:
        """Subspaces are compared through their projectors, bases being non-unique."""
        _require_same_ambient(self, other)
        return self.projector.distance(other.projector) < tolerance

    @staticmethod
    def null(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, np.zeros((ambient_dim, 0), dtype=complex))

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, np.eye(ambient_dim, dtype=complex))

    def to_dict(self) -> Dict[str, Any]:
        return {"ambient_dim": self.ambient_dim, "rank": self.rank}

    def __repr__(self) -> str:
        return f"Subspace(rank={self.rank}, ambient_dim={self.ambient_dim})"


def _require_same_ambient(*subspaces: Subspace) -> None:
    dims = {s.ambient_dim for s in subspaces}
    if len(dims) != 1:
        raise DimensionError(f"Subspaces live in different ambient dimensions {sorted(dims)}.")


def _span_columns(columns: np.ndarray, ambient_dim: int) -> Subspace:
    """Orthonormalize the columns with an SVD, keeping singular values above `rank`."""
    if columns.shape[1] == 0:
        return Subspace.null(ambient_dim)
    u, singular_values, _ = np.linalg.svd(columns, full_matrices=False)
    rank = int(np.sum(singular_values > TOL().rank))
    return Subspace(ambient_dim, u[:, :rank])


def _eigenspace(projector_like: Operator, threshold: float) -> np.ndarray:
    """:returns: Columns spanning the eigenvectors with eigenvalue at least `threshold`."""
    values, vectors = hermitian_eigh(projector_like)
    return np.asarray(vectors[:, values >= threshold])


def span(vectors: Sequence[StateVector], ambient_dim: int) -> Subspace:
    """:returns: The subspace spanned by `vectors`, duplicates and dependent vectors collapsed."""
    for v in vectors:
        if v.dim != ambient_dim:
            raise DimensionError(f"Vector of dimension {v.dim} in a {ambient_dim}-dim space.")
    columns = np.column_stack([v.amps for v in vectors]) if vectors else np.zeros((ambient_dim, 0))
    return _span_columns(columns, ambient_dim)


def meet(a: Subspace, b: Subspace) -> Subspace:
    """Intersection `a ∧ b`: the eigenvalue-1 eigenspace of `P_a P_b P_a`."""
    _require_same_ambient(a, b)
    if a.is_null or b.is_null:
        return Subspace.null(a.ambient_dim)
    sandwich = a.projector @ b.projector @ a.projector
    return _span_columns(_eigenspace(sandwich, 1 - TOL().rank), a.ambient_dim)


def join(a: Subspace, b: Subspace) -> Subspace:
    """Sum `a ∨ b`: the span of both bases."""
    _require_same_ambient(a, b)
    return _span_columns(np.hstack([a.basis, b.basis]), a.ambient_dim)


def orthocomplement(a: Subspace) -> Subspace:
    """:returns: `a⊥`, spanned by the eigenvalue-1 eigenvectors of `I - P_a`."""
    if a.is_null:
        return Subspace.full(a.ambient_dim)
    if a.is_full:
        return Subspace.null(a.ambient_dim)
    complement = Operator.identity(a.ambient_dim) - a.projector
    return _span_columns(_eigenspace(complement, 0.5), a.ambient_dim)


def is_below(a: Subspace, b: Subspace, tolerance: float = EQUALITY_TOLERANCE) -> bool:
    """Partial order `a ⊆ b`, tested as `P_a P_b = P_a`."""
    _require_same_ambient(a, b)
    return (a.projector @ b.projector).distance(a.projector) < tolerance


@dataclass(frozen=True)
class DistributivityCheck:
    """Both sides of `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` and whether they agree."""

    lhs: Subspace
    rhs: Subspace
    equal: bool

    def to_dict(self) -> Dict[str, Any]:
        return {"lhs_rank": self.lhs.rank, "rhs_rank": self.rhs.rank, "equal": self.equal}


def check_distributivity(a: Subspace, b: Subspace, c: Subspace) -> DistributivityCheck:
    """Evaluate the distributive law of meet over join for three subspaces."""
    _require_same_ambient(a, b, c)
    lhs = meet(a, join(b, c))
    rhs = join(meet(a, b), meet(a, c))
    return DistributivityCheck(lhs, rhs, lhs.equals(rhs))
